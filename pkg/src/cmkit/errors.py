"""Shared exception types."""


class CapacityError(ValueError):
    """A request exceeded a configured exact-search capacity.

    Raised loudly instead of silently degrading: every search in this
    package is exhaustive, so capacities are hard limits, not hints.
    """
