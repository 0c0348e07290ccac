"""Changemaker vectors and their combinatorics.

A changemaker is a nondecreasing vector of non-negative integers whose
first entry is 0 or 1 and whose every later entry exceeds the sum of the
earlier ones by at most 1.  For nondecreasing input this is equivalent to
the coin property: every amount from 0 up to the coordinate sum is a
subset sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import CapacityError

#: Default rank ceiling for exhaustive enumeration.
ENUMERATION_MAX_RANK = 10


def is_changemaker(sigma) -> bool:
    """Check the defining inequalities; malformed input returns False."""
    try:
        seq = [int(x) for x in sigma]
    except (TypeError, ValueError):
        return False
    if not seq or seq[0] not in (0, 1):
        return False
    total = seq[0]
    for prev, cur in zip(seq, seq[1:]):
        if cur < prev or cur > total + 1:
            return False
        total += cur
    return True


def coordinate_free_check(sigma) -> bool:
    """Subset-sum form of the changemaker condition.

    True iff the pairings against all +-1 vectors cover every integer of
    the right parity in [-|sigma|_1, |sigma|_1], i.e. iff every amount in
    [0, |sigma|_1] is a subset sum.  Order-insensitive by construction.
    """
    try:
        seq = [int(x) for x in sigma]
    except (TypeError, ValueError):
        return False
    if not seq or any(x < 0 for x in seq):
        return False
    total = sum(seq)
    reach = 1
    for x in seq:
        reach |= reach << x
    full = (1 << (total + 1)) - 1
    return reach & full == full


@dataclass(frozen=True)
class ChangemakerVector:
    """A validated changemaker together with its derived quantities."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(x) for x in self.sigma))
        if not is_changemaker(self.sigma):
            raise ValueError(f"not a changemaker: {list(self.sigma)}")

    @property
    def rank(self) -> int:
        """n, for sigma living in -Z^(n+1)."""
        return len(self.sigma) - 1

    @property
    def p(self) -> int:
        """|<sigma, sigma>|, the sum of squared entries."""
        return sum(x * x for x in self.sigma)

    @property
    def one_norm(self) -> int:
        return sum(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    def __len__(self):
        return len(self.sigma)

    def __getitem__(self, i):
        return self.sigma[i]


def as_changemaker(sigma) -> ChangemakerVector:
    if isinstance(sigma, ChangemakerVector):
        return sigma
    return ChangemakerVector(tuple(sigma))


@dataclass(frozen=True)
class CharacteristicVector:
    """All-odd coordinate vector; its level k satisfies
    sum of squares = (n+1) + 8k."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if not self.coords:
            raise ValueError("characteristic vector must be non-empty")
        if any(x % 2 == 0 for x in self.coords):
            raise ValueError("all coordinates must be odd")

    @property
    def level(self) -> int:
        # odd squares are 1 mod 8, so the division is exact
        return (sum(x * x for x in self.coords) - len(self.coords)) // 8


def subset_representation(sigma, target: int) -> tuple[int, ...]:
    """Indices A (ascending) with sum(sigma[k] for k in A) == target.

    Greedy from the largest index down, skipping zero entries; the
    changemaker inequalities guarantee success for 0 <= target <=
    |sigma|_1, and fixing the greedy choice makes the output
    deterministic.
    """
    cm = as_changemaker(sigma)
    if not 0 <= target <= cm.one_norm:
        raise ValueError(f"target {target} outside [0, {cm.one_norm}]")
    rem = target
    picked = []
    for k in range(len(cm.sigma) - 1, -1, -1):
        if 0 < cm.sigma[k] <= rem:
            picked.append(k)
            rem -= cm.sigma[k]
    if rem:
        raise AssertionError("greedy change-making failed on a changemaker")
    return tuple(reversed(picked))


def iter_changemakers(
    rank: int,
    *,
    max_entry: int | None = None,
    cap: int = ENUMERATION_MAX_RANK,
) -> Iterator[tuple[int, ...]]:
    """Changemakers with sigma_0 = 1 in -Z^(rank+1), lexicographic order.

    max_entry caps each entry below the defining ceiling; by default the
    ceiling itself (1 + the running sum) is the only bound.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if rank > cap:
        raise CapacityError(f"enumeration capped at rank {cap}, got {rank}")

    def extend(prefix: list[int], total: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == rank + 1:
            yield tuple(prefix)
            return
        hi = total + 1
        if max_entry is not None:
            hi = min(hi, max_entry)
        for v in range(prefix[-1], hi + 1):
            prefix.append(v)
            yield from extend(prefix, total + v)
            prefix.pop()

    yield from extend([1], 1)


def enumerate_changemakers(
    rank: int,
    predicate: Callable[[tuple[int, ...]], bool] | None = None,
    *,
    max_entry: int | None = None,
    cap: int = ENUMERATION_MAX_RANK,
) -> list[ChangemakerVector]:
    """Materialized, optionally filtered census at a single rank."""
    out = []
    for sig in iter_changemakers(rank, max_entry=max_entry, cap=cap):
        if predicate is None or predicate(sig):
            out.append(ChangemakerVector(sig))
    return out


def iter_changemakers_with_sums(
    rank: int, cap: int = ENUMERATION_MAX_RANK
) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """(sigma, sum, sum of squares) triples, same order as iter_changemakers.

    The running sums come for free from the enumeration tree; the large
    verification sweeps lean on this to avoid re-summing millions of
    vectors.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if rank > cap:
        raise CapacityError(f"enumeration capped at rank {cap}, got {rank}")
    sig = [1] * (rank + 1)
    last = rank + 1

    def extend(i: int, total: int, sumsq: int):
        if i == last:
            yield tuple(sig), total, sumsq
            return
        for v in range(sig[i - 1], total + 2):
            sig[i] = v
            yield from extend(i + 1, total + v, sumsq + v * v)

    yield from extend(1, 1, 1)
