"""Torsion coefficient staircases, computed from two independent sides.

Knot side: a symmetric polynomial in lens-space normal form is encoded by
its strictly decreasing positive exponent sequence n_1 > ... > n_r, with
coefficient (-1)^(j-1) at degree n_j and (-1)^r at degree 0.  The torsion
coefficients are the weighted tail sums t_i = sum_{j>=1} j * a_{i+j}.

Lattice side: for a changemaker sigma with |<sigma, sigma>| = p, t_i is
the least level k such that some all-odd vector c with
sum(c_j^2) = (n+1) + 8k satisfies sum(c_j sigma_j) = p - 2i (mod 2p).
Two implementations are provided: an ascending scan over odd-square
multisets (the reference, min_level_by_scan) and a residue-indexed
min-cost dynamic program whose coordinate bound is grown until it
provably covers every optimal solution (the fast path).  Both are exact
and the test suite plays them against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .changemaker import (
    CharacteristicVector,
    as_changemaker,
    subset_representation,
)
from .errors import CapacityError

_INF = 1 << 62


@dataclass(frozen=True)
class AlexanderExponents:
    """Strictly decreasing positive exponents; empty means the unknot.

    With lens_space=True the second exponent must sit one below the
    first (the constraint satisfied by knots with lens space surgeries);
    without the flag the type carries arbitrary test polynomials.
    """

    exponents: tuple[int, ...]
    lens_space: bool = False

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        exps = self.exponents
        if any(x <= 0 for x in exps):
            raise ValueError("exponents must be positive")
        if any(a <= b for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly decreasing")
        if self.lens_space and len(exps) >= 2 and exps[1] != exps[0] - 1:
            raise ValueError("second exponent must be genus - 1")

    @property
    def genus(self) -> int:
        return self.exponents[0] if self.exponents else 0

    @property
    def r(self) -> int:
        return len(self.exponents)


def _as_exponents(ae) -> AlexanderExponents:
    if isinstance(ae, AlexanderExponents):
        return ae
    return AlexanderExponents(tuple(ae))


def coefficients(ae) -> dict[int, int]:
    """Symmetric coefficient map: (-1)^(j-1) at +-n_j and (-1)^r at 0."""
    ae = _as_exponents(ae)
    coeff = {0: (-1) ** ae.r}
    for j, n in enumerate(ae.exponents):
        coeff[n] = coeff[-n] = (-1) ** j
    return coeff


def torus_knot_exponents(g: int) -> AlexanderExponents:
    """(g, g-1, ..., 1), the exponent ladder of the (2, 2g+1) torus knot."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return AlexanderExponents(tuple(range(g, 0, -1)), lens_space=True)


def torsion_from_alexander(ae, i: int) -> int:
    """t_i = sum_{j>=1} j * a_{i+j}; zero once i reaches the genus."""
    ae = _as_exponents(ae)
    if i < 0:
        raise ValueError("index must be non-negative")
    coeff = coefficients(ae)
    return sum(j * coeff.get(i + j, 0) for j in range(1, ae.genus - i + 1))


def torsion_difference(ae, i: int) -> int:
    """Alternating count over exponents >= i+1; equals t_i - t_{i+1}."""
    ae = _as_exponents(ae)
    if i < 0:
        raise ValueError("index must be non-negative")
    return sum((-1) ** j for j, n in enumerate(ae.exponents) if n >= i + 1)


class TorsionSequence:
    """Canonical staircase t_0 >= t_1 >= ... >= t_g = 0 with unit steps.

    Trailing zeros beyond the first are trimmed, so values[-1] == 0 and,
    for g >= 1, values[-2] >= 1.  Entries past the end are implicitly 0.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        vals = [int(v) for v in values]
        if not vals:
            raise ValueError("torsion sequence must be non-empty")
        if vals[-1] != 0:
            raise ValueError("sequence must terminate at 0")
        if any(v < 0 for v in vals):
            raise ValueError("torsion coefficients are non-negative")
        if any(a - b not in (0, 1) for a, b in zip(vals, vals[1:])):
            raise ValueError("consecutive differences must be 0 or 1")
        while len(vals) >= 2 and vals[-2] == 0:
            vals.pop()
        self.values = tuple(vals)

    @property
    def genus(self) -> int:
        return len(self.values) - 1

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, TorsionSequence):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"TorsionSequence({list(self.values)})"


def exponents_from_torsion(ts) -> AlexanderExponents:
    """Invert the staircase.

    Each unit step t_i - t_{i+1} reveals the parity of the number of
    exponents above i; since that count moves by at most one per index
    and finishes at 1 just below the genus, the parities pin it down,
    and with it the exponent set.
    """
    seq = ts if isinstance(ts, TorsionSequence) else TorsionSequence(ts)
    g = seq.genus
    if g == 0:
        return AlexanderExponents(())
    vals = seq.values
    steps = [vals[i] - vals[i + 1] for i in range(g)]
    above = [0] * (g + 1)  # above[i] = number of exponents exceeding i
    above[g - 1] = 1
    for i in range(g - 2, -1, -1):
        above[i] = above[i + 1] + ((above[i + 1] ^ steps[i]) & 1)
    exps = tuple(i + 1 for i in range(g - 1, -1, -1) if above[i] > above[i + 1])
    result = AlexanderExponents(exps)
    if tuple(torsion_from_alexander(result, i) for i in range(g + 1)) != vals:
        raise AssertionError("staircase inversion failed to round-trip")
    return result


def genus_from_changemaker(sigma) -> int:
    """g = (p - |sigma|_1) / 2, a non-negative integer for changemakers."""
    cm = as_changemaker(sigma)
    if cm.sigma[0] != 1:
        raise ValueError("genus formula needs sigma_0 = 1")
    diff = cm.p - cm.one_norm
    if diff % 2:
        raise ArithmeticError("p - |sigma|_1 must be even; invariant violated")
    return diff // 2


def _validate_index(cm, i: int) -> None:
    if cm.sigma[0] != 1:
        raise ValueError("torsion formula needs sigma_0 = 1")
    if not 0 <= i <= cm.p // 2:
        raise ValueError(f"index {i} outside [0, {cm.p // 2}]")


# ---------------------------------------------------------------------------
# Reference implementation: ascending scan over odd-square multisets.


def _odd_square_multisets(total: int, count: int, largest: int | None = None):
    """Nonincreasing tuples of `count` odd positives whose squares sum to
    total."""
    if count == 0:
        if total == 0:
            yield ()
        return
    if total < count:
        return
    top = math.isqrt(total - (count - 1))
    if largest is not None:
        top = min(top, largest)
    if top % 2 == 0:
        top -= 1
    for v in range(top, 0, -2):
        for rest in _odd_square_multisets(total - v * v, count - 1, v):
            yield (v,) + rest


def characteristic_residues(sigma, level: int) -> frozenset[int]:
    """All values of sum(c_j sigma_j) mod 2p over all-odd vectors c of the
    given level.

    Reference path: enumerate the odd-square multisets, then assign values
    to coordinates with a remaining-multiset dynamic program, tracking the
    reachable residues.
    """
    cm = as_changemaker(sigma)
    if cm.p == 0:
        raise ValueError("sigma must be nonzero")
    if level < 0:
        raise ValueError("level must be non-negative")
    sig = cm.sigma
    n1 = len(sig)
    modulus = 2 * cm.p
    out: set[int] = set()
    for multiset in _odd_square_multisets(n1 + 8 * level, n1):
        states: dict[tuple[int, ...], set[int]] = {multiset: {0}}
        for s in sig:
            nxt: dict[tuple[int, ...], set[int]] = {}
            for ms, residues in states.items():
                seen: set[int] = set()
                for idx, v in enumerate(ms):
                    if v in seen:
                        continue
                    seen.add(v)
                    rest = ms[:idx] + ms[idx + 1 :]
                    bucket = nxt.setdefault(rest, set())
                    for r in residues:
                        bucket.add((r + v * s) % modulus)
                        bucket.add((r - v * s) % modulus)
            states = nxt
        for residues in states.values():  # only the empty multiset remains
            out |= residues
    return frozenset(out)


def min_level_by_scan(sigma, i: int, cap: int | None = None) -> int:
    """Ascending reference search for the minimum characteristic level."""
    cm = as_changemaker(sigma)
    _validate_index(cm, i)
    target = (cm.p - 2 * i) % (2 * cm.p)
    limit = cm.p if cap is None else cap
    for k in range(limit + 1):
        if target in characteristic_residues(cm, k):
            return k
    raise CapacityError(f"no characteristic vector found up to level {limit}")


# ---------------------------------------------------------------------------
# Fast exact paths: subset-sum bitsets for levels 0 and 1, and a certified
# min-cost dynamic program for whole staircases.


def _signed_sum_hits(values, total: int, target: int, modulus: int) -> bool:
    """Is target (mod modulus) realized by some sum of +-v over the values?"""
    bits = 1
    for v in values:
        bits |= bits << v
    w = target % modulus
    while w > total:
        w -= modulus
    while w >= -total:
        if (total - w) % 2 == 0 and (bits >> ((total - w) // 2)) & 1:
            return True
        w -= modulus
    return False


def torsion_at_most(sigma, i: int, level: int) -> bool:
    """Exact check that the minimum characteristic level at index i is
    <= level.

    Levels 0 and 1 run on subset-sum bitsets (one tripled coordinate per
    distinct entry value covers level 1); higher levels fall back to the
    multiset scan.
    """
    cm = as_changemaker(sigma)
    _validate_index(cm, i)
    if level < 0:
        return False
    sig = cm.sigma
    modulus = 2 * cm.p
    target = (cm.p - 2 * i) % modulus
    if _signed_sum_hits(sig, cm.one_norm, target, modulus):
        return True
    if level == 0:
        return False
    seen: set[int] = set()
    for idx, v in enumerate(sig):
        if v in seen:
            continue
        seen.add(v)
        rest = sig[:idx] + sig[idx + 1 :] + (3 * v,)
        if _signed_sum_hits(rest, cm.one_norm + 2 * v, target, modulus):
            return True
    if level == 1:
        return False
    for k in range(2, level + 1):
        if target in characteristic_residues(cm, k):
            return True
    return False


def _min_costs(sig: tuple[int, ...], modulus: int, bound: int) -> np.ndarray:
    """dp[r] = min sum of squares over odd vectors with |entries| <= bound
    and sum(c_j sigma_j) = r (mod modulus)."""
    dp = np.full(modulus, _INF, dtype=np.int64)
    dp[0] = 0
    for s in sig:
        best = np.full(modulus, _INF, dtype=np.int64)
        for a in range(1, bound + 1, 2):
            cost = a * a
            for signed in (a * s, -a * s):
                cand = np.roll(dp, signed % modulus)
                cand += cost
                np.minimum(best, cand, out=best)
        dp = best
    return dp


@lru_cache(maxsize=512)
def _staircase_cached(sig: tuple[int, ...]) -> tuple[int, ...]:
    p = sum(x * x for x in sig)
    one = sum(sig)
    g = (p - one) // 2
    n1 = len(sig)
    modulus = 2 * p
    needed = [(p - 2 * i) % modulus for i in range(g + 1)]
    cost_cap = n1 + 8 * p  # level safety cap: k <= p
    bound = max(3, math.isqrt(4 * g + n1)) | 1
    while True:
        costs = _min_costs(sig, modulus, bound)
        picked = [int(costs[r]) for r in needed]
        if all(c < _INF for c in picked):
            worst = max(picked)
            # In any optimal vector every other coordinate contributes at
            # least 1, so entries are bounded by sqrt(cost - (n+1) + 1);
            # once `bound` covers that, the dp values are provably minimal.
            required = math.isqrt(worst - n1 + 1)
            if bound >= required:
                levels = []
                for c in picked:
                    if (c - n1) % 8:
                        raise AssertionError("characteristic cost parity broken")
                    levels.append((c - n1) // 8)
                if max(levels) > p:
                    raise CapacityError("torsion level exceeded the safety cap p")
                return tuple(levels)
            bound = required | 1
        else:
            if bound * bound > cost_cap:
                raise CapacityError(
                    "no characteristic vector within the level cap"
                )
            bound = (min(2 * bound + 1, math.isqrt(cost_cap) + 2)) | 1


def torsion_staircase(sigma) -> tuple[int, ...]:
    """(t_0, ..., t_g) computed on the lattice side in one certified pass."""
    cm = as_changemaker(sigma)
    if cm.sigma[0] != 1:
        raise ValueError("staircase needs sigma_0 = 1")
    return _staircase_cached(cm.sigma)


def torsion_from_changemaker(sigma, i: int) -> int:
    """Minimum characteristic level meeting the congruence at index i."""
    cm = as_changemaker(sigma)
    _validate_index(cm, i)
    g = genus_from_changemaker(cm)
    if i > g:
        # beyond the genus the subset-sum property supplies a level-0 vector
        return 0
    return _staircase_cached(cm.sigma)[i]


def lemma4_witness(sigma) -> CharacteristicVector:
    """Level-1 vector whose pairing against sigma lands exactly at 2g - 6.

    Writes -1 on a greedy subset paying sigma_t - 3, +3 at t (the first
    entry >= 3), and +1 elsewhere; the defining inequalities make the
    greedy subset avoid t, and the identity
    p + <c, sigma> = p - |sigma|_1 - 6 follows by expanding the pairing.
    """
    cm = as_changemaker(sigma)
    sig = cm.sigma
    t = next((idx for idx, v in enumerate(sig) if v >= 3), None)
    if t is None:
        raise ValueError("witness inapplicable: no entry >= 3")
    chosen = set(subset_representation(cm, sig[t] - 3))
    if t in chosen:
        raise AssertionError("greedy subset must avoid the tripled index")
    coords = [-1 if j in chosen else 1 for j in range(len(sig))]
    coords[t] = 3
    witness = CharacteristicVector(tuple(coords))
    if witness.level != 1:
        raise AssertionError("witness level must be 1")
    pairing = -sum(c * s for c, s in zip(witness.coords, sig))
    if cm.p + pairing != cm.p - cm.one_norm - 6:
        raise AssertionError("witness pairing identity failed")
    return witness
