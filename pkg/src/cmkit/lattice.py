"""Exact arithmetic in the negative definite standard lattice.

Vectors are tuples of integers giving coordinates over an orthonormal
basis e_0, ..., e_n with <e_i, e_j> = -1 if i == j and 0 otherwise.
Everything is exact: Python integers and Fractions only, never floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CapacityError

Vector = tuple[int, ...]
Gram = tuple[tuple[int, ...], ...]

#: Default rank ceiling for the exhaustive isometry search.
ISOMETRY_MAX_RANK = 5


def _as_vector(v) -> Vector:
    vec = tuple(int(x) for x in v)
    if not vec:
        raise ValueError("vector must have at least one coordinate")
    return vec


def as_gram(matrix) -> Gram:
    """Coerce to a square symmetric integer matrix (tuple of tuples)."""
    g = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(g)
    if n == 0 or any(len(row) != n for row in g):
        raise ValueError("Gram matrix must be square and non-empty")
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
        raise ValueError("Gram matrix must be symmetric")
    return g


def inner_product(u, v) -> int:
    """The pairing <u, v> = -sum(u_i * v_i)."""
    uu, vv = _as_vector(u), _as_vector(v)
    if len(uu) != len(vv):
        raise ValueError(f"ambient rank mismatch: {len(uu)} != {len(vv)}")
    return -sum(a * b for a, b in zip(uu, vv))


def gram_matrix(basis) -> Gram:
    """Pairing matrix [<v_i, v_j>] of a non-empty list of equal-rank vectors."""
    vecs = [_as_vector(v) for v in basis]
    if not vecs:
        raise ValueError("basis must be non-empty")
    if len({len(v) for v in vecs}) != 1:
        raise ValueError("basis vectors must share an ambient rank")
    return tuple(tuple(inner_product(u, v) for v in vecs) for u in vecs)


def determinant(matrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("matrix must be square and non-empty")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(matrix) -> list[int]:
    """Determinants of the leading principal k x k blocks, k = 1..n."""
    m = [[int(x) for x in row] for row in matrix]
    return [determinant([row[: k + 1] for row in m[: k + 1]]) for k in range(len(m))]


def is_negative_definite(matrix) -> bool:
    """Sylvester test: the k-th leading minor must have sign (-1)^k."""
    try:
        minors = leading_minors(matrix)
    except ValueError:
        return False
    return bool(minors) and all(
        (-1) ** (k + 1) * d > 0 for k, d in enumerate(minors)
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def complement_basis(sigma) -> list[Vector]:
    """Integral basis of the orthogonal complement of sigma.

    Runs a gcd sweep across the coordinates (unimodular column operations
    on the identity), so the returned vectors span the full kernel of the
    functional x -> <x, sigma>, not merely a finite-index sublattice.  For
    sigma with coprime entries the complement Gram matrix therefore has
    |det| = |<sigma, sigma>|.
    """
    sig = _as_vector(sigma)
    if not any(sig):
        raise ValueError("sigma must be nonzero")
    n1 = len(sig)

    def unit(j: int) -> list[int]:
        col = [0] * n1
        col[j] = 1
        return col

    g, gcol = sig[0], unit(0)
    kernel: list[Vector] = []
    for j in range(1, n1):
        v, col = sig[j], unit(j)
        if g == 0 and v == 0:
            kernel.append(tuple(col))
            continue
        g2, x, y = _xgcd(g, v)
        new_gcol = [x * gc + y * cc for gc, cc in zip(gcol, col)]
        kernel.append(
            tuple((v // g2) * gc - (g // g2) * cc for gc, cc in zip(gcol, col))
        )
        g, gcol = g2, new_gcol
    return kernel


def _frac_sqrt_upper(t: Fraction) -> Fraction:
    """A rational upper bound for sqrt(t), t >= 0."""
    return Fraction(math.isqrt(t.numerator * t.denominator) + 1, t.denominator)


def _ldl(a: list[list[int]]):
    """A = L D L^T for positive definite A; unit lower L over Fractions."""
    n = len(a)
    L = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(a[j][j])
        for k in range(j):
            s -= L[j][k] * L[j][k] * d[k]
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        d[j] = s
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            t = Fraction(a[i][j])
            for k in range(j):
                t -= L[i][k] * L[j][k] * d[k]
            L[i][j] = t / d[j]
    return L, d


def short_vectors(gram, norm: int) -> list[Vector]:
    """All integer coordinate vectors x with x^T gram x = -norm.

    gram must be negative definite.  The search intervals come from the
    L D L^T splitting of -gram over Fractions, so the enumeration is
    complete: no solution can fall outside the scanned boxes.  Both
    members of every +-x pair are returned, in a deterministic order.
    """
    g = as_gram(gram)
    if norm <= 0:
        raise ValueError("norm must be a positive integer")
    n = len(g)
    a = [[-g[i][j] for j in range(n)] for i in range(n)]
    L, d = _ldl(a)
    out: list[Vector] = []
    x = [0] * n

    def descend(j: int, rem: Fraction) -> None:
        if j < 0:
            if rem == 0:
                out.append(tuple(x))
            return
        c = sum((L[i][j] * x[i] for i in range(j + 1, n)), Fraction(0))
        bound = _frac_sqrt_upper(rem / d[j])
        lo = math.ceil(-c - bound)
        hi = math.floor(-c + bound)
        for v in range(lo, hi + 1):
            used = d[j] * (v + c) ** 2
            if used <= rem:
                x[j] = v
                descend(j - 1, rem - used)
        x[j] = 0

    descend(n - 1, Fraction(norm))
    return out


def _matvec(m: Gram, v: Vector) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def is_isometric(a, b, max_rank: int = ISOMETRY_MAX_RANK) -> bool:
    """Decide whether two negative definite Gram matrices present isometric
    lattices, by complete search for an integer U with U^T a U = b.

    Candidate columns are drawn from the full finite sets of vectors of the
    required norms, so both answers are certificates: True comes with an
    explicit change of basis, False from exhausting the search space.
    Raises CapacityError for ranks above max_rank.
    """
    ga, gb = as_gram(a), as_gram(b)
    if not is_negative_definite(ga) or not is_negative_definite(gb):
        raise ValueError("both matrices must be negative definite")
    if len(ga) != len(gb):
        return False
    n = len(ga)
    if n > max_rank:
        raise CapacityError(f"isometry search capped at rank {max_rank}, got {n}")
    if determinant(ga) != determinant(gb):
        return False

    norms = sorted({-ga[i][i] for i in range(n)} | {-gb[j][j] for j in range(n)})
    cand = {m: short_vectors(ga, m) for m in norms}
    # Vector counts per norm are isometry invariants; mismatches are cheap
    # rejections that spare the backtracking search below.
    for m in norms:
        if len(cand[m]) != len(short_vectors(gb, m)):
            return False

    paired = {m: [(u, _matvec(ga, u)) for u in cand[m]] for m in norms}
    order = sorted(range(n), key=lambda j: (len(cand[-gb[j][j]]), j))

    def extend(pos: int, placed: list[tuple[int, Vector]]) -> bool:
        if pos == n:
            return True
        j = order[pos]
        for u, au in paired[-gb[j][j]]:
            if all(
                sum(pau[t] * u[t] for t in range(n)) == gb[pj][j]
                for pj, pau in placed
            ):
                if extend(pos + 1, placed + [(j, au)]):
                    return True
        return False

    return extend(0, [])
