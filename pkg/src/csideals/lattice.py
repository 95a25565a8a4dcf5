"""Integer lattice kernels for rank-3 lattices.

Row convention throughout: a lattice is spanned by the rows of a matrix.
Hermite normal form is lower triangular with positive diagonal and the
entries left of each pivot reduced into [0, pivot).
"""
from __future__ import annotations

import math
from typing import Iterator, Sequence

Matrix = list[list[int]]


class RankError(ValueError):
    """The rows do not span a full-rank lattice."""


def _eliminate_column(pool: list[list[int]], col: int) -> list[int] | None:
    """gcd-combine the pool rows on column `col`; return the pivot row.

    The pivot row is removed from `pool`; every remaining row ends with a
    zero in that column.
    """
    while True:
        nz = [r for r in pool if r[col]]
        if not nz:
            return None
        piv = min(nz, key=lambda r: abs(r[col]))
        if len(nz) == 1:
            pool.remove(piv)
            if piv[col] < 0:
                piv = [-x for x in piv]
            return piv
        p = piv[col]
        for r in nz:
            if r is piv:
                continue
            q = r[col] // p
            if q:
                for i in range(len(r)):
                    r[i] -= q * piv[i]


def hnf(rows: Sequence[Sequence[int]], dim: int = 3) -> Matrix:
    """Lower-triangular Hermite normal form of a full-rank lattice."""
    pool = [list(r) for r in rows if any(r)]
    pivots: list[list[int] | None] = [None] * dim
    for col in range(dim - 1, -1, -1):
        piv = _eliminate_column(pool, col)
        if piv is None:
            raise RankError("lattice is not of full rank")
        pivots[col] = piv
    h = [list(p) for p in pivots]  # type: ignore[arg-type]
    for i in range(1, dim):
        for j in range(i - 1, -1, -1):
            q = h[i][j] // h[j][j]
            if q:
                for t in range(j + 1):
                    h[i][t] -= q * h[j][t]
    return h


def hnf_mod(rows: Sequence[Sequence[int]], modulus: int, dim: int = 3) -> Matrix:
    """HNF of a lattice known to contain modulus * Z^dim.

    Entries are reduced modulo `modulus` first, which keeps intermediate
    numbers small.
    """
    m = abs(modulus)
    reduced = [[x % m for x in r] for r in rows]
    for i in range(dim):
        e = [0] * dim
        e[i] = m
        reduced.append(e)
    return hnf(reduced, dim)


def echelon_kernel(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> Matrix:
    """Rows of `right` combinations whose matching `left` combination is zero.

    Given paired rows [left_i | right_i], returns a basis for
    {sum u_i right_i : sum u_i left_i = 0}.
    """
    k = len(left[0])
    pool = [list(a) + list(b) for a, b in zip(left, right)]
    for col in range(k):
        _eliminate_column(pool, col)
    return [r[k:] for r in pool if any(r[k:])]


def kernel_mod(p: Sequence[Sequence[int]], modulus: int) -> Matrix:
    """HNF basis of {z in Z^3 : z p = 0 mod modulus} for a 3 x k matrix p."""
    k = len(p[0])
    left = [list(r) for r in p]
    right = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for j in range(k):
        row = [0] * k
        row[j] = modulus
        left.append(row)
        right.append([0, 0, 0])
    return hnf(echelon_kernel(left, right))


def solve_lower(h: Sequence[Sequence[int]], v: Sequence[int]) -> list[int] | None:
    """Integer z with z h = v for lower-triangular h, or None if v is not in the lattice."""
    v = list(v)
    dim = len(v)
    z = [0] * dim
    for i in range(dim - 1, -1, -1):
        q, r = divmod(v[i], h[i][i])
        if r:
            return None
        z[i] = q
        if q:
            for t in range(i + 1):
                v[t] -= q * h[i][t]
    return z


def lattice_product_rows(h: Sequence[Sequence[int]], z: Sequence[int]) -> list[int]:
    dim = len(h[0])
    return [sum(z[i] * h[i][j] for i in range(len(z))) for j in range(dim)]


def content(rows: Sequence[Sequence[int]]) -> int:
    g = 0
    for r in rows:
        for x in r:
            g = math.gcd(g, x)
    return g


# ---------------------------------------------------------------------------
# Floating-point reduction on integer bases


def lll(basis: Matrix, embed, delta: float = 0.99) -> Matrix:
    """LLL-reduce integer rows with respect to the real embedding `embed`.

    `embed` maps an integer row to a real vector; the reduction is done on
    the embedded vectors while the integer rows are transformed exactly.
    The embedding is recomputed from the exact rows after every update, so
    rounding never accumulates.
    """
    b = [list(r) for r in basis]
    k = len(b)
    vecs = [embed(r) for r in b]

    def gso():
        bstar: list[list[float]] = []
        mu = [[0.0] * k for _ in range(k)]
        norms = []
        for i in range(k):
            v = list(vecs[i])
            for j in range(i):
                mu[i][j] = _dot(vecs[i], bstar[j]) / norms[j] if norms[j] else 0.0
                v = [a - mu[i][j] * c for a, c in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(_dot(v, v))
        return mu, norms

    i = 1
    guard = 0
    while i < k:
        guard += 1
        if guard > 10000:
            break
        mu, norms = gso()
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                vecs[i] = embed(b[i])
                mu, norms = gso()
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            vecs[i], vecs[i - 1] = vecs[i - 1], vecs[i]
            i = max(i - 1, 1)
    return b


def _dot(a, b) -> float:
    return sum(x * y for x, y in zip(a, b))


def short_vectors(vecs: Sequence[Sequence[float]], bound: float,
                  limit: int | None = None, stats: dict | None = None) -> Iterator[tuple[int, ...]]:
    """Fincke-Pohst: integer v with |sum v_i vecs_i|^2 <= bound, up to sign.

    Yields each nonzero solution once (the sign with the last nonzero
    coefficient positive).  Raises OverflowError once more than `limit`
    enumeration nodes have been visited.  The node count is written to
    stats["nodes"] when `stats` is given.
    """
    k = len(vecs)
    g = [[_dot(vecs[i], vecs[j]) for j in range(k)] for i in range(k)]
    # q[i][i] = squared GS norms, q[i][j] (j > i) = mu coefficients
    q = [row[:] for row in g]
    for i in range(k):
        for j in range(i + 1, k):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for m in range(i + 1, k):
            for j in range(m, k):
                q[m][j] -= q[m][i] * q[i][j]
    for i in range(k):
        if q[i][i] <= 0:
            raise ValueError("degenerate lattice in enumeration")

    x = [0] * k
    nodes = 0

    def rec(i: int, remaining: float, top_zero: bool):
        nonlocal nodes
        center = -sum(q[i][j] * x[j] for j in range(i + 1, k))
        span = math.sqrt(max(remaining, 0.0) / q[i][i])
        lo = math.ceil(center - span - 1e-9)
        hi = math.floor(center + span + 1e-9)
        if top_zero:
            lo = max(lo, 0)
        for v in range(lo, hi + 1):
            nodes += 1
            if stats is not None:
                stats["nodes"] = nodes
            if limit is not None and nodes > limit:
                raise OverflowError("enumeration limit exceeded")
            t = v - center
            rest = remaining - q[i][i] * t * t
            if rest < -1e-9 * max(bound, 1.0):
                continue
            x[i] = v
            if i == 0:
                if any(x):
                    yield tuple(x)
            else:
                yield from rec(i - 1, rest, top_zero and v == 0)
        x[i] = 0

    yield from rec(k - 1, bound, True)
