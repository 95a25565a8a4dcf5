"""Embeddings, unit groups and unit-reduced lattice point search for Z[theta_n].

Floating point only enters the search bounds.  Every element produced here
is an exact integer triple; callers re-check norms and ideal equalities
exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

import mpmath

from .lattice import lll, short_vectors
from .order import TracedOrder, discriminant, f_eval, mul_coords, norm_coords, pow_coords

MP_DPS = 60
# relative slack on every float bound; true solutions satisfy the bounds exactly
MARGIN = 1e-7
CELL_OVERHEAD = 30.0
DEFAULT_EFFORT = 5_000_000


class SearchLimitExceeded(RuntimeError):
    """The enumeration node budget ran out before the search finished."""

    def __init__(self, nodes: int):
        super().__init__(f"enumeration budget of {nodes} nodes exhausted")
        self.nodes = nodes


# ---------------------------------------------------------------------------
# Roots and embeddings


@dataclass(frozen=True)
class Embeddings:
    n: int
    real_roots: tuple          # mpf values, certified by a sign change
    complex_root: object       # mpc with positive imaginary part, or None

    @property
    def weights(self) -> tuple[int, ...]:
        """1 for each real place, 2 for the complex place."""
        return (1,) * len(self.real_roots) + ((2,) if self.complex_root is not None else ())

    @property
    def rank(self) -> int:
        return len(self.weights) - 1

    def places(self) -> list:
        out = list(self.real_roots)
        if self.complex_root is not None:
            out.append(self.complex_root)
        return out


def _certify_real_root(n: int, r) -> None:
    # f changes sign across [r - eps, r + eps]; checked with exact rationals
    eps = mpmath.mpf(10) ** (-(MP_DPS // 2))
    lo = Fraction(mpmath.nstr(r - eps, MP_DPS))
    hi = Fraction(mpmath.nstr(r + eps, MP_DPS))

    def f(x: Fraction) -> Fraction:
        return x ** 3 - n * x ** 2 + (n - 1) * x - 1

    if f(lo) * f(hi) >= 0:
        raise ArithmeticError(f"root {r} of f_{n} failed certification")


@lru_cache(maxsize=512)
def embeddings(n: int) -> Embeddings:
    with mpmath.workdps(MP_DPS):
        roots = mpmath.polyroots([1, -n, n - 1, -1], maxsteps=200, extraprec=200)
        if discriminant(n) > 0:
            reals = sorted(mpmath.re(z) for z in roots)
            for r in reals:
                _certify_real_root(n, r)
            return Embeddings(n, tuple(reals), None)
        real = min(roots, key=lambda z: abs(mpmath.im(z)))
        r = mpmath.re(real)
        _certify_real_root(n, r)
        # the other two roots solve x^2 - (n - r) x + 1/r = 0
        s = n - r
        disc = s * s - 4 / r
        z = mpmath.mpc(s / 2, mpmath.sqrt(-disc) / 2)
        return Embeddings(n, (r,), z)


def sigma_mp(n: int, coords: Sequence[int]) -> list:
    emb = embeddings(n)
    a0, a1, a2 = coords
    with mpmath.workdps(MP_DPS):
        return [a0 + a1 * z + a2 * z * z for z in emb.places()]


def log_vector(n: int, coords: Sequence[int]) -> list[float]:
    """log |sigma_i(x)| for each place, one entry per place."""
    with mpmath.workdps(MP_DPS):
        return [float(mpmath.log(abs(s))) for s in sigma_mp(n, coords)]


def _float_places(n: int) -> list:
    emb = embeddings(n)
    out = [float(r) for r in emb.real_roots]
    if emb.complex_root is not None:
        out.append(complex(emb.complex_root))
    return out


# ---------------------------------------------------------------------------
# Units


@dataclass(frozen=True)
class UnitSet:
    """Seeds -1, theta, theta - 1 plus a basis of the free part.

    `saturated` is True when the search certified that `basis` generates
    the full unit group modulo -1.
    """

    order: TracedOrder
    basis: tuple[tuple[int, int, int], ...]
    logs: tuple[tuple[float, ...], ...]
    saturated: bool
    seeds: tuple[tuple[int, int, int], ...] = ((-1, 0, 0), (0, 1, 0), (-1, 1, 0))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def generators(self) -> tuple[tuple[int, int, int], ...]:
        return self.seeds + self.basis

    def regulator(self) -> float:
        emb = embeddings(self.order.n)
        w = emb.weights
        m = [[w[i] * v[i] for i in range(self.rank)] for v in self.logs]
        if self.rank == 1:
            return abs(m[0][0])
        return abs(m[0][0] * m[1][1] - m[0][1] * m[1][0])

    def coordinates(self, lv: Sequence[float]) -> list[float]:
        """Coordinates of a trace-zero log vector in the basis `logs`."""
        return _solve_logs(self.logs, lv)


def _solve_logs(basis, lv) -> list[float]:
    if len(basis) == 1:
        b = basis[0]
        return [sum(x * y for x, y in zip(lv, b)) / sum(x * x for x in b)]
    (a, b), v = basis, lv
    aa = sum(x * x for x in a)
    ab = sum(x * y for x, y in zip(a, b))
    bb = sum(x * x for x in b)
    av = sum(x * y for x, y in zip(a, v))
    bv = sum(x * y for x, y in zip(b, v))
    det = aa * bb - ab * ab
    return [(av * bb - bv * ab) / det, (bv * aa - av * ab) / det]


def _unit_product(n: int, units, exps) -> tuple[int, int, int]:
    out = (1, 0, 0)
    for u, k in zip(units, exps):
        if k:
            out = mul_coords(n, out, pow_coords(n, u, k))
    return out


def _combine_logs(logs, exps) -> tuple[float, ...]:
    return tuple(sum(k * v[i] for k, v in zip(exps, logs)) for i in range(len(logs[0])))


def _reduce_basis(n: int, units: list, logs: list) -> tuple[list, list]:
    """Lagrange reduction of a rank-2 log lattice, tracking the units."""
    if len(units) < 2:
        return units, logs

    def nrm(v):
        return sum(x * x for x in v)

    u, lu = list(units), [tuple(v) for v in logs]
    for _ in range(200):
        if nrm(lu[1]) < nrm(lu[0]):
            u.reverse()
            lu.reverse()
        q = round(sum(x * y for x, y in zip(lu[0], lu[1])) / nrm(lu[0]))
        if q == 0:
            break
        u[1] = mul_coords(n, u[1], pow_coords(n, u[0], -q))
        lu[1] = tuple(b - q * a for a, b in zip(lu[0], lu[1]))
    return u, lu


def _adjoin_unit(n: int, units, logs, new_unit, new_log, t) -> tuple[list, list]:
    """Basis for the group generated by `units` and `new_unit`.

    `t` are the (rational) coordinates of new_log in the old basis.
    """
    r = len(units)
    fracs = [Fraction(x).limit_denominator(10 ** 6) for x in t]
    k = math.lcm(*(f.denominator for f in fracs))
    rows = [[k if i == j else 0 for j in range(r)] for i in range(r)]
    rows.append([int(f * k) for f in fracs])
    gens = list(units) + [new_unit]
    glogs = list(logs) + [tuple(new_log)]
    # echelon form with transform: pivot rows give the new basis
    aug = [row + [1 if i == j else 0 for j in range(r + 1)] for i, row in enumerate(rows)]
    basis_exps = []
    pool = aug
    for col in range(r):
        while True:
            nz = [row for row in pool if row[col]]
            piv = min(nz, key=lambda row: abs(row[col]))
            if len(nz) == 1:
                pool.remove(piv)
                basis_exps.append(piv[r:])
                break
            for row in nz:
                if row is not piv:
                    q = row[col] // piv[col]
                    for i in range(len(row)):
                        row[i] -= q * piv[i]
    new_units = [_unit_product(n, gens, e) for e in basis_exps]
    new_logs = [_combine_logs(glogs, e) for e in basis_exps]
    return new_units, new_logs


def _independent(logs) -> bool:
    if len(logs) == 1:
        return max(abs(x) for x in logs[0]) > 1e-9
    a, b = logs
    cross = [a[i] * b[j] - a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a))]
    return max(abs(x) for x in cross) > 1e-9


@lru_cache(maxsize=512)
def _unit_group_cached(n: int, effort: int) -> UnitSet:
    return saturate(n, ((0, 1, 0), (-1, 1, 0)), effort)


def saturate(n: int, seeds: Sequence[Sequence[int]], effort: int = DEFAULT_EFFORT) -> UnitSet:
    """Enlarge the group generated by `seeds` until no unit is missing."""
    order = TracedOrder(n)
    emb = embeddings(n)
    r = emb.rank
    for s in seeds:
        if abs(norm_coords(n, s)) != 1:
            raise ValueError(f"{tuple(s)} is not a unit")
    seeds = [tuple(s) for s in seeds]
    units: list = []
    logs: list = []
    for s in seeds:
        lv = tuple(log_vector(n, s))
        if not units:
            units, logs = [s], [lv]
            continue
        if len(units) < r and _independent(logs + [lv]):
            units.append(s)
            logs.append(lv)
        else:
            t = _solve_logs(logs, lv)
            if any(abs(x - round(x)) > 1e-7 for x in t):
                units, logs = _adjoin_unit(n, units, logs, s, lv, t)
    if len(units) < r:
        units, logs = _complete_rank(n, units, logs, r, effort)
    units, logs = _reduce_basis(n, units, logs)
    saturated = False
    for _ in range(64):
        uset = UnitSet(order, tuple(units), tuple(tuple(v) for v in logs), False)
        try:
            found = None
            for y in region_points(uset, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1, limit=effort):
                if abs(norm_coords(n, y)) != 1:
                    continue
                lv = log_vector(n, y)
                t = _solve_logs(logs, lv)
                if any(abs(x - round(x)) > 1e-7 for x in t):
                    found = (y, lv, t)
                    break
        except SearchLimitExceeded:
            break
        if found is None:
            saturated = True
            break
        units, logs = _adjoin_unit(n, units, logs, *found)
        units, logs = _reduce_basis(n, units, logs)
    return UnitSet(order, tuple(units), tuple(tuple(v) for v in logs), saturated)


def _complete_rank(n: int, units, logs, r: int, effort: int):
    # seeds were dependent: look for small units in growing boxes
    for radius in (2.0, 4.0, 8.0, 16.0, 32.0, 64.0):
        places = _float_places(n)
        w = [1.0] * len(places)

        def embed(row):
            return _embed_row(places, w, row)

        basis = lll([[1, 0, 0], [0, 1, 0], [0, 0, 1]], embed)
        vecs = [embed(b) for b in basis]
        for z in short_vectors(vecs, 3 * radius * radius, limit=effort):
            y = tuple(sum(z[i] * basis[i][j] for i in range(3)) for j in range(3))
            if abs(norm_coords(n, y)) != 1:
                continue
            lv = tuple(log_vector(n, y))
            if _independent(logs + [lv]):
                units.append(y)
                logs.append(lv)
                if len(units) == r:
                    return units, logs
    raise ArithmeticError(f"could not find {r} independent units for n={n}")


def unit_group(order: TracedOrder | int, effort: int = DEFAULT_EFFORT) -> UnitSet:
    n = order.n if isinstance(order, TracedOrder) else int(order)
    return _unit_group_cached(n, effort)


# ---------------------------------------------------------------------------
# Lattice points in a unit fundamental domain


def _embed_row(places, scale, row) -> list[float]:
    a0, a1, a2 = row
    out = []
    for z, s in zip(places, scale):
        v = a0 + a1 * z + a2 * z * z
        if isinstance(z, complex):
            out.append(v.real * s)
            out.append(v.imag * s)
        else:
            out.append(v * s)
    return out


def _choose_cells(uset: UnitSet, volume_ratio: float) -> int:
    w = embeddings(uset.order.n).weights
    h = [sum(abs(v[i]) for v in uset.logs) / 2 for i in range(len(w))]
    big_h = sum(wi * hi for wi, hi in zip(w, h))
    r = uset.rank
    best, best_m = None, 1
    for m in range(1, 65):
        cost = m ** r * (CELL_OVERHEAD + volume_ratio * math.exp(big_h / m))
        if best is None or cost < best:
            best, best_m = cost, m
    return best_m


def region_points(uset: UnitSet, rows: Sequence[Sequence[int]], bound: int,
                  limit: int | None = DEFAULT_EFFORT) -> Iterator[tuple[int, int, int]]:
    """Nonzero y in the lattice `rows` covering every unit orbit of norm <= bound.

    Every element of the lattice with |N(y)| <= bound has a unit multiple
    among the yielded points (up to sign).  The same point may be yielded
    more than once.  Raises SearchLimitExceeded when `limit` nodes are used.
    """
    n = uset.order.n
    emb = embeddings(n)
    w = emb.weights
    places = _float_places(n)
    r = uset.rank
    logs = uset.logs
    lattice_index = abs(rows[0][0] * rows[1][1] * rows[2][2]) if _is_triangular(rows) else None
    if lattice_index is None:
        from .lattice import hnf
        h = hnf(rows)
        lattice_index = h[0][0] * h[1][1] * h[2][2]
    covol = lattice_index * math.sqrt(abs(discriminant(n)))
    ellipsoid = 4.0 / 3.0 * math.pi * 3.0 ** 1.5
    ratio = ellipsoid * bound / covol
    m = _choose_cells(uset, ratio)
    hw = 1.0 / (2 * m)
    base = math.log(bound) / 3.0
    centers = [-0.5 + (2 * s + 1) / (2 * m) for s in range(m)]
    basis = [list(x) for x in rows]
    budget = limit
    for tau in product(centers, repeat=r):
        log_r = [
            base + sum(tau[j] * logs[j][i] + hw * abs(logs[j][i]) for j in range(r))
            for i in range(len(w))
        ]
        scale = []
        for i, z in enumerate(places):
            big_r = math.exp(log_r[i]) * (1 + MARGIN)
            scale.append((math.sqrt(2.0) if w[i] == 2 else 1.0) / big_r)

        def embed(row, scale=scale):
            return _embed_row(places, scale, row)

        basis = lll(basis, embed)
        vecs = [embed(b) for b in basis]
        stats = {"nodes": 0}
        try:
            for z in short_vectors(vecs, 3.0 * (1 + MARGIN), limit=budget, stats=stats):
                yield tuple(sum(z[i] * basis[i][j] for i in range(3)) for j in range(3))
        except OverflowError:
            raise SearchLimitExceeded(limit or 0) from None
        if budget is not None:
            budget -= stats["nodes"]
            if budget <= 0:
                raise SearchLimitExceeded(limit or 0)


def _is_triangular(rows) -> bool:
    return rows[0][1] == rows[0][2] == rows[1][2] == 0 and all(rows[i][i] for i in range(3))


def estimated_points(n: int, lattice_index: int, bound: int) -> float:
    """Rough number of lattice points the search will visit."""
    uset = unit_group(n)
    covol = lattice_index * math.sqrt(abs(discriminant(n)))
    ratio = 4.0 / 3.0 * math.pi * 3.0 ** 1.5 * bound / covol
    m = _choose_cells(uset, ratio)
    w = embeddings(n).weights
    h = [sum(abs(v[i]) for v in uset.logs) / 2 for i in range(len(w))]
    big_h = sum(wi * hi for wi, hi in zip(w, h))
    return m ** uset.rank * ratio * math.exp(big_h / m)


def root_sign_certificate(n: int) -> bool:
    """f_n has no integer root: f_n(0) = f_n(1) = -1."""
    return f_eval(n, 0) == -1 and f_eval(n, 1) == -1
