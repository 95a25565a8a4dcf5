"""Ideals of Z[theta_n] as full-rank integer lattices in Hermite normal form."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .lattice import content, hnf, hnf_mod, kernel_mod, solve_lower
from .order import (
    OrderElement,
    OrderMismatchError,
    TracedOrder,
    mul_coords,
    regular_matrix,
    times_theta,
)

Rows = tuple[tuple[int, int, int], ...]


class EmptyIdealError(ValueError):
    """All generators are zero."""


def _freeze(rows) -> Rows:
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class IdealBasis:
    """Nonzero ideal of Z[theta_n]; rows are the HNF basis in {1, theta, theta^2}."""

    order: TracedOrder
    rows: Rows

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def norm(self) -> int:
        return self.rows[0][0] * self.rows[1][1] * self.rows[2][2]

    @property
    def min_integer(self) -> int:
        """Smallest positive integer in the ideal."""
        return self.rows[0][0]

    def contains(self, x) -> bool:
        coords = x.coords if isinstance(x, OrderElement) else _as_coords(x)
        return solve_lower(self.rows, coords) is not None

    def is_cyclic(self) -> bool:
        """True when Z[theta]/I is cyclic, i.e. I = <theta - c, d>."""
        return self.rows[1][1] == 1 and self.rows[2][2] == 1

    def as_pair(self) -> tuple[int, int]:
        """(c, d) with I = <theta - c, d> and 1 <= c <= d; I must be cyclic."""
        if not self.is_cyclic():
            raise ValueError("ideal is not of the form <theta - c, d>")
        d = self.rows[0][0]
        c = (-self.rows[1][0]) % d
        return (c if c else d, d)

    def __mul__(self, other: IdealBasis) -> IdealBasis:
        return ideal_mul(self, other)

    def theta_closed(self) -> bool:
        n = self.n
        return all(solve_lower(self.rows, times_theta(n, r)) is not None for r in self.rows)

    def __repr__(self) -> str:
        return f"IdealBasis(n={self.n}, rows={self.rows})"


def _as_coords(x) -> tuple[int, int, int]:
    if isinstance(x, int):
        return (x, 0, 0)
    return tuple(x)  # type: ignore[return-value]


def make_ideal(order: TracedOrder, rows: Sequence[Sequence[int]], modulus: int | None = None) -> IdealBasis:
    h = hnf_mod(rows, modulus) if modulus else hnf(rows)
    return IdealBasis(order, _freeze(h))


def unit_ideal(order: TracedOrder) -> IdealBasis:
    return IdealBasis(order, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def ideal_from_generators(order: TracedOrder, gens) -> IdealBasis:
    """HNF of the Z-span of g * theta^i for every generator g and i = 0, 1, 2."""
    n = order.n
    rows = []
    for g in gens:
        if isinstance(g, OrderElement):
            if g.order != order:
                raise OrderMismatchError("generator from a different order")
            g = g.coords
        g = _as_coords(g)
        if any(g):
            rows.extend(regular_matrix(n, g))
    if not rows:
        raise EmptyIdealError("ideal generated by zero")
    return make_ideal(order, rows)


def two_generated(order: TracedOrder, c: int, d: int) -> IdealBasis:
    """The ideal <theta - c, d>; needs f_n(c) = 0 mod d for the HNF shortcut.

    Falls back to the general construction when the congruence fails.
    """
    d = abs(d)
    if d == 0:
        return ideal_from_generators(order, [(-c, 1, 0)])
    n = order.n
    fc = c * c * c - n * c * c + (n - 1) * c - 1
    if fc % d:
        return ideal_from_generators(order, [(-c, 1, 0), (d, 0, 0)])
    return IdealBasis(order, ((d, 0, 0), ((-c) % d, 1, 0), ((-c * c) % d, 0, 1)))


def _check_same(a: IdealBasis, b: IdealBasis) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"ideals of Z[theta_{a.n}] and Z[theta_{b.n}]")


def ideal_mul(a: IdealBasis, b: IdealBasis) -> IdealBasis:
    _check_same(a, b)
    n = a.n
    rows = [mul_coords(n, x, y) for x in a.rows for y in b.rows]
    return make_ideal(a.order, rows, a.min_integer * b.min_integer)


def scale_ideal(a: IdealBasis, x: Sequence[int]) -> list[list[int]]:
    """Rows of the lattice x * a (not reduced)."""
    n = a.n
    return [list(mul_coords(n, x, r)) for r in a.rows]


def principal(order: TracedOrder, x) -> IdealBasis:
    coords = x.coords if isinstance(x, OrderElement) else _as_coords(x)
    return make_ideal(order, regular_matrix(order.n, coords))


def ideal_norm(a: IdealBasis) -> int:
    return a.norm


def ideal_eq(a: IdealBasis, b: IdealBasis) -> bool:
    _check_same(a, b)
    return a.rows == b.rows


def ideal_contains(a: IdealBasis, x) -> bool:
    if isinstance(x, OrderElement) and x.order != a.order:
        raise OrderMismatchError("element from a different order")
    return a.contains(x)


@dataclass(frozen=True)
class FractionalIdeal:
    """numerator / denominator with the pair kept coprime."""

    numerator: IdealBasis
    denominator: int

    @classmethod
    def normalized(cls, order: TracedOrder, rows, denominator: int) -> FractionalIdeal:
        g = math.gcd(content(rows), denominator)
        rows = [[x // g for x in r] for r in rows]
        return cls(make_ideal(order, rows), denominator // g)

    def contains(self, x) -> bool:
        coords = x.coords if isinstance(x, OrderElement) else _as_coords(x)
        return self.numerator.contains(coords)

    def contains_fraction(self, coords, denom: int) -> bool:
        """Whether coords / denom lies in this fractional ideal."""
        num = [c * self.denominator for c in coords]
        if any(v % denom for v in num):
            return False
        return self.numerator.contains([v // denom for v in num])

    def times(self, other: IdealBasis) -> tuple[IdealBasis, int]:
        """(numerator * other, denominator) unreduced."""
        return ideal_mul(self.numerator, other), self.denominator


def colon_lattice(a: IdealBasis, b: IdealBasis) -> tuple[list[list[int]], int]:
    """Integer rows L and denominator e with (a : b) = L / e.

    e is the smallest positive integer of b; L consists of the y in a with
    y * beta in e * a for every basis vector beta of b.
    """
    _check_same(a, b)
    n = a.n
    e = b.min_integer
    h = a.rows
    blocks = []
    for beta in b.rows[1:]:
        # z -> coordinates in basis h of (z h) * beta
        block = []
        for r in h:
            z = solve_lower(h, mul_coords(n, r, beta))
            assert z is not None, "ideal not closed under multiplication"
            block.append(z)
        blocks.append(block)
    p = [blocks[0][i] + blocks[1][i] for i in range(3)]
    zs = kernel_mod(p, e)
    rows = [[sum(z[i] * h[i][j] for i in range(3)) for j in range(3)] for z in zs]
    return rows, e


def colon(a: IdealBasis, b: IdealBasis) -> FractionalIdeal:
    """The fractional ideal (a : b) = {x in K : x b in a}."""
    rows, e = colon_lattice(a, b)
    return FractionalIdeal.normalized(a.order, rows, e)


def fractional_mul(f: FractionalIdeal, b: IdealBasis) -> FractionalIdeal:
    prod = ideal_mul(f.numerator, b)
    return FractionalIdeal.normalized(b.order, [list(r) for r in prod.rows], f.denominator)


def is_unit_fractional(f: FractionalIdeal) -> bool:
    return f.denominator == 1 and f.numerator.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
