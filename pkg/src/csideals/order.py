"""Exact arithmetic in the cubic orders Z[theta_n].

theta_n is a root of f_n(x) = x^3 - n x^2 + (n-1) x - 1.  Elements are
stored as integer coordinate triples in the basis {1, theta, theta^2}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Coords = tuple[int, int, int]


class OrderMismatchError(ValueError):
    """Raised when elements or ideals of different orders are combined."""


# ---------------------------------------------------------------------------
# Coordinate-level kernels.  These work on plain tuples so the hot loops in
# the class-monoid code avoid dataclass overhead.


def mul_coords(n: int, a: Sequence[int], b: Sequence[int]) -> Coords:
    a0, a1, a2 = a
    b0, b1, b2 = b
    c0 = a0 * b0
    c1 = a0 * b1 + a1 * b0
    c2 = a0 * b2 + a1 * b1 + a2 * b0
    c3 = a1 * b2 + a2 * b1
    c4 = a2 * b2
    # theta^3 = n theta^2 - (n-1) theta + 1
    # theta^4 = (n^2-n+1) theta^2 + (1-n(n-1)) theta + n
    return (
        c0 + c3 + n * c4,
        c1 - (n - 1) * c3 + (1 - n * (n - 1)) * c4,
        c2 + n * c3 + (n * n - n + 1) * c4,
    )


def times_theta(n: int, a: Sequence[int]) -> Coords:
    a0, a1, a2 = a
    return (a2, a0 - (n - 1) * a2, a1 + n * a2)


def regular_matrix(n: int, a: Sequence[int]) -> list[list[int]]:
    """Rows are the coordinates of a, a*theta, a*theta^2."""
    r0 = tuple(a)
    r1 = times_theta(n, r0)
    r2 = times_theta(n, r1)
    return [list(r0), list(r1), list(r2)]


def det3(m: Sequence[Sequence[int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def norm_coords(n: int, a: Sequence[int]) -> int:
    return det3(regular_matrix(n, a))


def unit_inverse_coords(n: int, a: Sequence[int]) -> Coords:
    """Inverse of a unit (norm +-1), computed from the adjugate."""
    m = regular_matrix(n, a)
    nm = det3(m)
    if nm not in (1, -1):
        raise ValueError(f"{tuple(a)} is not a unit (norm {nm})")
    # Solve y * m = (1, 0, 0): y is the first row of m^{-1}.
    adj0 = (
        m[1][1] * m[2][2] - m[1][2] * m[2][1],
        -(m[0][1] * m[2][2] - m[0][2] * m[2][1]),
        m[0][1] * m[1][2] - m[0][2] * m[1][1],
    )
    return (adj0[0] * nm, adj0[1] * nm, adj0[2] * nm)


def pow_coords(n: int, a: Sequence[int], k: int) -> Coords:
    if k < 0:
        a = unit_inverse_coords(n, a)
        k = -k
    result: Coords = (1, 0, 0)
    base = tuple(a)
    while k:
        if k & 1:
            result = mul_coords(n, result, base)
        base = mul_coords(n, base, base)
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# Integer polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        return IntPolynomial([other])

    def __add__(self, other):
        o = self._coerce(other)
        m = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = o.coeffs + (0,) * (m - len(o.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        acc = IntPolynomial([])
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)


def f_poly(n: int) -> IntPolynomial:
    return IntPolynomial([-1, n - 1, -n, 1])


def f_eval(n: int, c: int) -> int:
    """f_n(c) = c^3 - n c^2 + (n-1) c - 1."""
    return c * c * c - n * c * c + (n - 1) * c - 1


def p_eval(n: int, c: int) -> int:
    """The dual parameter map c -> c^2 + (1-n) c + 1."""
    return c * c + (1 - n) * c + 1


def discriminant(n: int) -> int:
    return n * (n - 2) * (n - 3) * (n - 5) - 23


# ---------------------------------------------------------------------------
# Orders and elements


@dataclass(frozen=True)
class TracedOrder:
    """The monogenic order Z[theta_n]."""

    n: int

    @property
    def poly(self) -> IntPolynomial:
        return f_poly(self.n)

    @property
    def one(self) -> OrderElement:
        return OrderElement(self, (1, 0, 0))

    @property
    def theta(self) -> OrderElement:
        return OrderElement(self, (0, 1, 0))

    def __call__(self, *coords: int) -> OrderElement:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        c = tuple(int(x) for x in coords) + (0,) * (3 - len(coords))
        return OrderElement(self, c)

    def discriminant(self) -> int:
        return discriminant(self.n)


@dataclass(frozen=True)
class OrderElement:
    order: TracedOrder
    coords: Coords

    def _check(self, other: OrderElement) -> None:
        if other.order != self.order:
            raise OrderMismatchError(
                f"elements of Z[theta_{self.order.n}] and Z[theta_{other.order.n}]")

    def _lift(self, other) -> OrderElement:
        if isinstance(other, int):
            return OrderElement(self.order, (other, 0, 0))
        self._check(other)
        return other

    def __add__(self, other):
        o = self._lift(other)
        return OrderElement(self.order, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return OrderElement(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return OrderElement(self.order, mul_coords(self.order.n, self.coords, o.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return OrderElement(self.order, pow_coords(self.order.n, self.coords, k))

    def norm(self) -> int:
        return norm_coords(self.order.n, self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return f"OrderElement(n={self.order.n}, {self.coords})"


def elem_mul(x: OrderElement, y: OrderElement) -> OrderElement:
    x._check(y)
    return x * y


def elem_norm(x: OrderElement) -> int:
    """Norm as the determinant of multiplication by x."""
    return x.norm()


def phi_image_of_theta(n: int) -> Coords:
    """Image of theta_n in Z[theta_{5-n}]: theta^2 + (n-4) theta + 1."""
    return (1, n - 4, 1)


def phi_map(n: int, x: OrderElement) -> OrderElement:
    """Ring isomorphism Z[theta_n] -> Z[theta_{5-n}]."""
    if x.order.n != n:
        raise OrderMismatchError(f"element is not in Z[theta_{n}]")
    m = 5 - n
    t = phi_image_of_theta(n)
    t2 = mul_coords(m, t, t)
    a0, a1, a2 = x.coords
    out = tuple(a0 * e + a1 * u + a2 * v for e, u, v in zip((1, 0, 0), t, t2))
    return OrderElement(TracedOrder(m), out)


@dataclass(frozen=True)
class NonMaximalityWitness:
    k: int
    g: IntPolynomial
    identity_verified: bool
    irreducible: bool


def nonmaximality_witness(k: int) -> NonMaximalityWitness:
    """Integral element (theta - 2)^2 / 7 outside Z[theta_{49k+27}].

    Checks 343 g_k((x-2)^2/7) = f_{49k+27}(x) * cofactor with the
    denominator cleared, and irreducibility of g_k from the parity of
    g_k(0) and g_k(1).
    """
    a = 343 * k * k + 336 * k + 83
    b = 245 * k * k + 238 * k + 58
    c = 28 * k * k + 28 * k + 7
    g = IntPolynomial([-c, b, -a, 1])
    x = IntPolynomial.x()
    s = x - 2
    lhs = s ** 6 - 7 * a * s ** 4 + 49 * b * s ** 2 - 343 * c
    cofactor = IntPolynomial([588 * k + 265, -(343 * k + 142), 49 * k + 15, 1])
    rhs = f_poly(49 * k + 27) * cofactor
    irreducible = g(0) % 2 == 1 and g(1) % 2 == 1
    return NonMaximalityWitness(k, g, lhs == rhs, irreducible)
