"""Standard Cappell-Shaneson triples (c, d, n) and their matrices."""
from __future__ import annotations

from dataclasses import dataclass

from .ideals import IdealBasis, two_generated
from .order import TracedOrder, det3, f_eval, mul_coords, p_eval

Matrix = list[list[int]]

DELTA = ((1, -1, 0), (0, 1, 0), (0, 1, 1))
DELTA_INV = ((1, 1, 0), (0, 1, 0), (0, -1, 1))


class InvalidTripleError(ValueError):
    """d is zero or does not divide f_n(c)."""


@dataclass(frozen=True, order=True)
class CSTriple:
    c: int
    d: int
    n: int

    def __post_init__(self):
        if self.d == 0:
            raise InvalidTripleError("d must be nonzero")
        if f_eval(self.n, self.c) % self.d:
            raise InvalidTripleError(f"f_{self.n}({self.c}) is not divisible by {self.d}")

    @classmethod
    def of(cls, t) -> CSTriple:
        return t if isinstance(t, CSTriple) else cls(*t)

    def normalized(self) -> CSTriple:
        """c reduced into [1, |d|] and d made positive."""
        d = abs(self.d)
        c = self.c % d or d
        return CSTriple(c, d, self.n)

    def colex_key(self) -> tuple[int, int, int]:
        return (self.n, abs(self.d), self.c)

    def shift(self, k: int) -> CSTriple:
        return CSTriple(self.c, self.d, self.n + k * self.d)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.c, self.d, self.n)

    def __str__(self) -> str:
        return f"({self.c},{self.d},{self.n})"


def is_valid_triple(c: int, d: int, n: int) -> bool:
    return d != 0 and f_eval(n, c) % d == 0


def triple_to_matrix(t) -> Matrix:
    """X_{c,d,n} = [[0,a,b],[0,c,d],[1,0,n-c]] with a = -f_n(c)/d, b = (c-1)(n-c-1)."""
    t = CSTriple.of(t)
    c, d, n = t.c, t.d, t.n
    a = -f_eval(n, c) // d
    b = (c - 1) * (n - c - 1)
    return [[0, a, b], [0, c, d], [1, 0, n - c]]


def matmul(x, y) -> Matrix:
    return [[sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def char_poly(a) -> tuple[int, int, int, int]:
    """Coefficients of det(xI - A), lowest degree first."""
    tr = a[0][0] + a[1][1] + a[2][2]
    minors = (
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
        + a[0][0] * a[2][2] - a[0][2] * a[2][0]
        + a[1][1] * a[2][2] - a[1][2] * a[2][1]
    )
    return (-det3(a), minors, -tr, 1)


def is_cs_matrix(a) -> bool:
    shifted = [[a[i][j] - (1 if i == j else 0) for j in range(3)] for i in range(3)]
    return det3(a) == 1 and det3(shifted) == 1


def triple_to_ideal(t) -> IdealBasis:
    t = CSTriple.of(t)
    return two_generated(TracedOrder(t.n), t.c, abs(t.d))


def eigenvector(t) -> list[tuple[int, int, int]]:
    """((theta-n+c)(theta-c), d, theta-c) in Z[theta_n] coordinates."""
    t = CSTriple.of(t)
    c, d, n = t.c, t.d, t.n
    u = (-c, 1, 0)
    return [mul_coords(n, (c - n, 1, 0), u), (d, 0, 0), u]


def eigen_check(t) -> bool:
    t = CSTriple.of(t)
    n = t.n
    x = triple_to_matrix(t)
    v = eigenvector(t)
    for i in range(3):
        lhs = [sum(x[i][j] * v[j][s] for j in range(3)) for s in range(3)]
        if tuple(lhs) != mul_coords(n, (0, 1, 0), v[i]):
            return False
    return True


def star_dual(t) -> CSTriple:
    """(p_n(c) mod d, d, 5 - n)."""
    t = CSTriple.of(t)
    ad = abs(t.d)
    c = p_eval(t.n, t.c) % ad or ad
    return CSTriple(c, t.d, 5 - t.n)


def star_dual_matrix(t) -> Matrix:
    return triple_to_matrix(star_dual(t))


def double_dual_check(t) -> bool:
    t = CSTriple.of(t)
    c, d, n = t.c, t.d, t.n
    if (p_eval(5 - n, p_eval(n, c)) - c) % d:
        return False
    return star_dual(star_dual(t)).normalized() == t.normalized()


def delta_power(k: int) -> Matrix:
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    step = DELTA if k >= 0 else DELTA_INV
    for _ in range(abs(k)):
        m = matmul(step, m)
    return m


def delta_conjugation_check(t, k: int) -> bool:
    """Delta^k X_{c,d,n} is conjugate by a shear to X_{c,d,n+kd}."""
    t = CSTriple.of(t)
    c, d, n = t.c, t.d, t.n
    x = triple_to_matrix(t)
    a, b = x[0][1], x[0][2]
    m = matmul(delta_power(k), x)
    expected = [[0, a - k * c, b - k * d], [0, c, d], [1, k * c, k * d + n - c]]
    if m != expected:
        return False
    e = k * c
    shear = [[1, e, 0], [0, 1, 0], [0, 0, 1]]
    shear_inv = [[1, -e, 0], [0, 1, 0], [0, 0, 1]]
    conj = matmul(matmul(shear, m), shear_inv)
    return conj == triple_to_matrix(t.shift(k))


def shift_preserves_validity(t, k: int) -> bool:
    t = CSTriple.of(t)
    return f_eval(t.n + k * t.d, t.c) % t.d == 0
