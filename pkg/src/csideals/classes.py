"""Invertibility, principality and equivalence of ideals; class representatives.

Equivalence test: I ~ J iff some x in (I : J) has |N(x)| = N(I)/N(J).  With
(I : J) = L/e the search runs over y in L with |N(y)| = e^3 N(I)/N(J), one
point per unit orbit (see units.region_points).  Any finite-index unit
subgroup gives a complete search, so a No answer is a proof.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from sympy import isprime

from .ideals import (
    IdealBasis,
    colon_lattice,
    ideal_mul,
    make_ideal,
    scale_ideal,
    two_generated,
    unit_ideal,
)
from .matrices import CSTriple, triple_to_ideal
from .order import TracedOrder, f_eval, norm_coords
from .units import DEFAULT_EFFORT, SearchLimitExceeded, region_points, unit_group

log = logging.getLogger(__name__)

YES, NO, UNDECIDED = "yes", "no", "undecided"


class UndecidedError(RuntimeError):
    """A decision needed by a scan ran out of search budget."""


class IncompleteTableError(RuntimeError):
    """A product is equivalent to none of the given representatives."""


@dataclass(frozen=True)
class ClassDecision:
    """verdict plus witness: alpha * I = beta * J for Yes."""

    verdict: str
    alpha: tuple[int, int, int] | None = None
    beta: tuple[int, int, int] | None = None
    bound: int | None = None
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.verdict == YES

    @property
    def no(self) -> bool:
        return self.verdict == NO

    @property
    def undecided(self) -> bool:
        return self.verdict == UNDECIDED

    def __bool__(self) -> bool:
        return self.yes


def scaled_equal(i: IdealBasis, j: IdealBasis, alpha, beta) -> bool:
    """Exact check of alpha * I = beta * J."""
    if not any(alpha) or not any(beta):
        return False
    return make_ideal(i.order, scale_ideal(i, alpha)).rows == make_ideal(j.order, scale_ideal(j, beta)).rows


# ---------------------------------------------------------------------------
# Invertibility


def inverse_numerator(i: IdealBasis) -> tuple[IdealBasis, int]:
    """(L, e) with (R : I) = L / e and L integral."""
    rows, e = colon_lattice(unit_ideal(i.order), i)
    return make_ideal(i.order, rows), e


def is_invertible(i: IdealBasis) -> bool:
    """I (R : I) = R, checked as I * L = e R."""
    lat, e = inverse_numerator(i)
    prod = ideal_mul(i, lat)
    return prod.rows == ((e, 0, 0), (0, e, 0), (0, 0, e))


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def kummer_invertible(n: int, c: int, p: int) -> bool:
    """<theta_n - c, p> is invertible iff c is a simple root mod p or p^2 does not divide f_n(c)."""
    _check_prime(p)
    fc = f_eval(n, c)
    if fc % p:
        raise ValueError(f"{p} does not divide f_{n}({c})")
    deriv = 3 * c * c - 2 * n * c + (n - 1)
    return deriv % p != 0 or fc % (p * p) != 0


@dataclass(frozen=True)
class PrimePowerVerdict:
    invertible: bool
    reduction: CSTriple | None = None
    reason: str = ""


def prime_power_invertible(n: int, c: int, p: int, k: int,
                           effort: int = DEFAULT_EFFORT) -> PrimePowerVerdict:
    """Invertibility of <theta_n - c, p^k>, with the class reduction for p = 7, n = 27 mod 49."""
    _check_prime(p)
    if k < 1:
        raise ValueError("k must be positive")
    q = p ** k
    fc = f_eval(n, c)
    if fc % q:
        raise ValueError(f"{p}^{k} does not divide f_{n}({c})")
    if kummer_invertible(n, c, p):
        return PrimePowerVerdict(True, reason="prime ideal invertible")
    if fc % (q * p):
        return PrimePowerVerdict(True, reason=f"{p}^{k + 1} does not divide f_n(c)")
    ideal = two_generated(TracedOrder(n), c, q)
    if p == 7 and n % 49 == 27:
        target = CSTriple(2, 7, n)
        dec = is_equivalent(ideal, triple_to_ideal(target), effort)
        if dec.yes:
            return PrimePowerVerdict(False, target, reason="equivalent to <theta-2,7>")
    return PrimePowerVerdict(is_invertible(ideal), reason="colon ideal test")


# ---------------------------------------------------------------------------
# Equivalence and principality


def is_equivalent(i: IdealBasis, j: IdealBasis, effort: int = DEFAULT_EFFORT) -> ClassDecision:
    if i.order != j.order:
        raise ValueError("ideals of different orders")
    if i.rows == j.rows:
        return ClassDecision(YES, (1, 0, 0), (1, 0, 0))
    if is_invertible(i) != is_invertible(j):
        return ClassDecision(NO, reason="invertibility differs")
    n = i.n
    lat, e = colon_lattice(i, j)
    num = e ** 3 * i.norm
    if num % j.norm:
        return ClassDecision(NO, reason="norm target not integral")
    target = num // j.norm
    uset = unit_group(n)
    seen = set()
    try:
        for y in region_points(uset, lat, target, limit=effort):
            if y in seen:
                continue
            seen.add(y)
            if abs(norm_coords(n, y)) != target:
                continue
            alpha = (e, 0, 0)
            if scaled_equal(i, j, alpha, y):
                return ClassDecision(YES, alpha, y)
    except SearchLimitExceeded:
        return ClassDecision(UNDECIDED, bound=effort, reason="search budget exhausted")
    return ClassDecision(NO, reason="no element of the required norm")


def is_principal(i: IdealBasis, effort: int = DEFAULT_EFFORT) -> ClassDecision:
    """Yes carries alpha with <alpha> = I."""
    dec = is_equivalent(i, unit_ideal(i.order), effort)
    if not dec.yes:
        return dec
    # alpha I = beta R with alpha = e = 1
    e = dec.alpha[0]
    gen = tuple(x // e for x in dec.beta) if all(x % e == 0 for x in dec.beta) else dec.beta
    return ClassDecision(YES, gen, (1, 0, 0))


# ---------------------------------------------------------------------------
# Algorithms 1 and 2


def cs_pairs(n: int, d_max: int, d_min: int = 1):
    """(c, d) with 1 <= c <= d, d_min <= d <= d_max and f_n(c) = 0 mod d, in colex order."""
    for d in range(d_min, d_max + 1):
        for c in range(1, d + 1):
            if f_eval(n, c) % d == 0:
                yield c, d


@dataclass
class ClassListing:
    """Triples equivalent to `source`, each with y such that e * J = y * source."""

    source: CSTriple
    d_max: int
    e: int
    members: dict = field(default_factory=dict)   # (c, d) -> y
    complete: bool = True

    def triples(self) -> list[CSTriple]:
        n = self.source.n
        return [CSTriple(c, d, n) for (c, d) in sorted(self.members, key=lambda p: (p[1], p[0]))]

    def witness(self, c: int, d: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """(alpha, beta) with alpha * <theta-c,d> = beta * source."""
        return (self.e, 0, 0), self.members[(c, d)]


def class_listing(t, d_max: int, effort: int = DEFAULT_EFFORT) -> ClassListing:
    t = CSTriple.of(t).normalized()
    n = t.n
    order = TracedOrder(n)
    i0 = triple_to_ideal(t)
    rows, e = colon_lattice(unit_ideal(order), i0)
    lat = make_ideal(order, rows)
    bound = e ** 3 * d_max // i0.norm
    listing = ClassListing(t, d_max, e)
    listing.members[(t.c, t.d)] = (e, 0, 0)
    uset = unit_group(n)
    e3 = e ** 3
    seen = set()
    try:
        for y in region_points(uset, lat.rows, max(bound, 1), limit=effort):
            if y in seen:
                continue
            seen.add(y)
            ny = abs(norm_coords(n, y))
            if ny == 0 or (ny * i0.norm) % e3:
                continue
            d = ny * i0.norm // e3
            if d > d_max:
                continue
            rows_j = [[x // e for x in r] for r in scale_ideal(i0, y)]
            j = make_ideal(order, rows_j, d)
            if not j.is_cyclic():
                continue
            c, dd = j.as_pair()
            if (c, dd) not in listing.members:
                listing.members[(c, dd)] = y
    except SearchLimitExceeded:
        listing.complete = False
    return listing


def list_equivalent_triples(c0: int, d0: int, n: int, d_max: int,
                            effort: int = DEFAULT_EFFORT) -> list[CSTriple]:
    listing = class_listing((c0, d0, n), d_max, effort)
    if not listing.complete:
        raise UndecidedError(f"listing for ({c0},{d0},{n}) exceeded the search budget")
    return listing.triples()


@dataclass
class ClassScan:
    n: int
    d_max: int
    reps: list[CSTriple]
    listings: list[ClassListing]
    index: dict                 # (c, d) -> rep index

    def class_of(self, t) -> int:
        t = CSTriple.of(t).normalized()
        if t.n != self.n:
            raise ValueError("triple has a different trace")
        return self.index[(t.c, t.d)]


def scan_classes(n: int, d_max: int = 400, effort: int = DEFAULT_EFFORT,
                 progress=None) -> ClassScan:
    reps: list[CSTriple] = []
    listings: list[ClassListing] = []
    index: dict = {}
    for c, d in cs_pairs(n, d_max):
        if (c, d) in index:
            continue
        listing = class_listing((c, d, n), d_max, effort)
        if not listing.complete:
            raise UndecidedError(f"trace {n}: class listing of ({c},{d},{n}) exceeded the budget")
        k = len(reps)
        for key in listing.members:
            if key in index:
                # members of an earlier class cannot appear again
                raise ArithmeticError(f"trace {n}: ({key}) listed in two classes")
            index[key] = k
        reps.append(CSTriple(c, d, n))
        listings.append(listing)
        if progress:
            progress(f"trace {n}: class {k + 1} represented by ({c},{d},{n})")
    return ClassScan(n, d_max, reps, listings, index)


def enumerate_class_reps(n: int, d_max: int = 400, effort: int = DEFAULT_EFFORT) -> list[CSTriple]:
    return scan_classes(n, d_max, effort).reps


@dataclass(frozen=True)
class ClassTable:
    n: int
    reps: tuple[CSTriple, ...]
    products: tuple[tuple[int, ...], ...]

    def absorbing(self) -> list[int]:
        size = len(self.reps)
        return [i for i in range(size)
                if all(self.products[i][j] == i and self.products[j][i] == i for j in range(size))]

    def identity(self) -> int | None:
        size = len(self.reps)
        for i in range(size):
            if all(self.products[i][j] == j for j in range(size)):
                return i
        return None


def monoid_table(n: int, reps: Sequence, effort: int = DEFAULT_EFFORT) -> ClassTable:
    reps = [CSTriple.of(r) for r in reps]
    ideals = [triple_to_ideal(r) for r in reps]
    inv = [is_invertible(i) for i in ideals]
    size = len(reps)
    table = [[-1] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            prod = ideal_mul(ideals[a], ideals[b])
            p_inv = is_invertible(prod)
            hit = None
            for k in range(size):
                if inv[k] != p_inv:
                    continue
                dec = is_equivalent(prod, ideals[k], effort)
                if dec.undecided:
                    raise UndecidedError(f"product {reps[a]}*{reps[b]} vs {reps[k]} undecided")
                if dec.yes:
                    hit = k
                    break
            if hit is None:
                raise IncompleteTableError(f"{reps[a]}*{reps[b]} matches no representative")
            table[a][b] = table[b][a] = hit
    return ClassTable(n, tuple(reps), tuple(tuple(r) for r in table))
