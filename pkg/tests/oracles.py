"""Independent reference computations used by the tests.

Nothing here imports the library's lattice or ideal code; everything goes
through sympy, mpmath or plain brute force.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import mpmath
import sympy
from hypothesis import strategies as st

X, T = sympy.symbols("x t")


def f_sym(n):
    return T**3 - n * T**2 + (n - 1) * T - 1


@lru_cache(maxsize=None)
def theta_powers(n):
    """Coordinates of theta^k for k = 0..4 by polynomial division."""
    out = []
    for k in range(5):
        r = sympy.Poly(T**k, T).rem(sympy.Poly(f_sym(n), T))
        coeffs = [int(r.coeff_monomial(T**i)) for i in range(3)]
        out.append(tuple(coeffs))
    return out


def mul_oracle(n, a, b):
    """Product via sympy polynomial remainder."""
    pa = sum(int(a[i]) * T**i for i in range(3))
    pb = sum(int(b[i]) * T**i for i in range(3))
    r = sympy.Poly(sympy.expand(pa * pb), T).rem(sympy.Poly(f_sym(n), T))
    return tuple(int(r.coeff_monomial(T**i)) for i in range(3))


def resultant_norm(n, coords):
    """N(x) = Res_t(f_n(t), x(t)) for monic f_n."""
    g = sum(int(coords[i]) * T**i for i in range(3))
    if g == 0:
        return 0
    return int(sympy.resultant(f_sym(n), g, T))


def numeric_norm(n, coords, dps=50):
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([1, -n, n - 1, -1], maxsteps=200, extraprec=200)
        prod = mpmath.mpf(1)
        for r in roots:
            prod *= coords[0] + coords[1] * r + coords[2] * r * r
        return int(mpmath.nint(mpmath.re(prod)))


def in_lattice(basis, v):
    """Rational solve; True iff v is an integer combination of basis rows."""
    m = sympy.Matrix(basis).T
    sol = m.LUsolve(sympy.Matrix(v))
    return all(x.is_integer for x in sol)


def same_lattice(a, b):
    return (all(in_lattice(a, r) for r in b) and all(in_lattice(b, r) for r in a))


def lattice_index(rows):
    return abs(int(sympy.Matrix(rows).det()))


def closure_vectors(n, gens, box=2):
    """Small integer combinations of g * theta^i (brute force)."""
    vecs = []
    for g in gens:
        v = tuple(g)
        for _ in range(3):
            vecs.append(v)
            v = mul_oracle(n, v, (0, 1, 0))
    out = set()
    for ks in itertools.product(range(-box, box + 1), repeat=len(vecs)):
        out.add(tuple(sum(k * v[j] for k, v in zip(ks, vecs)) for j in range(3)))
    return vecs, out


def conjugator(a, b, box=6):
    """Integer P with det P = +-1 and P a = b P, searched in a box of free parameters."""
    syms = sympy.symbols("p0:9")
    p = sympy.Matrix(3, 3, syms)
    eqs = list(p * sympy.Matrix(a) - sympy.Matrix(b) * p)
    sol = sympy.solve(eqs, syms, dict=True)
    if not sol:
        return None
    general = p.subs(sol[0])
    free = sorted(general.free_symbols, key=str)
    for vals in itertools.product(range(-box, box + 1), repeat=len(free)):
        m = general.subs(dict(zip(free, vals)))
        if all(x.is_integer for x in m) and abs(m.det()) == 1:
            return [[int(x) for x in row] for row in m.tolist()]
    return None


def f_int(n, c):
    return c**3 - n * c**2 + (n - 1) * c - 1


@st.composite
def valid_triples(draw, n_range=(-80, 80), c_range=(-60, 60), signed=True):
    """(c, d, n) with d | f_n(c)."""
    n = draw(st.integers(*n_range))
    c = draw(st.integers(*c_range))
    divs = sympy.divisors(abs(f_int(n, c)))
    d = draw(st.sampled_from(divs))
    if signed and draw(st.booleans()):
        d = -d
    return (c, d, n)


coords = st.tuples(*(st.integers(-30, 30),) * 3)
traces = st.integers(-120, 120)
