import pytest
from hypothesis import given, settings, strategies as st

from csideals.order import (
    IntPolynomial,
    OrderMismatchError,
    TracedOrder,
    discriminant,
    elem_mul,
    elem_norm,
    f_eval,
    f_poly,
    mul_coords,
    nonmaximality_witness,
    norm_coords,
    p_eval,
    phi_image_of_theta,
    phi_map,
    pow_coords,
    unit_inverse_coords,
)
from oracles import coords, mul_oracle, numeric_norm, resultant_norm, traces


def test_defining_polynomial_coefficients():
    assert f_poly(7).coeffs == (-1, 6, -7, 1)


@pytest.mark.parametrize("n", [-3, 0, 5, 27, 10**30])
def test_theta_times_theta_squared(n):
    order = TracedOrder(n)
    assert elem_mul(order.theta, order(0, 0, 1)).coords == (1, -(n - 1), n)


def test_identity_and_alpha():
    n = 13
    order = TracedOrder(n)
    x = order(4, -2, 9)
    assert (order.one * x).coords == x.coords
    # (theta - 1) * (theta^2 - (n-1) theta + 1) = theta
    assert mul_coords(n, (-1, 1, 0), (1, -(n - 1), 1)) == (0, 1, 0)


def test_mismatched_orders():
    with pytest.raises(OrderMismatchError):
        elem_mul(TracedOrder(3).theta, TracedOrder(4).theta)


@pytest.mark.parametrize("n", [-40, 0, 1, 27, 999])
def test_small_norms(n):
    order = TracedOrder(n)
    assert elem_norm(order.theta) == 1
    assert elem_norm(order(-1, 1, 0)) == 1
    assert elem_norm(order(0, 0, 0)) == 0


def test_norm_theta27_minus_4():
    assert elem_norm(TracedOrder(27)(-4, 1, 0)) == 265
    assert resultant_norm(27, (-4, 1, 0)) == 265


def test_f_eval_examples():
    assert f_eval(27, 4) == -265
    for k in range(-5, 6):
        assert f_eval(49 * k + 27, 2) == -49 * (2 * k + 1)


def test_p_eval_examples():
    assert p_eval(-5, 2) == 17
    assert p_eval(-5, 1) == 8
    assert p_eval(2, 1) == 1


def test_discriminant_examples():
    assert discriminant(27) == 356377 == 7**3 * 1039
    assert discriminant(0) == -23


def test_discriminant_matches_sympy():
    import sympy
    x = sympy.symbols("x")
    for n in (-7, 0, 4, 27, 60):
        assert discriminant(n) == sympy.discriminant(x**3 - n * x**2 + (n - 1) * x - 1, x)


def test_discriminant_symmetry():
    assert all(discriminant(n) == discriminant(5 - n) for n in range(-200, 201))


def test_no_integer_roots():
    assert all(f_eval(n, 0) == -1 and f_eval(n, 1) == -1 for n in range(-500, 501))


def test_phi_examples():
    n = 9
    assert phi_image_of_theta(n) == (1, n - 4, 1)
    order = TracedOrder(n)
    assert phi_map(n, order(5, 0, 0)).coords == (5, 0, 0)
    assert phi_map(5 - n, phi_map(n, order.theta)).coords == (0, 1, 0)


def test_phi_rejects_wrong_order():
    with pytest.raises(OrderMismatchError):
        phi_map(3, TracedOrder(4).theta)


def test_int_polynomial_arithmetic():
    x = IntPolynomial.x()
    p = (x - 2) ** 2
    assert p.coeffs == (4, -4, 1)
    assert p(3) == 1
    assert f_poly(5).derivative().coeffs == (4, -10, 3)


def test_eta_witness_k0():
    w = nonmaximality_witness(0)
    assert w.g.coeffs == (-7, 58, -83, 1)


@pytest.mark.parametrize("k", range(-5, 6))
def test_eta_witness_identity(k):
    import sympy
    w = nonmaximality_witness(k)
    assert w.identity_verified and w.irreducible
    # independent expansion with sympy
    x = sympy.symbols("x")
    g = sum(c * x**i for i, c in enumerate(w.g.coeffs))
    u = (x - 2) ** 2 / 7
    n = 49 * k + 27
    lhs = sympy.expand(343 * g.subs(x, u))
    rhs = sympy.expand((x**3 - n * x**2 + (n - 1) * x - 1)
                       * (x**3 + (49 * k + 15) * x**2 - (343 * k + 142) * x + 588 * k + 265))
    assert lhs == rhs
    assert sympy.Poly(g, x).is_irreducible


# --- properties ------------------------------------------------------------


@settings(max_examples=300)
@given(traces, coords, coords, coords)
def test_ring_axioms(n, a, b, c):
    ab = mul_coords(n, a, b)
    assert ab == mul_coords(n, b, a)
    assert mul_coords(n, ab, c) == mul_coords(n, a, mul_coords(n, b, c))
    bc = tuple(x + y for x, y in zip(b, c))
    lhs = mul_coords(n, a, bc)
    assert lhs == tuple(x + y for x, y in zip(ab, mul_coords(n, a, c)))


@settings(max_examples=100)
@given(traces, coords, coords)
def test_mul_matches_polynomial_remainder(n, a, b):
    assert mul_coords(n, a, b) == mul_oracle(n, a, b)


@settings(max_examples=1000)
@given(traces, coords, coords)
def test_norm_multiplicative(n, a, b):
    assert norm_coords(n, mul_coords(n, a, b)) == norm_coords(n, a) * norm_coords(n, b)


@settings(max_examples=500)
@given(traces, st.integers(-10**6, 10**6))
def test_norm_of_theta_minus_c(n, c):
    assert norm_coords(n, (-c, 1, 0)) == -f_eval(n, c)


@settings(max_examples=100)
@given(traces, coords)
def test_norm_matches_resultant_and_roots(n, a):
    nm = norm_coords(n, a)
    assert nm == resultant_norm(n, a)
    assert nm == numeric_norm(n, a)


@settings(max_examples=500)
@given(traces, coords)
def test_phi_roundtrip(n, a):
    x = TracedOrder(n)(a)
    assert phi_map(5 - n, phi_map(n, x)).coords == tuple(a)


@settings(max_examples=200)
@given(traces, coords, coords)
def test_phi_is_ring_map(n, a, b):
    order = TracedOrder(n)
    x, y = order(a), order(b)
    assert phi_map(n, x * y) == phi_map(n, x) * phi_map(n, y)
    assert phi_map(n, x + y) == phi_map(n, x) + phi_map(n, y)


@settings(max_examples=100)
@given(traces, st.integers(-6, 6))
def test_unit_powers(n, k):
    u = pow_coords(n, (-1, 1, 0), k)
    assert abs(norm_coords(n, u)) == 1
    assert mul_coords(n, u, unit_inverse_coords(n, u)) == (1, 0, 0)
