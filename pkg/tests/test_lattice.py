import itertools
import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from csideals.lattice import RankError, hnf, hnf_mod, kernel_mod, lll, short_vectors, solve_lower
from oracles import lattice_index, same_lattice

rows3 = st.lists(st.tuples(*(st.integers(-40, 40),) * 3), min_size=3, max_size=6)
unimodular_ops = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), max_size=8)


def full_rank(rows):
    try:
        hnf(rows)
        return True
    except RankError:
        return False


def is_lower_hnf(h):
    if any(h[i][j] for i in range(3) for j in range(i + 1, 3)):
        return False
    if any(h[i][i] <= 0 for i in range(3)):
        return False
    return all(0 <= h[i][j] < h[j][j] for i in range(3) for j in range(i))


@settings(max_examples=200)
@given(rows3)
def test_hnf_shape_and_lattice(rows):
    assume(full_rank(rows))
    h = hnf(rows)
    assert is_lower_hnf(h)
    assert all(solve_lower(h, r) is not None for r in rows)
    if len(rows) == 3:
        assert same_lattice(h, rows)


@settings(max_examples=200)
@given(rows3, unimodular_ops)
def test_hnf_is_canonical(rows, ops):
    assume(full_rank(rows))
    other = [list(r) for r in rows]
    for i, j, k in ops:
        if i != j:
            other[i] = [a + k * b for a, b in zip(other[i], other[j])]
    assert hnf(other) == hnf(rows)


@settings(max_examples=200)
@given(rows3, st.integers(1, 60))
def test_hnf_mod_matches_plain(rows, m):
    padded = [list(r) for r in rows] + [[m, 0, 0], [0, m, 0], [0, 0, m]]
    assert hnf_mod(rows, m) == hnf(padded)


def test_rank_error():
    with pytest.raises(RankError):
        hnf([[1, 2, 3], [2, 4, 6], [0, 0, 0]])


@settings(max_examples=100)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=2, max_size=2), min_size=3, max_size=3),
       st.integers(1, 12))
def test_kernel_mod_brute_force(p, m):
    basis = kernel_mod(p, m)
    inside = {z for z in itertools.product(range(m), repeat=3)
              if all(sum(z[i] * p[i][j] for i in range(3)) % m == 0 for j in range(2))}
    for z in itertools.product(range(m), repeat=3):
        assert (solve_lower(basis, z) is not None) == (z in inside)


@settings(max_examples=200)
@given(rows3, st.tuples(*(st.integers(-20, 20),) * 3))
def test_solve_lower(rows, z):
    assume(full_rank(rows))
    h = hnf(rows)
    v = [sum(z[i] * h[i][j] for i in range(3)) for j in range(3)]
    assert solve_lower(h, v) == list(z)
    w = list(v)
    w[0] += 1
    if h[0][0] > 1:
        assert solve_lower(h, w) is None


def brute_short(vecs, bound, box):
    out = set()
    for z in itertools.product(range(-box, box + 1), repeat=len(vecs)):
        if not any(z):
            continue
        v = [sum(z[i] * vecs[i][j] for i in range(len(vecs))) for j in range(len(vecs[0]))]
        if sum(x * x for x in v) <= bound:
            last = [x for x in z if x][-1]
            out.add(z if last > 0 else tuple(-x for x in z))
    return out


@settings(max_examples=60)
@given(st.lists(st.tuples(*(st.integers(-5, 5),) * 3), min_size=3, max_size=3), st.integers(1, 60))
def test_short_vectors_brute_force(rows, bound):
    assume(full_rank(rows) and lattice_index(rows) > 0)
    vecs = [[float(x) for x in r] for r in rows]
    got = set(short_vectors(vecs, float(bound)))
    # coefficients of short vectors are bounded by bound^(1/2) * |inverse|
    assert got == brute_short(rows, bound, 12) | got
    assert all(z in got for z in brute_short(rows, bound, 12))


def test_short_vectors_limit():
    vecs = [[1.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]]
    stats = {}
    with pytest.raises(OverflowError):
        list(short_vectors(vecs, 400.0, limit=50, stats=stats))
    assert stats["nodes"] > 50


@settings(max_examples=100)
@given(rows3)
def test_lll_keeps_lattice(rows):
    assume(len(rows) == 3 and full_rank(rows))
    red = lll([list(r) for r in rows], lambda r: [float(x) for x in r])
    assert lattice_index(red) == lattice_index(rows)
    assert same_lattice(red, rows)
    longest = max(math.dist((0, 0, 0), r) for r in rows)
    assert min(math.dist((0, 0, 0), r) for r in red) <= longest
