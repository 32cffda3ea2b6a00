import itertools

import pytest
from hypothesis import given, strategies as st

from goodgroups import gf2

DIM = 10
vecs = st.lists(st.integers(0, 2**DIM - 1), max_size=14)


def brute_span(vs, dim):
    out = {0}
    for v in vs:
        out |= {x ^ v for x in out}
    return out


@given(vecs)
def test_span_matches_brute_force(vs):
    b = gf2.span(vs, DIM)
    assert set(b.elements()) == brute_span(vs, DIM)
    assert b.rank == gf2.rank(vs)
    piv = b.pivots
    # reduced echelon form: each pivot appears in exactly one row
    for p in piv:
        assert sum((r >> p) & 1 for r in b.rows) == 1


@given(vecs, st.integers(0, 2**DIM - 1))
def test_membership(vs, v):
    b = gf2.span(vs, DIM)
    assert (v in b) == (v in brute_span(vs, DIM))


@given(st.lists(st.integers(0, 2**6 - 1), min_size=DIM, max_size=DIM))
def test_kernel_matches_brute_force(images):
    k = gf2.kernel_of_additive_map(images, DIM)
    brute = {x for x in range(2**DIM) if gf2.combine(x, images) == 0}
    assert set(k.elements()) == brute


def test_kernel_trivial_maps():
    assert gf2.kernel_of_additive_map(lambda v: 0, 5) == gf2.full_space(5)
    assert gf2.kernel_of_additive_map(lambda v: v, 5).rank == 0


def test_non_additive_detected():
    with pytest.raises(gf2.NonAdditiveMap):
        gf2.kernel_of_additive_map(lambda v: v & (v >> 1), 8)


@given(vecs, vecs)
def test_intersection(u, w):
    a, b = gf2.span(u, DIM), gf2.span(w, DIM)
    assert set(gf2.intersect(a, b).elements()) == brute_span(u, DIM) & brute_span(w, DIM)


@given(vecs, vecs)
def test_complement(u, w):
    whole = gf2.span(u + w, DIM)
    sub = gf2.span(u, DIM)
    comp = gf2.complement_basis(sub, whole)
    assert sub.rank + len(comp) == whole.rank
    assert sub.extend(comp) == whole


@given(st.lists(st.integers(0, 255), max_size=10), st.integers(0, 255))
def test_solver(images, v):
    s = gf2.Solver(images)
    c = s.solve(v)
    if c is None:
        assert v not in gf2.span(images, 8)
    else:
        assert gf2.combine(c, images) == v


def test_elements_gray_order():
    b = gf2.span([1, 2, 4], 3)
    seq = list(b.elements())
    assert sorted(seq) == list(range(8))
    assert all(bin(x ^ y).count("1") == 1 for x, y in zip(seq, seq[1:]))


def test_dimension_checked():
    with pytest.raises(ValueError):
        gf2.span([1 << 5], 5)
