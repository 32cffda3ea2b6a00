import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from goodgroups import gf2
from goodgroups.algebra import (
    GF2,
    GF4,
    AlgebraElement,
    AlgebraError,
    FieldSpec,
    NotNormalized,
    augmentation,
    augmentation_ideal,
    bar,
    class_count,
    commutator_subspace,
    format_element,
    group_element,
    parse_element,
    unit_inverse,
)
from goodgroups.groups import center, cyclic_group, omega_subgroup, subgroup_generated

from conftest import catalog_group, group

SMALL = ["Q8", "D8", "S(2,2)", "GenQuaternion(4)", "ModularS(3,1)", "C4xC4", "C2xD8"]


def rand_element(g, field, seed):
    rng = np.random.default_rng(seed)
    return AlgebraElement.from_coeffs(g, field, rng.integers(0, field.size, g.order))


def test_field_axioms():
    for f in (GF2, GF4):
        els = list(f.elements())
        for x in els:
            assert f.add(x, x) == 0
            assert f.mul(x, 1) == x
            if x:
                assert f.mul(x, f.inv(x)) == 1
            for y in els:
                assert f.mul(x, y) == f.mul(y, x)
                for z in els:
                    assert f.mul(x, f.mul(y, z)) == f.mul(f.mul(x, y), z)
                    assert f.mul(x, y ^ z) == f.mul(x, y) ^ f.mul(x, z)
    assert GF4.mul(2, 2) == 3 and GF4.mul(2, 3) == 1
    with pytest.raises(AlgebraError):
        FieldSpec(3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from([GF2, GF4]), st.integers(0, 2**32))
def test_ring_axioms(name, field, seed):
    g = catalog_group(name)
    x, y, z = (rand_element(g, field, seed + i) for i in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert x + x == AlgebraElement.zero(g, field)
    assert (x + y) * (x + y) == x * x + y * y + x * y + y * x
    assert augmentation(x * y) == field.mul(augmentation(x), augmentation(y))
    assert augmentation(x + y) == augmentation(x) ^ augmentation(y)
    one = AlgebraElement.one(g, field)
    assert one * x == x == x * one


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32))
def test_product_matches_naive_convolution(name, seed):
    g = catalog_group(name)
    x, y = rand_element(g, GF2, seed), rand_element(g, GF2, seed + 1)
    out = [0] * g.order
    for i in range(g.order):
        for j in range(g.order):
            out[g.mul[i, j]] ^= int(x.coeffs[i]) & int(y.coeffs[j])
    assert (x * y).coeffs.tolist() == out


def test_examples(q8, d8):
    a = group_element(q8, q8.generators[0])
    one = AlgebraElement.one(q8)
    assert (one + a) * (one + a) == one + a * a
    r, s = d8.generators  # rotation a, reflection b
    b_, ab = group_element(d8, s), group_element(d8, d8.m(r, s))
    assert b_ * ab != ab * b_
    for x in range(q8.order):
        assert (bar(q8, x) * (group_element(q8, x) + one)).is_zero()
        assert len(bar(q8, x).support()) == q8.element_order(x)
    assert bar(q8, q8.identity) == one
    c4 = cyclic_group(4)
    assert (bar(c4, 1) * bar(c4, 1)).is_zero()
    assert augmentation(bar(c4, 1)) == 0


def test_commutator_subspace_dims():
    assert commutator_subspace(group("Q8")).rank == 3
    assert commutator_subspace(cyclic_group(8)).rank == 0
    for name in SMALL + ["H32", "Q8xQ8", "H245"]:
        g = catalog_group(name)
        assert commutator_subspace(g).rank == g.order - class_count(g)
        assert commutator_subspace(g, GF4).rank == 2 * (g.order - class_count(g))
        # L(KG) meets the span of central elements trivially
        z = center(g)
        zspan = gf2.span([1 << x for x in z], g.order)
        assert gf2.intersect(commutator_subspace(g), zspan).rank == 0


def test_augmentation_ideal_dims():
    q8 = group("Q8")
    assert augmentation_ideal(q8, omega_subgroup(q8)).rank == 4
    assert augmentation_ideal(q8, subgroup_generated(q8, [])).rank == 0
    for name in SMALL + ["H32", "S22oQ8"]:
        g = catalog_group(name)
        n = omega_subgroup(g)
        ideal = augmentation_ideal(g, n)
        assert ideal.rank == g.order - g.order // len(n)
        # two-sided
        for v in ideal.rows:
            e = AlgebraElement.from_int(g, GF2, v)
            for x in g.generators:
                h = group_element(g, x)
                assert (h * e).to_int() in ideal and (e * h).to_int() in ideal


def test_literal_parsing_and_format():
    g = group("Q8xQ8")
    z1 = parse_element("1+a+bc^2+c+abc+a^2d+abd+acd+bcd", g)
    assert len(z1.support()) == 9 and augmentation(z1) == 1
    assert parse_element(format_element(z1), g) == z1
    z2 = parse_element("1+b(1+c^2)", g)
    assert z2 == parse_element("1 + b + b*c^2", g)
    h = group("H245W")
    assert parse_element("1+(b+b^-1)", h) == parse_element("1 + b + b^3", h)
    assert parse_element("[a,b]", group("Q8")) == parse_element("a^2", group("Q8"))
    w = parse_element("w a + w2 b", group("Q8"), GF4)
    assert w.coefficient(group("Q8").generators[0]) == 2
    assert parse_element(format_element(w), group("Q8"), GF4) == w
    with pytest.raises(ValueError):
        parse_element("1 + z", group("Q8"))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from([GF2, GF4]), st.integers(0, 2**32))
def test_format_round_trip(name, field, seed):
    g = catalog_group(name)
    x = rand_element(g, field, seed)
    assert parse_element(format_element(x), g, field) == x


def test_unit_inverse():
    g = group("S", 2, 2)
    one = AlgebraElement.one(g)
    assert unit_inverse(one) == one
    for x in range(g.order):
        assert unit_inverse(group_element(g, x)) == group_element(g, int(g.inv[x]))
    a, b = (group_element(g, s) for s in g.generators)
    z = (one + a * a) * (one + b * b)  # square-zero
    assert (z * z).is_zero()
    assert unit_inverse(one + z) == one + z
    with pytest.raises(NotNormalized):
        unit_inverse(a + b)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from([GF2, GF4]), st.integers(0, 2**32))
def test_unit_inverse_random(name, field, seed):
    g = catalog_group(name)
    u = rand_element(g, field, seed)
    if augmentation(u) != 1:
        u = u + AlgebraElement.basis(g, g.identity, field, augmentation(u) ^ 1)
    v = unit_inverse(u)
    one = AlgebraElement.one(g, field)
    assert u * v == one == v * u


def test_group_field_mismatch():
    with pytest.raises(AlgebraError):
        AlgebraElement.one(group("Q8")) + AlgebraElement.one(group("S", 2, 2))
    with pytest.raises(AlgebraError):
        AlgebraElement.one(group("Q8"), GF2) * AlgebraElement.one(group("Q8"), GF4)
