import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from goodgroups import gf2
from goodgroups.algebra import (
    GF2,
    GF4,
    AlgebraElement,
    AlgebraError,
    augmentation,
    augmentation_ideal,
    commutator_subspace,
    parse_element,
)
from goodgroups.groups import cyclic_group, direct_product, omega_subgroup
from goodgroups.presentation import PresentationSyntaxError
from goodgroups.units import (
    DimensionExceeded,
    all_involutions_commute,
    count_involutions,
    cyclic_mul,
    enumerate_involutions,
    is_noncommuting_involution_pair,
    lemma4_oracle,
    lemma5_oracle,
    omega_v_equals_ideal,
    quadratic_data,
    square_zero_kernel,
    verify_witness_pair,
    witness_search,
)

from conftest import catalog_group, group

# ---------------------------------------------------------------------------
# brute-force oracles straight from the multiplication table


def all_vectors(n):
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)[None, :]) & 1).astype(np.uint8)


def brute_squares(g, Z):
    out = np.zeros_like(Z)
    for i in range(g.order):
        for j in range(g.order):
            out[:, g.mul[i, j]] ^= Z[:, i] & Z[:, j]
    return out


def to_ints(Z):
    return (Z.astype(np.int64) << np.arange(Z.shape[1])).sum(axis=1)


def brute_square_zero(g):
    Z = all_vectors(g.order)
    return set(to_ints(Z[~brute_squares(g, Z).any(axis=1)]).tolist())


def brute_w(g):
    Z = all_vectors(g.order)
    L = commutator_subspace(g)
    sq = to_ints(brute_squares(g, Z)).tolist()
    aug = Z.sum(axis=1) & 1
    return {int(v) for v, s, a in zip(to_ints(Z).tolist(), sq, aug) if a == 0 and s in L}


BRUTE = ["Q8", "D8", "S(2,2)", "C4:C4", "GenQuaternion(4)", "ModularS(3,1)", "C2xD8", "D16", "Q8xC2", "C4xC4"]
# dim W from the exhaustive scans above, frozen
W_DIMS = {"Q8": 6, "D8": 6, "S(2,2)": 13, "GenQuaternion(4)": 13, "ModularS(3,1)": 12}


@pytest.mark.parametrize("name", BRUTE)
def test_involutions_match_exhaustive_scan(name):
    g = catalog_group(name)
    one = AlgebraElement.one(g).to_int()
    found = [x.to_int() ^ one for x in enumerate_involutions(g, GF2)]
    assert len(found) == len(set(found))
    assert set(found) == brute_square_zero(g) - {0}
    assert count_involutions(g) == len(found)


@pytest.mark.parametrize("name", ["Q8", "D8", "S(2,2)", "GenQuaternion(4)", "ModularS(3,1)"])
def test_square_zero_kernel_matches_scan(name):
    g = catalog_group(name)
    w = square_zero_kernel(g)
    brute = brute_w(g)
    assert set(w.elements()) == brute
    assert w.rank == W_DIMS[name]
    assert brute_square_zero(g) <= brute


def test_q8_counts():
    q8 = group("Q8")
    assert len(brute_square_zero(q8)) == 16
    assert sum(1 for _ in enumerate_involutions(q8)) == 15
    # W is strictly larger than I(Omega(Q8)) here
    assert square_zero_kernel(q8).rank == 6
    assert augmentation_ideal(q8, omega_subgroup(q8)).rank == 4


def test_gf4_count_matches_exhaustive_scan():
    g = group("Q8")
    n = g.order
    # all 4^8 elements as pairs of GF(2) planes (x0 + w x1)
    Z = all_vectors(2 * n)
    x0, x1 = Z[:, :n], Z[:, n:]
    s00, s11 = brute_squares(g, x0), brute_squares(g, x1)
    cross = np.zeros_like(x0)
    for i in range(n):
        for j in range(n):
            cross[:, g.mul[i, j]] ^= (x0[:, i] & x1[:, j]) ^ (x1[:, i] & x0[:, j])
    # (x0 + w x1)^2 = (x0^2 + x1^2) + w (cross + x1^2), using w^2 = w + 1
    c0, c1 = s00 ^ s11, cross ^ s11
    zeros = int((~(c0.any(axis=1) | c1.any(axis=1))).sum())
    assert sum(1 for _ in enumerate_involutions(g, GF4)) == zeros - 1


def test_s22_count_and_ideal():
    g = group("S", 2, 2)
    ideal = augmentation_ideal(g, omega_subgroup(g))
    assert ideal.rank == 12
    one = AlgebraElement.one(g).to_int()
    found = {x.to_int() ^ one for x in enumerate_involutions(g)}
    assert len(found) == 2**12 - 1
    assert found == set(ideal.elements()) - {0}


def test_trivial_groups():
    c1, c2 = cyclic_group(1), cyclic_group(2)
    assert square_zero_kernel(c1).rank == 0
    assert [x.to_int() for x in enumerate_involutions(c2)] == [0b10]
    assert all_involutions_commute(c1).tag == "Good"


@pytest.mark.parametrize("name", ["Q8", "S(2,2)", "GenQuaternion(4)", "Q8xC2", "C2xD8"])
@pytest.mark.parametrize("field", [GF2, GF4])
def test_involution_certificates(name, field):
    g = catalog_group(name)
    one = AlgebraElement.one(g, field)
    for i, x in enumerate(enumerate_involutions(g, field)):
        assert x * x == one and x != one and augmentation(x) == 1
        if i > 300:
            break


def test_verdict_examples():
    d8 = group("DihedralPow", 3)
    v = all_involutions_commute(d8)
    assert v.tag == "Bad"
    assert is_noncommuting_involution_pair(*v.witness)
    assert all_involutions_commute(group("Q8")).tag == "Good"
    assert all_involutions_commute(group("GenQuaternion", 4)).tag == "Bad"


@pytest.mark.parametrize(
    "name", [n for n in ["Q8", "S(2,2)", "C4:C4", "Q8xC2", "D8", "D16", "C2xD8", "GenQuaternion(4)", "ModularS(3,1)"]]
)
def test_field_stability(name):
    g = catalog_group(name)
    assert all_involutions_commute(g, GF2).tag == all_involutions_commute(g, GF4).tag


def test_dimension_limit():
    g = group("H32")
    qd = quadratic_data(g)
    assert (qd.kernel_dim, qd.enum_dim) == (28, 15)
    with pytest.raises(DimensionExceeded):
        next(enumerate_involutions(g, max_dim=10))
    v = all_involutions_commute(g, max_dim=10)
    assert v.tag == "Unknown" and "max_dim" in v.reason
    r = omega_v_equals_ideal(g, max_dim=10)
    assert r.partial and r.contains and r.contained is None and not r.holds


def test_env_override(monkeypatch):
    monkeypatch.setenv("GOODGROUPS_MAX_DIM", "3")
    assert all_involutions_commute(group("H32")).tag == "Unknown"
    assert all_involutions_commute(group("H32"), max_dim=26).tag == "Good"


def test_workers_give_identical_verdicts():
    for name in ["Q8xC4", "GenQuaternion(4)"]:
        g = catalog_group(name)
        assert all_involutions_commute(g, workers=1).tag == all_involutions_commute(g, workers=2).tag


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["D8", "S(2,2)", "GenQuaternion(4)", "C2xD8"]), st.integers(0, 2**32))
def test_basis_coverage_identity(name, seed):
    g = catalog_group(name)
    rng = np.random.default_rng(seed)
    z, u, v = (AlgebraElement.from_coeffs(g, GF2, rng.integers(0, 2, g.order)) for _ in range(3))
    if z * u == u * z and z * v == v * z:
        assert z * (u + v) == (u + v) * z
    # commuting with z is additive in the other argument
    assert (z * (u + v) + (u + v) * z) == (z * u + u * z) + (z * v + v * z)


def test_omega_examples():
    for name in ["S(2,2)", "Q8xC4", "Q8"]:
        r = omega_v_equals_ideal(catalog_group(name))
        assert r.holds and not r.partial
    r = omega_v_equals_ideal(group("Q8"))
    assert r.involution_count == 15
    d = omega_v_equals_ideal(group("DihedralPow", 3))
    assert not d.holds and d.diagnostic
    # I(Omega(D8)) is the whole augmentation ideal: the failure is that it
    # contains non-involutions, every square-zero element lies inside it
    assert d.contained and not d.contains


WITNESSES = {
    "Q8xQ8": ("1+a+bc^2+c+abc+a^2d+abd+acd+bcd", "1+b(1+c^2)"),
    "H245W": ("1+a+ab+d+a^2bd+f+bf+ab^2df+a^3b^3df", "1+(b+b^-1)"),
    "S22oQ8": ("1+d^2a+b+a^3d+bd+f+abf+df+abdf", "1+b(1+d^2)"),
}


@pytest.mark.parametrize("name", sorted(WITNESSES))
def test_known_witnesses(name):
    g = group(name)
    z1, z2 = WITNESSES[name]
    assert verify_witness_pair(g, GF2, z1, z2)
    assert verify_witness_pair(g, GF4, z1, z2)
    x, y = parse_element(z1, g), parse_element(z2, g)
    assert is_noncommuting_involution_pair(x, y)


def test_witness_pair_errors():
    g = group("Q8")
    with pytest.raises(AlgebraError):
        verify_witness_pair(g, GF2, "a + b", "1")
    with pytest.raises((AlgebraError, PresentationSyntaxError, ValueError)):
        verify_witness_pair(g, GF2, "1 + q", "1")
    assert not verify_witness_pair(g, GF2, "a", "b")  # a has order 4


def test_witness_search_shapes():
    assert witness_search(group("GenQuaternion", 4)).shape == "c"
    assert witness_search(group("Q8")) is None
    assert witness_search(catalog_group("Q8xC2xC2")).shape in ("a", "b")
    assert witness_search(group("DihedralPow", 3)).shape == "a"
    for name in ["H245", "Q8xQ8", "S22oQ8"]:
        w = witness_search(catalog_group(name))
        assert w is not None and w.shape.startswith("e:")
        assert is_noncommuting_involution_pair(w.x, w.y)


@pytest.mark.parametrize("name", ["D8", "D16", "C2xD8", "GenQuaternion(4)", "ModularS(3,1)", "Q8xC2xC2", "Q8", "S(2,2)", "Q8xC2"])
def test_witness_agrees_with_enumeration(name):
    g = catalog_group(name)
    w = witness_search(g)
    v = all_involutions_commute(g)
    if w is not None:
        assert v.tag == "Bad"
    if v.tag == "Good":
        assert w is None


def test_quaternion_order8_pair():
    g = group("GenQuaternion", 4)
    assert g.element_order(g.generators[0]) == 8
    assert verify_witness_pair(g, GF2, "1+(1+a^2)(a+b)", "1+(1+a^2)(a+ab)")


@pytest.mark.parametrize(
    "g", [cyclic_group(2), cyclic_group(4), cyclic_group(8), direct_product(cyclic_group(2), cyclic_group(4))]
)
def test_abelian_oracle_small(g):
    assert lemma4_oracle(g)
    assert lemma4_oracle(g, GF4)


def test_abelian_oracle_c4_ideal():
    c4 = cyclic_group(4)
    ideal = augmentation_ideal(c4, omega_subgroup(c4))
    assert ideal == gf2.span([0b0101, 0b1010], 4)
    assert square_zero_kernel(c4) == ideal


def test_lemma_errors():
    with pytest.raises(AlgebraError):
        lemma4_oracle(group("Q8"))
    for n in (1, 5):
        with pytest.raises(ValueError):
            lemma5_oracle(n)


def test_cyclic_oracle_small():
    assert lemma5_oracle(2) and lemma5_oracle(3)
    assert cyclic_mul(0, 0b1011, 4) == 0


def test_cyclic_mul_matches_group_algebra():
    c = cyclic_group(8)
    rng = np.random.default_rng(1)
    for _ in range(20):
        u, v = (int(x) for x in rng.integers(0, 256, 2))
        x, y = AlgebraElement.from_int(c, GF2, u), AlgebraElement.from_int(c, GF2, v)
        assert (x * y).to_int() == cyclic_mul(u, v, 8)


def test_theorem_iii_3_good_at_dimension_30():
    g = group("TheoremIII", 3)
    assert all_involutions_commute(g).tag == "Unknown"
    v = all_involutions_commute(g, max_dim=30)
    assert v.tag == "Good" and (v.kernel_dim, v.enum_dim, v.span_dim) == (56, 30, 48)
