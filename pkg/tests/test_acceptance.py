"""Acceptance criteria, one test each; a summary line per criterion is printed at the end of the run."""

import time

import numpy as np

from goodgroups.algebra import GF2, GF4, AlgebraElement, augmentation_ideal, class_count, commutator_subspace
from goodgroups.classifier import builtin_catalog, theorem_classify
from goodgroups.groups import (
    center,
    commutator_subgroup,
    cyclic_group,
    direct_product,
    frattini_subgroup,
    is_associative,
    omega_subgroup,
    subgroup_generated,
)
from goodgroups.units import (
    KNOWN_WITNESSES,
    all_involutions_commute,
    enumerate_involutions,
    lemma4_oracle,
    lemma5_oracle,
    omega_v_equals_ideal,
    verify_witness_pair,
)

from conftest import catalog_group, group, record


def test_criterion_1_known_witnesses():
    t0 = time.perf_counter()
    results = {}
    for key, kw in KNOWN_WITNESSES.items():
        results[key] = verify_witness_pair(group(kw.host[0], *kw.host[1]), GF2, kw.z1, kw.z2)
    elapsed = time.perf_counter() - t0
    ok = all(results.values()) and elapsed < 1.0
    record(1, "order-64 witness pairs", ok, f"{results}, exact; {elapsed:.3f}s < 1s")
    assert ok


def test_criterion_2_quaternion_witness():
    t0 = time.perf_counter()
    g = group("GenQuaternion", 4)
    c, b = g.generators
    order_ok = g.element_order(c) == 8
    ok = order_ok and verify_witness_pair(g, GF2, "1+(1+a^2)(a+b)", "1+(1+a^2)(a+ab)")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    record(2, "GenQuaternion(4) pair with |c| = 8", ok, f"exact; {elapsed:.3f}s < 1s")
    assert ok


def test_criterion_3_classification_agreement():
    t0 = time.perf_counter()
    entries = [e for e in builtin_catalog() if e.order <= 32]
    kinds = {e.expected.tag for e in entries}
    rows = []
    for e in entries:
        g = e.build()
        cls = theorem_classify(g)
        verdict = all_involutions_commute(g, GF2, max_dim=26).tag
        rows.append((e.name, cls.good, verdict))
    disagree = [n for n, good, v in rows if v == "Unknown" or good != (v == "Good")]
    elapsed = time.perf_counter() - t0
    ok = not disagree and len(rows) >= 13 and len(kinds) == 3 and elapsed < 600
    record(3, "catalog agreement, order <= 32, max_dim 26", ok, f"{len(rows)} groups, disagreements {disagree}; {elapsed:.1f}s < 600s")
    assert ok


def test_criterion_4_omega_v():
    names = ["Q8", "S(2,2)", "S(2,3)", "S(3,2)", "Q8xC2", "Q8xC4", "TheoremIII(2)", "H32"]
    failing = [n for n in names if not omega_v_equals_ideal(catalog_group(n), GF2).holds]
    q8 = group("Q8")
    # brute force over all 2^8 elements of KQ8
    idx = np.arange(256)
    Z = ((idx[:, None] >> np.arange(8)) & 1).astype(np.uint8)
    sq = np.zeros_like(Z)
    for i in range(8):
        for j in range(8):
            sq[:, q8.mul[i, j]] ^= Z[:, i] & Z[:, j]
    brute = int((~sq.any(axis=1)).sum()) - 1
    enumerated = sum(1 for _ in enumerate_involutions(q8))
    ok = not failing and brute == enumerated == 15
    record(4, "Omega(V) = 1 + I(Omega(G))", ok, f"failing {failing}; |involutions of V(KQ8)| brute {brute}, enumerated {enumerated}, expected 15")
    assert ok


def test_criterion_5_abelian_oracle():
    t0 = time.perf_counter()
    c = cyclic_group
    groups = {
        "C4": c(4),
        "C8": c(8),
        "C2xC4": direct_product(c(2), c(4)),
        "C2xC8": direct_product(c(2), c(8)),
        "C4xC4": direct_product(c(4), c(4)),
        "C16": c(16),
    }
    res = {n: lemma4_oracle(g, GF2) for n, g in groups.items()}
    elapsed = time.perf_counter() - t0
    ok = all(res.values()) and elapsed < 30
    record(5, "abelian square-zero set = I(Omega(G)), exhaustive", ok, f"{res}; {elapsed:.2f}s < 30s")
    assert ok


def test_criterion_6_cyclic_oracle():
    t0 = time.perf_counter()
    res = {n: lemma5_oracle(n) for n in (2, 3, 4)}
    elapsed = time.perf_counter() - t0
    ok = all(res.values()) and elapsed < 60
    record(6, "cyclic lemma, n = 2, 3, 4 exhaustive", ok, f"{res}; {elapsed:.2f}s < 60s")
    assert ok


def test_criterion_7_field_independence():
    diffs = []
    names = []
    for e in builtin_catalog():
        if e.order > 16:
            continue
        g = e.build()
        a = all_involutions_commute(g, GF2).tag
        b = all_involutions_commute(g, GF4).tag
        names.append(e.name)
        if a != b or a == "Unknown":
            diffs.append((e.name, a, b))
    ok = not diffs
    record(7, "GF(2) and GF(4) tags agree, order <= 16", ok, f"{len(names)} groups, differences {diffs}")
    assert ok


def test_criterion_8_structure():
    bad = []
    obrien = [e for e in builtin_catalog() if e.obrien]
    for e in obrien:
        g = e.build()
        phi, om = frattini_subgroup(g), omega_subgroup(g)
        if not (phi.members == om.members and om.members <= center(g).members and len(om) == 4):
            bad.append(e.name)
    dims = []
    for e in builtin_catalog():
        g = e.build()
        if commutator_subspace(g).rank != g.order - class_count(g):
            dims.append((e.name, "L"))
        subs = [center(g), omega_subgroup(g), frattini_subgroup(g), commutator_subgroup(g), subgroup_generated(g, [])]
        for n in subs:
            if augmentation_ideal(g, n).rank != g.order - g.order // len(n):
                dims.append((e.name, "I", len(n)))
    ok = not bad and not dims
    record(8, "O'Brien structure and dimension identities", ok, f"{len(obrien)} listed groups, failing {bad}; dimension failures {dims}")
    assert ok


def test_criterion_9_construction():
    expected = {("S", (2, 2)): 16, ("S", (2, 3)): 32, ("S", (3, 2)): 32, ("S", (3, 3)): 64, ("S", (2, 4)): 64,
                ("H32", ()): 32, ("H245", ()): 64, ("S22oQ8", ()): 64,
                ("TheoremIII", (2,)): 32, ("TheoremIII", (3,)): 64, ("TheoremIII", (4,)): 128}
    wrong = []
    for (name, params), order in expected.items():
        g = group(name, *params)
        if g.order != order or not is_associative(g.mul):
            wrong.append((name, params, g.order))
    ok = not wrong
    record(9, "coset enumeration orders, full associativity", ok, f"{len(expected)} presentations, wrong {wrong}")
    assert ok
