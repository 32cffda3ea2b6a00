"""Theorem-level classification, the built-in catalog and the verification run."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Sequence

from .algebra import GF2, GF4, FieldSpec, augmentation_ideal, class_count, commutator_subspace
from .groups import (
    MAX_ORDER,
    FiniteGroup,
    GroupError,
    central_product,
    center,
    cyclic_group,
    direct_product,
    frattini_subgroup,
    group_fingerprint,
    isomorphism_test,
    omega_subgroup,
    semidirect_product,
    structural_report,
    subgroup_generated,
    todd_coxeter,
)
from .presentation import builtin, parse_builtin_spec, parse_presentation
from .units import (
    KNOWN_WITNESSES,
    Verdict,
    all_involutions_commute,
    lemma4_oracle,
    lemma5_oracle,
    max_dim_default,
    omega_v_equals_ideal,
    verify_witness_pair,
    witness_search,
)

ABELIAN = "AbelianTriviallyGood"
GOOD = "GoodByTheorem"
BAD = "BadByTheorem"


@dataclass(frozen=True)
class Classification:
    tag: str
    family: str | None = None  # e.g. "S(2,3)", "Q8xC4"
    part: str | None = None  # "i" .. "iv"

    @property
    def good(self) -> bool:
        return self.tag in (ABELIAN, GOOD)

    def __str__(self) -> str:
        return f"{self.tag}({self.family})" if self.family else self.tag


# ---------------------------------------------------------------------------
# recipes: small tuples naming group_engine constructors


def build(recipe: tuple) -> FiniteGroup:
    """Construct a group from a recipe.

    ``("builtin", name, params)``, ``("cyclic", n)``, ``("direct", r1, r2, ...)``,
    ``("semidirect", kind)`` or ``("central", kind)``.
    """
    kind = recipe[0]
    if kind == "builtin":
        return todd_coxeter(builtin(recipe[1], recipe[2]))
    if kind == "cyclic":
        return cyclic_group(recipe[1], recipe[2] if len(recipe) > 2 else "c")
    if kind == "direct":
        parts = [build(r) for r in recipe[1:]]
        g = parts[0]
        for h in parts[1:]:
            g = direct_product(g, h)
        return g
    if kind == "semidirect":
        return _SEMIDIRECT[recipe[1]]()
    if kind == "central":
        return _CENTRAL[recipe[1]]()
    raise GroupError(f"unknown recipe {recipe!r}")


def recipe_str(recipe: tuple) -> str:
    kind = recipe[0]
    if kind == "builtin":
        return f"{recipe[1]}({','.join(map(str, recipe[2]))})" if recipe[2] else recipe[1]
    if kind == "cyclic":
        return f"C{recipe[1]}"
    if kind == "direct":
        return " x ".join(recipe_str(r) for r in recipe[1:])
    return f"{kind}:{recipe[1]}"


def _power_map(g: FiniteGroup, k: int) -> list[int]:
    return [g.power(x, k) for x in range(g.order)]


def _c4_by_c4() -> FiniteGroup:
    n, h = cyclic_group(4, "a"), cyclic_group(4, "b")
    return semidirect_product(n, h, [_power_map(n, 3)])


def _c4_by_q8() -> FiniteGroup:
    # Q8 = <a, b> acts on <d> = C4: a inverts d, b centralizes it
    n = cyclic_group(4, "d")
    q = todd_coxeter(builtin("Q8"))
    inv, ident = _power_map(n, 3), list(range(4))
    return semidirect_product(n, q, [inv, ident])


def _c8_by_q8() -> FiniteGroup:
    n = cyclic_group(8, "d")
    q = todd_coxeter(builtin("Q8"))
    return semidirect_product(n, q, [_power_map(n, 5), list(range(8))])


def _s22_central_q8() -> FiniteGroup:
    s = todd_coxeter(builtin("S22"))
    q = todd_coxeter(builtin("Q8"))
    a, b = s.generators
    z_s = s.m(s.power(a, 2), s.power(b, 2))
    z_q = q.power(q.generators[0], 2)
    return central_product(s, q, z_s, z_q)


_SEMIDIRECT: dict[str, Callable[[], FiniteGroup]] = {
    "C4:C4": _c4_by_c4,
    "C4:Q8": _c4_by_q8,
    "C8:Q8": _c8_by_q8,
}
_CENTRAL: dict[str, Callable[[], FiniteGroup]] = {"S22oQ8": _s22_central_q8}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    recipe: tuple
    order: int
    expected: Classification
    note: str = ""
    obrien: bool = False  # in the list of groups with Phi = Omega central of order 4

    def build(self) -> FiniteGroup:
        g = build(self.recipe)
        if g.order != self.order:
            raise GroupError(f"{self.name}: constructed order {g.order}, expected {self.order}")
        return g


def _b(name, *params):
    return ("builtin", name, tuple(params))


def _c(n):
    return ("cyclic", n)


def builtin_catalog() -> list[CatalogEntry]:
    G, B, A = GOOD, BAD, ABELIAN
    return [
        # good, family (i)
        CatalogEntry("Q8", _b("Q8"), 8, Classification(G, "Q8", "i"), "quaternion group"),
        CatalogEntry("S(2,2)", _b("S", 2, 2), 16, Classification(G, "S(2,2)", "i"), "", obrien=True),
        CatalogEntry("C4:C4", ("semidirect", "C4:C4"), 16, Classification(G, "S(2,2)", "i"), "b inverts a", obrien=True),
        CatalogEntry("S(2,3)", _b("S", 2, 3), 32, Classification(G, "S(2,3)", "i")),
        CatalogEntry("S(3,2)", _b("S", 3, 2), 32, Classification(G, "S(3,2)", "i")),
        # (ii)
        CatalogEntry("Q8xC2", ("direct", _b("Q8"), _c(2)), 16, Classification(G, "Q8xC2", "ii"), "Hamiltonian"),
        CatalogEntry("Q8xC4", ("direct", _b("Q8"), _c(4)), 32, Classification(G, "Q8xC4", "ii"), "", obrien=True),
        # (iii), (iv)
        CatalogEntry("TheoremIII(2)", _b("TheoremIII", 2), 32, Classification(G, "TheoremIII(2)", "iii"), "", obrien=True),
        CatalogEntry("C4:Q8", ("semidirect", "C4:Q8"), 32, Classification(G, "TheoremIII(2)", "iii"), "a inverts d", obrien=True),
        CatalogEntry("TheoremIII(3)", _b("TheoremIII", 3), 64, Classification(G, "TheoremIII(3)", "iii")),
        CatalogEntry("C8:Q8", ("semidirect", "C8:Q8"), 64, Classification(G, "TheoremIII(3)", "iii"), "d^a = d^5"),
        CatalogEntry("H32", _b("H32"), 32, Classification(G, "H32", "iv"), "", obrien=True),
        # bad
        CatalogEntry("D8", _b("DihedralPow", 3), 8, Classification(B), "noncentral involutions"),
        CatalogEntry("D16", _b("DihedralPow", 4), 16, Classification(B)),
        CatalogEntry("C2xD8", ("direct", _c(2), _b("DihedralPow", 3)), 16, Classification(B)),
        CatalogEntry("GenQuaternion(4)", _b("GenQuaternion", 4), 16, Classification(B), "element of order 8"),
        CatalogEntry("ModularS(3,1)", _b("ModularS", 3, 1), 16, Classification(B), "m = 1"),
        CatalogEntry("Q8xC2xC2", ("direct", _b("Q8"), _c(2), _c(2)), 32, Classification(B), "|Omega| = 8"),
        CatalogEntry("Q8xQ8", _b("Q8xQ8"), 64, Classification(B), "explicit pair", obrien=True),
        CatalogEntry("H245", _b("H245"), 64, Classification(B), "explicit pair", obrien=True),
        CatalogEntry("S22oQ8", ("central", "S22oQ8"), 64, Classification(B), "explicit pair", obrien=True),
        # abelian controls
        CatalogEntry("C4", _c(4), 4, Classification(A)),
        CatalogEntry("C8", _c(8), 8, Classification(A)),
        CatalogEntry("C2xC4", ("direct", _c(2), _c(4)), 8, Classification(A)),
        CatalogEntry("C4xC4", ("direct", _c(4), _c(4)), 16, Classification(A), "", obrien=True),
        CatalogEntry("C2xC8", ("direct", _c(2), _c(8)), 16, Classification(A)),
        CatalogEntry("C16", _c(16), 16, Classification(A)),
    ]


def catalog_entry(name: str) -> CatalogEntry | None:
    for e in builtin_catalog():
        if e.name.lower() == name.lower():
            return e
    return None


# ---------------------------------------------------------------------------
# classification


def _log2(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise GroupError(f"order {n} is not a power of 2")
    return n.bit_length() - 1


def family_members(order: int) -> list[tuple[str, str, tuple]]:
    """Theorem family members of the given order as ``(part, label, recipe)``, in family order."""
    k = _log2(order)
    out: list[tuple[str, str, tuple]] = []
    for n in range(2, k - 1):
        m = k - n
        if m >= 2:
            out.append(("i", f"S({n},{m})", _b("S", n, m)))
    if k == 3:
        out.append(("i", "Q8", _b("Q8")))
    if k >= 4:
        out.append(("ii", f"Q8xC{2 ** (k - 3)}", ("direct", _b("Q8"), _c(2 ** (k - 3)))))
    if k - 3 >= 2:
        out.append(("iii", f"TheoremIII({k - 3})", _b("TheoremIII", k - 3)))
    if k == 5:
        out.append(("iv", "H32", _b("H32")))
    return out


@lru_cache(maxsize=None)
def _member(recipe: tuple) -> tuple[FiniteGroup, tuple]:
    g = build(recipe)
    return g, group_fingerprint(g)


def theorem_classify(g: FiniteGroup) -> Classification:
    """Classify ``g`` by isomorphism against the good families.

    Families are tried in order (i), (ii), (iii), (iv); the first match wins.
    """
    if g.order > MAX_ORDER:
        raise GroupError(f"order {g.order} exceeds {MAX_ORDER}")
    _log2(g.order)
    if g.is_abelian:
        return Classification(ABELIAN)
    fp = group_fingerprint(g)
    for part, label, recipe in family_members(g.order):
        h, hfp = _member(recipe)
        if hfp == fp and isomorphism_test(g, h) is not None:
            return Classification(GOOD, label, part)
    return Classification(BAD)


# ---------------------------------------------------------------------------
# computational verdicts and reports


def decide(
    g: FiniteGroup,
    field: FieldSpec = GF2,
    max_dim: int | None = None,
    strategy: str = "auto",
    workers: int | None = None,
) -> Verdict:
    """Computational verdict.

    ``exhaustive`` runs the enumeration; ``witness`` only searches for
    noncommuting pairs (Bad or Unknown); ``auto`` tries a quick witness
    search when the enumeration is out of range.
    """
    if strategy not in ("auto", "exhaustive", "witness"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if g.is_abelian:
        return Verdict("Good", reason="commutative group algebra")
    dims: dict = {}
    if strategy in ("auto", "exhaustive"):
        v = all_involutions_commute(g, field, max_dim, workers)
        if v.tag != "Unknown" or strategy == "exhaustive":
            return v
        unknown_reason = v.reason
        dims = {"kernel_dim": v.kernel_dim, "enum_dim": v.enum_dim}
    else:
        unknown_reason = "witness strategy cannot prove Good"
    t0 = time.perf_counter()
    w = witness_search(g, field)
    if w is not None:
        return Verdict("Bad", (w.x, w.y), reason=f"witness shape {w.shape}", elapsed=time.perf_counter() - t0, **dims)
    return Verdict("Unknown", reason=unknown_reason, elapsed=time.perf_counter() - t0, **dims)


@dataclass
class Report:
    name: str
    structure: dict
    classification: Classification
    verdict: Verdict
    field: str = "GF(2)"
    timings: dict = dc_field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        if self.verdict.tag == "Unknown":
            return False
        return self.classification.good == (self.verdict.tag == "Good")

    def to_json(self) -> dict:
        out = self.verdict.to_json(self.name)
        out["field"] = self.field
        out["classification"] = str(self.classification)
        out["agreement"] = self.agreement
        out["structure"] = self.structure
        out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out


def report_for(
    name: str, g: FiniteGroup, field: FieldSpec = GF2, max_dim: int | None = None, strategy: str = "auto"
) -> Report:
    t0 = time.perf_counter()
    structure = structural_report(g).as_dict()
    t1 = time.perf_counter()
    cls = theorem_classify(g)
    t2 = time.perf_counter()
    verdict = decide(g, field, max_dim, strategy)
    t3 = time.perf_counter()
    return Report(
        name, structure, cls, verdict, field.name, {"structure": t1 - t0, "classify": t2 - t1, "verdict": t3 - t2}
    )


@dataclass
class Check:
    name: str
    passed: bool | None  # None = resource-limited
    detail: str = ""
    elapsed: float = 0.0

    def to_json(self) -> dict:
        status = "pass" if self.passed else ("unknown" if self.passed is None else "fail")
        return {"check": self.name, "status": status, "detail": self.detail, "elapsed": round(self.elapsed, 4)}


def _timed(name: str, fn: Callable[[], tuple[bool | None, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, detail, time.perf_counter() - t0)


def _known_witness_check(key: str) -> tuple[bool, str]:
    kw = KNOWN_WITNESSES[key]
    host = todd_coxeter(builtin(*kw.host))
    ok = verify_witness_pair(host, GF2, kw.z1, kw.z2)
    entry = catalog_entry(key)
    iso = entry is not None and isomorphism_test(host, entry.build()) is not None
    return ok and iso, f"pair verifies: {ok}; host isomorphic to catalog group: {iso}"


def _quaternion_pair_check() -> tuple[bool, str]:
    g = todd_coxeter(builtin("GenQuaternion", (4,)))
    a, b = g.generators
    c = a  # a has order 8
    if g.element_order(c) != 8:
        return False, "generator a does not have order 8"
    x = f"1+(1+{g.name(g.power(c, 2))})({g.name(c)}+{g.name(b)})"
    y = f"1+(1+{g.name(g.power(c, 2))})({g.name(c)}+{g.name(g.m(c, b))})"
    return verify_witness_pair(g, GF2, x, y), f"{x} ; {y}"


def _obrien_check(entries: Sequence[CatalogEntry]) -> tuple[bool, str]:
    bad = []
    for e in entries:
        g = e.build()
        phi, om = frattini_subgroup(g), omega_subgroup(g)
        if not (phi.members == om.members and om.members <= center(g).members and len(om) == 4):
            bad.append(e.name)
    return not bad, f"{len(entries)} groups" + (f"; failing: {bad}" if bad else "")


def _blackburn_check(groups: Sequence[tuple[str, FiniteGroup]]) -> tuple[bool, str]:
    checked, bad = 0, []
    for name, g in groups:
        phi, om = frattini_subgroup(g), omega_subgroup(g)
        if g.exponent == 4 and phi.members == om.members and len(om) == 4:
            checked += 1
            if g.order > len(om) ** 3:
                bad.append(name)
    return not bad, f"{checked} exponent-4 groups checked" + (f"; failing: {bad}" if bad else "")


def _dimension_check(groups: Sequence[tuple[str, FiniteGroup]]) -> tuple[bool, str]:
    bad = []
    for name, g in groups:
        if commutator_subspace(g, GF2).rank != g.order - class_count(g):
            bad.append(f"{name}: dim L")
        for sub in (center(g), omega_subgroup(g), frattini_subgroup(g), subgroup_generated(g, [])):
            if augmentation_ideal(g, sub, GF2).rank != g.order - g.order // len(sub):
                bad.append(f"{name}: dim I")
    return not bad, f"{len(groups)} groups" + (f"; failing: {bad}" if bad else "")


@dataclass
class VerificationResult:
    reports: list[Report]
    checks: list[Check]

    @property
    def status(self) -> int:
        if any(c.passed is False for c in self.checks):
            return 1
        if any(not r.agreement and r.verdict.tag != "Unknown" for r in self.reports):
            return 1
        if any(c.passed is None for c in self.checks) or any(r.verdict.tag == "Unknown" for r in self.reports):
            return 2
        return 0

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "reports": [r.to_json() for r in self.reports],
            "checks": [c.to_json() for c in self.checks],
        }

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")


def run_paper_verification(
    max_dim: int | None = None,
    fields: Sequence[FieldSpec] = (GF2,),
    field_independence_order: int = 16,
) -> VerificationResult:
    """Run every check: witnesses, lemma oracles, catalog agreement and structure."""
    max_dim = max_dim_default() if max_dim is None else max_dim
    catalog = sorted(builtin_catalog(), key=lambda e: e.name)
    groups = [(e.name, e.build()) for e in catalog]
    reports = []
    for field_ in fields:
        for e, (name, g) in zip(catalog, groups):
            reports.append(report_for(name, g, field_, max_dim))
    checks = [
        _timed(f"witness {k}", lambda k=k: _known_witness_check(k)) for k in sorted(KNOWN_WITNESSES)
    ]
    checks.append(_timed("order-8 element witness in GenQuaternion(4)", _quaternion_pair_check))
    abelian = [(n, g) for n, g in groups if g.is_abelian]
    checks.append(
        _timed("abelian square-zero set", lambda: (all(lemma4_oracle(g) for _, g in abelian), f"{len(abelian)} groups"))
    )
    checks.append(_timed("cyclic square-zero set, n = 2..4", lambda: (all(lemma5_oracle(n) for n in (2, 3, 4)), "exhaustive")))

    def omega_all():
        names = ["Q8", "S(2,2)", "S(2,3)", "S(3,2)", "Q8xC2", "Q8xC4", "TheoremIII(2)", "H32"]
        res = {n: omega_v_equals_ideal(dict(groups)[n], GF2, max_dim) for n in names}
        failing = [n for n, r in res.items() if not r.holds]
        return not failing, "holds for " + ", ".join(names) if not failing else f"fails for {failing}"

    checks.append(_timed("Omega(V) = 1 + I(Omega(G))", omega_all))

    def field_independence():
        small = [(n, g) for n, g in groups if g.order <= field_independence_order and not g.is_abelian]
        diff = []
        for n, g in small:
            a = all_involutions_commute(g, GF2, max_dim).tag
            b = all_involutions_commute(g, GF4, max_dim).tag
            if a != b or a == "Unknown":
                diff.append(f"{n}: {a}/{b}")
        return not diff, f"{len(small)} groups" + (f"; differing: {diff}" if diff else "")

    checks.append(_timed("field independence GF(2) vs GF(4)", field_independence))
    checks.append(_timed("O'Brien list structure", lambda: _obrien_check([e for e in catalog if e.obrien])))
    checks.append(_timed("Blackburn bound", lambda: _blackburn_check(groups)))
    checks.append(_timed("dimension identities", lambda: _dimension_check(groups)))

    def witnesses_for_bad():
        missing = []
        for e, (n, g) in zip(catalog, groups):
            if e.expected.tag == BAD and g.order <= 32 and witness_search(g) is None:
                missing.append(n)
        return not missing, "shape search" + (f"; no witness for {missing}" if missing else "")

    checks.append(_timed("explicit witnesses for bad groups of order <= 32", witnesses_for_bad))

    def catalog_expectations():
        wrong = [n for e, (n, g) in zip(catalog, groups) if theorem_classify(g) != e.expected]
        return not wrong, f"{len(catalog)} entries" + (f"; unexpected: {wrong}" if wrong else "")

    checks.append(_timed("catalog classification", catalog_expectations))
    return VerificationResult(reports, checks)


# ---------------------------------------------------------------------------
# resolving group arguments


def load_group(spec: str) -> tuple[str, FiniteGroup]:
    """Resolve ``builtin:NAME(params)``, a catalog name, a table JSON file or a presentation file."""
    if spec.startswith("builtin:"):
        name, params = parse_builtin_spec(spec[len("builtin:") :])
        return spec[len("builtin:") :], todd_coxeter(builtin(name, params))
    entry = catalog_entry(spec)
    if entry is not None:
        return entry.name, entry.build()
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        if text.lstrip().startswith("{"):
            return path.stem, FiniteGroup.loads(text)
        return path.stem, todd_coxeter(parse_presentation(text))
    name, params = parse_builtin_spec(spec)
    return spec, todd_coxeter(builtin(name, params))
