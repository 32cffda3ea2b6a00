"""Involutions of normalized unit groups V(KG) for finite 2-groups G over GF(2) and GF(4)."""

from .algebra import GF2, GF4, AlgebraElement, FieldSpec, format_element, parse_element
from .classifier import (
    CatalogEntry,
    Classification,
    Report,
    builtin_catalog,
    load_group,
    run_paper_verification,
    theorem_classify,
)
from .groups import FiniteGroup, direct_product, isomorphism_test, semidirect_product, central_product, todd_coxeter
from .presentation import Presentation, builtin, parse_presentation
from .units import (
    DimensionExceeded,
    Verdict,
    all_involutions_commute,
    enumerate_involutions,
    lemma4_oracle,
    lemma5_oracle,
    omega_v_equals_ideal,
    square_zero_kernel,
    verify_witness_pair,
    witness_search,
)

__all__ = [
    "GF2",
    "GF4",
    "AlgebraElement",
    "FieldSpec",
    "format_element",
    "parse_element",
    "CatalogEntry",
    "Classification",
    "Report",
    "builtin_catalog",
    "load_group",
    "run_paper_verification",
    "theorem_classify",
    "FiniteGroup",
    "direct_product",
    "isomorphism_test",
    "semidirect_product",
    "central_product",
    "todd_coxeter",
    "Presentation",
    "builtin",
    "parse_presentation",
    "DimensionExceeded",
    "Verdict",
    "all_involutions_commute",
    "enumerate_involutions",
    "lemma4_oracle",
    "lemma5_oracle",
    "omega_v_equals_ideal",
    "square_zero_kernel",
    "verify_witness_pair",
    "witness_search",
]
