"""Exact toolkit for generalized restricted root systems and supersymmetric pairs."""

from .autofix import (RootSystemAutomorphism, analyze, classify_T, enumerate_test_automorphisms,
                      make_automorphism)
from .catalog import build_family, catalog_selftest, family_instances, parse_family
from .grrs import Grrs, check_axioms
from .pairs import pair_automorphism, pair_grrs, parse_pair
from .restrict import restrict, restricted_checks, satake_diagram
from .superalg import build_algebra, build_involution, iwasawa_check
from .svparams import check_deformed_axioms, sv_parameters

__all__ = [
    "Grrs", "RootSystemAutomorphism", "analyze", "build_algebra", "build_family",
    "build_involution", "catalog_selftest", "check_axioms", "check_deformed_axioms",
    "classify_T", "enumerate_test_automorphisms", "family_instances", "iwasawa_check",
    "make_automorphism", "pair_automorphism", "pair_grrs", "parse_family", "parse_pair",
    "restrict", "restricted_checks", "satake_diagram", "sv_parameters",
]
