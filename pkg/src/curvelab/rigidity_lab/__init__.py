"""Finite curve complexes, map search, certificates, and fixtures."""

from .complexes import (
    FiniteCurveComplex,
    SmallIntersection,
    TrueSimplex,
    adjacency_in,
    build_complex,
    small_intersection,
    true_maximal_simplices,
)
from .fixtures import (
    ConfigurationFixture,
    FixtureReport,
    fixture_names,
    load_fixture,
    run_fixture,
)
from .search import (
    GeometricityCertificate,
    LemmaReport,
    NotFoundAtBound,
    PROPAGATORS,
    SuiteResult,
    certify_geometric,
    homeomorphism_invariance_suite,
    map_is_injective_simplicial,
    propagator_hypothesis_holds,
    search_injective_maps,
    verify_lemma_predicates,
)

__all__ = [
    "FiniteCurveComplex",
    "TrueSimplex",
    "SmallIntersection",
    "build_complex",
    "true_maximal_simplices",
    "adjacency_in",
    "small_intersection",
    "PROPAGATORS",
    "propagator_hypothesis_holds",
    "search_injective_maps",
    "map_is_injective_simplicial",
    "certify_geometric",
    "GeometricityCertificate",
    "NotFoundAtBound",
    "verify_lemma_predicates",
    "LemmaReport",
    "SuiteResult",
    "homeomorphism_invariance_suite",
    "ConfigurationFixture",
    "FixtureReport",
    "fixture_names",
    "load_fixture",
    "run_fixture",
]
