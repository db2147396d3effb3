"""Pants decompositions as decorated trivalent graphs, plus their census."""

from .canon import canonical_form, canonicalize
from .census import (
    Lemma21Report,
    Lemma22Report,
    enumerate_decompositions,
    enumerated_dimension_set,
    verify_lemma_2_1,
    verify_lemma_2_2,
)
from .graphs import (
    ONE_SIDED,
    TWO_SIDED,
    CurveClassification,
    CurveLabel,
    PantsGraph,
    adjacency_graph,
    classify_curve,
    curve_labels,
    is_top_dimensional,
    realized_surface,
)

__all__ = [
    "PantsGraph",
    "CurveLabel",
    "CurveClassification",
    "ONE_SIDED",
    "TWO_SIDED",
    "adjacency_graph",
    "canonical_form",
    "canonicalize",
    "classify_curve",
    "curve_labels",
    "enumerate_decompositions",
    "enumerated_dimension_set",
    "is_top_dimensional",
    "realized_surface",
    "verify_lemma_2_1",
    "verify_lemma_2_2",
    "Lemma21Report",
    "Lemma22Report",
]
