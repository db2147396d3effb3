"""Concrete curves on model triangulations of nonorientable surfaces."""

from .classes import enumerate_curve_classes
from .cover import (
    DoubleCover,
    double_cover,
    double_cover_oracle,
    lift_weights,
    preimage_connected,
)
from .cutting import CutStructure, cut_along, cut_structure, is_essential
from .files import curve_from_text, curve_to_text
from .intersection import Overlay, geometric_intersection, intersection_number
from .mapping import (
    MappingClassGenerator,
    apply_generator,
    boundary_permutation,
    crosscap_slide,
    dehn_twist,
    generator_dictionary,
    model_automorphisms,
)
from .normal import (
    NormalCurve,
    ONE_SIDED,
    TWO_SIDED,
    canonical_weights,
    curve_from_weights,
    enumerate_weight_vectors,
    sidedness,
    trace,
    validate_normal,
    validate_weights,
)
from .triangulation import Triangulation, model_surface, parse_model_key

__all__ = [
    "NormalCurve",
    "Triangulation",
    "ONE_SIDED",
    "TWO_SIDED",
    "model_surface",
    "parse_model_key",
    "validate_normal",
    "validate_weights",
    "trace",
    "sidedness",
    "canonical_weights",
    "curve_from_weights",
    "enumerate_weight_vectors",
    "enumerate_curve_classes",
    "cut_along",
    "cut_structure",
    "CutStructure",
    "is_essential",
    "intersection_number",
    "geometric_intersection",
    "Overlay",
    "DoubleCover",
    "double_cover",
    "double_cover_oracle",
    "lift_weights",
    "preimage_connected",
    "MappingClassGenerator",
    "dehn_twist",
    "crosscap_slide",
    "boundary_permutation",
    "model_automorphisms",
    "generator_dictionary",
    "apply_generator",
    "curve_to_text",
    "curve_from_text",
]
