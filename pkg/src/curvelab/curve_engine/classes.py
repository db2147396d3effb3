"""Enumeration of essential curve classes with bounded weight."""

from __future__ import annotations

from functools import lru_cache

from ..surface_core import SurfaceSpec
from .cutting import is_essential
from .normal import (
    NormalCurve,
    canonical_weights,
    enumerate_weight_vectors,
    trace,
)
from .triangulation import model_surface

__all__ = ["enumerate_curve_classes"]


@lru_cache(maxsize=None)
def _enumerate_cached(genus, boundary, bound):
    tri = model_surface(genus, boundary)
    seen = set()
    out = []
    for total in range(1, bound + 1):
        for vec in enumerate_weight_vectors(tri, total):
            if len(trace(tri, vec)) != 1:
                continue
            canon = canonical_weights(tri, vec)
            if canon in seen:
                continue
            seen.add(canon)
            curve = NormalCurve(tri.name, canon)
            if is_essential(tri, curve):
                out.append(curve)
    out.sort(key=lambda c: (c.total(), c.weights))
    return tuple(out)


def enumerate_curve_classes(s: SurfaceSpec, bound: int) -> list[NormalCurve]:
    """All essential classes with a representative of total weight <= bound.

    One canonical representative per class, sorted by (total weight, weight
    vector); deterministic across runs.
    """
    return list(_enumerate_cached(s.genus, s.boundary, bound))
