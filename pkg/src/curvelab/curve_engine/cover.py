"""Orientation double cover: the independent intersection oracle.

The cover duplicates each triangle into a positive and a negative sheet;
orientation-compatible gluings stay within sheets, orientation-reversing
ones cross sheets.  The result is connected and orientable exactly when
the base surface is nonorientable.  Curves lift by copying weights to both
sheets; a curve is one-sided iff its full preimage is connected.

The oracle computes intersection numbers upstairs (where every bigon of a
bordered model is vertex-free) and halves them.  For the Klein bottle the
cover is a torus and the count reduces to signed homology counts, which
need no positional minimisation at all.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import CurvelabError, NotEssential
from .cutting import is_essential
from .intersection import algebraic_component_matrix, geometric_intersection
from .normal import NormalCurve, ONE_SIDED, canonical_weights, check_reference, sidedness, trace
from .triangulation import FLIP, KEEP, Triangulation

__all__ = [
    "DoubleCover",
    "double_cover",
    "lift_weights",
    "preimage_connected",
    "double_cover_oracle",
    "certified_lower_bound",
]


class DoubleCover:
    """Orientation double cover with sheet bookkeeping."""

    def __init__(self, base: Triangulation):
        self.base = base
        gluings = []
        for (t, i), (other, flag) in sorted(base.glue.items()):
            u, j = other
            if (t, i) > (u, j):
                continue
            if flag == KEEP:
                gluings.append(((2 * t, i), (2 * u, j), KEEP))
                gluings.append(((2 * t + 1, i), (2 * u + 1, j), KEEP))
            else:
                gluings.append(((2 * t, i), (2 * u + 1, j), FLIP))
                gluings.append(((2 * t + 1, i), (2 * u, j), FLIP))
        self.total = Triangulation(
            2 * base.num_triangles, gluings, name=base.name + ".cover"
        )
        if not self.total.is_orientable():
            raise AssertionError("double cover is not orientable")
        # chart signs: positive sheets carry the base chart, negative the
        # reversed one; gluing rules make this a consistent orientation
        self.orientation = [1 if t % 2 == 0 else -1 for t in range(2 * base.num_triangles)]
        self._check_orientation()

    def _check_orientation(self):
        for (t, i), (other, flag) in self.total.glue.items():
            u, _ = other
            rel = 1 if flag == KEEP else -1
            if self.orientation[t] * self.orientation[u] != rel:
                raise AssertionError("inconsistent cover orientation charts")

    def project_triangle(self, t):
        return t // 2

    def edge_projection(self):
        """Cover edge id -> base edge id."""
        out = {}
        for (t, i), e in self.total.side_edge.items():
            out[e] = self.base.side_edge[(t // 2, i)]
        return out

    def deck_edge_map(self):
        """Cover edge id -> its image under the deck involution."""
        out = {}
        for (t, i), e in self.total.side_edge.items():
            mate = (t + 1, i) if t % 2 == 0 else (t - 1, i)
            out[e] = self.total.side_edge[mate]
        return out


@lru_cache(maxsize=None)
def _cover_cached(name):
    from .triangulation import model_surface, parse_model_key

    s = parse_model_key(name)
    return DoubleCover(model_surface(s.genus, s.boundary))


def double_cover(tri: Triangulation) -> DoubleCover:
    return _cover_cached(tri.name)


def lift_weights(cover: DoubleCover, weights):
    proj = cover.edge_projection()
    return tuple(weights[proj[e]] for e in range(cover.total.num_edges))


def preimage_connected(tri: Triangulation, curve: NormalCurve) -> bool:
    """Connectivity of the full preimage upstairs (one-sidedness oracle)."""
    check_reference(tri, curve)
    cover = double_cover(tri)
    lifted = lift_weights(cover, curve.weights)
    return len(trace(cover.total, lifted)) == 1


def double_cover_oracle(tri: Triangulation, a: NormalCurve, b: NormalCurve) -> int:
    """Intersection number via full preimages on the orientation cover.

    Lifts both curves, computes the intersection number of the preimage
    multicurves with orientable-surface machinery, and halves it.  For a
    curve against itself the preimage connectivity decides the recorded
    self-intersection convention (one-sided 1, two-sided 0).
    """
    check_reference(tri, a)
    check_reference(tri, b)
    for c in (a, b):
        if len(trace(tri, c.weights)) != 1 or not is_essential(tri, c):
            raise NotEssential("oracle needs essential curves, got %s" % (c,))
    cover = double_cover(tri)
    ca = canonical_weights(tri, a.weights)
    cb = canonical_weights(tri, b.weights)
    if ca == cb:
        lifted = lift_weights(cover, ca)
        return 1 if len(trace(cover.total, lifted)) == 1 else 0
    la = lift_weights(cover, ca)
    lb = lift_weights(cover, cb)
    if cover.total.boundary_sides:
        upstairs = geometric_intersection(cover.total, la, lb).count()
    elif cover.total.surface_type().genus == 1:
        # torus cover: geometric = |algebraic| per component pair
        alg = algebraic_component_matrix(cover.total, la, lb, cover.orientation)
        upstairs = sum(abs(v) for v in alg.values())
    else:
        raise CurvelabError(
            "double-cover oracle unsupported on closed model %s (cover genus > 1)"
            % tri.name
        )
    if upstairs % 2:
        raise AssertionError("odd upstairs intersection count")
    return upstairs // 2


def certified_lower_bound(tri: Triangulation, wa, wb) -> int:
    """Half the total absolute algebraic pairing of the lifts.

    A position-independent lower bound for the geometric intersection
    number on closed models.
    """
    cover = double_cover(tri)
    la = lift_weights(cover, wa)
    lb = lift_weights(cover, wb)
    alg = algebraic_component_matrix(cover.total, la, lb, cover.orientation)
    total = sum(abs(v) for v in alg.values())
    return (total + 1) // 2
