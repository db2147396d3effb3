"""Finite truncations of the curve complex.

A complex collects every essential class up to a weight bound, the full
table of pairwise intersection numbers, disjointness edges, and the
maximal cliques.  Cliques whose multicurve cuts the surface into pairs of
pants are true pants decompositions; they are rebuilt as decorated pants
graphs (with gluing signs read off the cut pieces' orientations) so that
adjacency and the census verifiers apply to them.  All negative relation
answers are level-bounded: a clique that is maximal only because of the
truncation is counted, never asserted to be maximal in the full complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import NotAPantsDecomposition, OutOfHypothesis, ZeroIntersection
from ..pants_census import PantsGraph, realized_surface
from ..surface_core import SurfaceSpec, max_simplex_dimension_range
from ..curve_engine.classes import enumerate_curve_classes
from ..curve_engine.cutting import CutStructure, cut_along
from ..curve_engine.intersection import intersection_number
from ..curve_engine.normal import (
    NormalCurve,
    ONE_SIDED,
    canonical_weights,
    sidedness,
    trace,
    validate_weights,
)
from ..curve_engine.triangulation import model_surface

__all__ = [
    "FiniteCurveComplex",
    "TrueSimplex",
    "build_complex",
    "true_maximal_simplices",
    "adjacency_in",
    "small_intersection",
    "SmallIntersection",
]


@dataclass(frozen=True)
class TrueSimplex:
    """A maximal clique realising a pants decomposition."""

    vertices: tuple[int, ...]
    graph: PantsGraph
    incidence: dict  # vertex -> tuple of piece indices touched

    def is_top(self, top_dim) -> bool:
        return len(self.vertices) - 1 == top_dim


@dataclass(frozen=True)
class SmallIntersection:
    answer: str  # "yes" or "no_at_level"
    level: int
    witness: tuple | None = None  # (P graph, Q graph)


class FiniteCurveComplex:
    def __init__(self, surface: SurfaceSpec, bound: int):
        self.surface = surface
        self.bound = bound
        self.tri = model_surface(surface.genus, surface.boundary)
        self.vertices = enumerate_curve_classes(surface, bound)
        self.index = {c: i for i, c in enumerate(self.vertices)}
        n = len(self.vertices)
        self.itable = {}
        for i in range(n):
            for j in range(i, n):
                self.itable[(i, j)] = intersection_number(
                    self.tri, self.vertices[i], self.vertices[j]
                )
        self.edges = {
            (i, j) for (i, j), v in self.itable.items() if v == 0 and i != j
        }
        self.annotations = [self._annotate(c) for c in self.vertices]
        self._cliques()
        self._true_simplices()
        self._top_dim = None

    # -- basic queries -------------------------------------------------------

    def inter(self, i, j) -> int:
        return self.itable[(i, j) if i <= j else (j, i)]

    def is_edge(self, i, j) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def _annotate(self, curve):
        side = sidedness(self.tri, curve)
        pieces = cut_along(self.tri, curve)
        return {
            "sidedness": side,
            "separating": len(pieces) == 2,
            "complement_orientable": all(p.orientable for p in pieces),
        }

    def one_sided(self, i) -> bool:
        return self.annotations[i]["sidedness"] == ONE_SIDED

    # -- cliques and true simplices -------------------------------------------

    def _cliques(self):
        n = len(self.vertices)
        neighbours = {i: {j for j in range(n) if i != j and self.is_edge(i, j)} for i in range(n)}
        cliques = []

        def extend(r, p, x):
            if not p and not x:
                cliques.append(tuple(sorted(r)))
                return
            pivot_pool = p | x
            pivot = max(pivot_pool, key=lambda u: len(neighbours[u] & p)) if pivot_pool else None
            candidates = sorted(p - neighbours[pivot]) if pivot is not None else sorted(p)
            for v in candidates:
                extend(r | {v}, p & neighbours[v], x & neighbours[v])
                p = p - {v}
                x = x | {v}

        extend(set(), set(range(n)), set())
        self.maximal_cliques = sorted(cliques)

    def _true_simplices(self):
        self.true_simplices = []
        self.artifact_cliques = []
        for clique in self.maximal_cliques:
            simplex = self._try_pants(clique)
            if simplex is None:
                self.artifact_cliques.append(clique)
            else:
                self.true_simplices.append(simplex)
        self._true_by_set = {
            frozenset(s.vertices): s for s in self.true_simplices
        }

    def multicurve_weights(self, vertex_set):
        """A simultaneous disjoint normal position of the given classes.

        On bordered models canonical vectors add up; on closed models a
        bounded search over valid vectors is used.
        """
        curves = [self.vertices[i] for i in vertex_set]
        naive = tuple(
            sum(c.weights[e] for c in curves) for e in range(self.tri.num_edges)
        )
        if self._matches(naive, curves):
            return naive
        if self.tri.boundary_sides:
            return None
        from ..curve_engine.normal import enumerate_weight_vectors

        total = sum(c.total() for c in curves)
        for extra in range(0, 7):
            for w in enumerate_weight_vectors(self.tri, total + extra):
                if self._matches(w, curves):
                    return w
        return None

    def _matches(self, weights, curves):
        if not validate_weights(self.tri, weights):
            return False
        comps = trace(self.tri, weights)
        if len(comps) != len(curves):
            return False
        want = sorted(canonical_weights(self.tri, c.weights) for c in curves)
        got = []
        for comp in comps:
            vec = [0] * self.tri.num_edges
            for e, _, _, _ in comp.crossings:
                vec[e] += 1
            got.append(canonical_weights(self.tri, tuple(vec)))
        return sorted(got) == want

    def _component_map(self, cut, curves):
        """component index -> position in ``curves`` (by canonical class)."""
        out = {}
        used = set()
        for k, comp in enumerate(cut.components):
            vec = [0] * self.tri.num_edges
            for e, _, _, _ in comp.crossings:
                vec[e] += 1
            canon = canonical_weights(self.tri, tuple(vec))
            for pos, c in enumerate(curves):
                if pos in used:
                    continue
                if canonical_weights(self.tri, c.weights) == canon:
                    out[k] = pos
                    used.add(pos)
                    break
        return out if len(out) == len(curves) else None

    def _try_pants(self, clique):
        weights = self.multicurve_weights(clique)
        if weights is None:
            return None
        cut = CutStructure(self.tri, weights)
        for piece in cut.pieces:
            if piece.spec().chi != -1 or not piece.orientable or piece.boundary_count != 3:
                return None
        curves = [self.vertices[i] for i in clique]
        comp_of = self._component_map(cut, curves)
        if comp_of is None:
            return None
        # assemble the decorated graph
        edges = []
        crosscaps = []
        boundaries = []
        incidence = {v: [] for v in clique}
        for ci in range(len(cut.components)):
            copies = cut.copies_of(ci)
            vertex = clique[comp_of[ci]]
            if len(copies) == 1:
                crosscaps.append(copies[0].piece)
                incidence[vertex].append(copies[0].piece)
            else:
                c1, c2 = copies
                sign = 1 if c1.orientation_sign * c2.orientation_sign == -1 else -1
                edges.append((c1.piece, c2.piece, sign))
                incidence[vertex].extend([c1.piece, c2.piece])
        for piece in cut.pieces:
            for _ in piece.original_circles:
                boundaries.append(piece.index)
        pg = PantsGraph(len(cut.pieces), edges, crosscaps, boundaries)
        realized = realized_surface(pg)
        if realized != self.surface:
            raise AssertionError(
                "derived pants graph realizes %s, expected %s" % (realized, self.surface)
            )
        return TrueSimplex(clique, pg, {v: tuple(p) for v, p in incidence.items()})

    # -- dimension bookkeeping -------------------------------------------------

    def top_dimension(self):
        """Top dimension of true decompositions; None when none exist."""
        if self.surface.chi >= 0:
            return None
        if self._top_dim is None:
            try:
                self._top_dim = max_simplex_dimension_range(self.surface).hi
            except OutOfHypothesis:
                from ..pants_census import enumerated_dimension_set

                self._top_dim = max(enumerated_dimension_set(self.surface))
        return self._top_dim

    def true_top_simplices(self):
        if not self.true_simplices:
            return []
        top = self.top_dimension()
        return [s for s in self.true_simplices if s.is_top(top)]

    # -- dump format ------------------------------------------------------------

    def dump(self) -> str:
        lines = []
        for i, c in enumerate(self.vertices):
            ann = self.annotations[i]
            lines.append(
                "v %d %s %s %s %s"
                % (
                    i,
                    c.ref(),
                    "1s" if ann["sidedness"] == ONE_SIDED else "2s",
                    "sep" if ann["separating"] else "nonsep",
                    "or" if ann["complement_orientable"] else "nonor",
                )
            )
        for i, j in sorted(self.edges):
            lines.append("e %d %d" % (i, j))
        n = len(self.vertices)
        for i in range(n):
            for j in range(i, n):
                lines.append("i %d %d %d" % (i, j, self.inter(i, j)))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _complex_cached(genus, boundary, bound):
    return FiniteCurveComplex(SurfaceSpec(genus, boundary), bound)


def build_complex(s: SurfaceSpec, bound: int) -> FiniteCurveComplex:
    return _complex_cached(s.genus, s.boundary, bound)


def true_maximal_simplices(cc: FiniteCurveComplex):
    """(true simplices, truncation-artifact clique count)."""
    return cc.true_simplices, len(cc.artifact_cliques)


def adjacency_in(cc: FiniteCurveComplex, clique, a: int, b: int) -> bool:
    """Adjacency of two clique curves w.r.t. the derived decomposition."""
    simplex = cc._true_by_set.get(frozenset(clique))
    if simplex is None:
        raise NotAPantsDecomposition("clique %r is not a true decomposition" % (clique,))
    if a not in simplex.incidence or b not in simplex.incidence or a == b:
        raise ValueError("curves must be distinct members of the clique")
    return bool(set(simplex.incidence[a]) & set(simplex.incidence[b]))


def small_intersection(cc: FiniteCurveComplex, a: int, b: int) -> SmallIntersection:
    """Small intersection relative to the truncation; negatives are bounded."""
    if cc.inter(a, b) == 0:
        raise ZeroIntersection("curves %d, %d are disjoint" % (a, b))
    top = cc.top_dimension()
    for simplex in cc.true_top_simplices():
        if a not in simplex.vertices or b in simplex.vertices:
            continue
        rest = [v for v in simplex.vertices if v != a]
        if any(cc.inter(v, b) != 0 for v in rest):
            continue
        swapped = frozenset(rest + [b])
        target = cc._true_by_set.get(swapped)
        if target is not None and target.is_top(top):
            return SmallIntersection("yes", cc.bound, (simplex, target))
    return SmallIntersection("no_at_level", cc.bound)
