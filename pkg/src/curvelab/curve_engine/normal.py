"""Normal curves: integer edge weights on a model triangulation.

A normal multicurve assigns a weight to every edge subject to the
per-triangle matching conditions (even corner sums, triangle inequalities)
and zero weights on boundary edges.  Inside a triangle the arcs are the
``corner_count(t, k)`` parallel arcs cutting corner ``k``; arc ``(t, k, d)``
at depth ``d`` from the corner meets side ``k`` at position ``w_k - 1 - d``
and side ``k+1`` at position ``d``.

On the bordered models every vertex lies on the boundary, so each isotopy
class has a unique normal weight vector, which doubles as its canonical
form.  On closed models curves may be slid across the interior vertex;
canonical forms are computed by a bounded breadth-first walk over
vertex-slide moves, keeping the lexicographically least vector of minimal
total weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import NotConnected, WrongTriangulation
from .triangulation import FLIP, Triangulation, model_surface

__all__ = [
    "NormalCurve",
    "validate_weights",
    "validate_normal",
    "trace",
    "TracedComponent",
    "sidedness",
    "ONE_SIDED",
    "TWO_SIDED",
    "canonical_weights",
    "slide_variants",
    "curve_from_weights",
]

ONE_SIDED = "one_sided"
TWO_SIDED = "two_sided"

CANON_SLACK = 8


@dataclass(frozen=True, order=True)
class NormalCurve:
    """An isotopy class representative: model key + weight per edge."""

    model: str
    weights: tuple[int, ...]

    def total(self) -> int:
        return sum(self.weights)

    def ref(self) -> str:
        """Compact text reference used in dumps and reports."""
        return ",".join(str(w) for w in self.weights)

    def __str__(self):
        return "%s:%s" % (self.model, self.ref())


def triangulation_of(curve: NormalCurve) -> Triangulation:
    from .triangulation import parse_model_key

    s = parse_model_key(curve.model)
    return model_surface(s.genus, s.boundary)


def check_reference(tri: Triangulation, curve: NormalCurve):
    if curve.model != tri.name or len(curve.weights) != tri.num_edges:
        raise WrongTriangulation(
            "curve refers to %r, expected %r" % (curve.model, tri.name)
        )


def validate_weights(tri: Triangulation, weights) -> bool:
    """Matching conditions only (multicurves allowed, emptiness rejected)."""
    if len(weights) != tri.num_edges:
        return False
    if any(w < 0 for w in weights):
        return False
    if not any(weights):
        return False
    for e in tri.boundary_edges:
        if weights[e]:
            return False
    for t in range(tri.num_triangles):
        a = tri.side_weight(weights, t, 0)
        b = tri.side_weight(weights, t, 1)
        c = tri.side_weight(weights, t, 2)
        if (a + b + c) % 2:
            return False
        if a > b + c or b > a + c or c > a + b:
            return False
    return True


@dataclass
class TracedComponent:
    """One closed normal curve: cyclic arc itinerary plus crossing data.

    ``arcs[i]`` is (t, k, d); ``crossings[i]`` describes the point between
    ``arcs[i]`` and ``arcs[i+1]``: (edge id, canonical position, flag-flips,
    crossed-from-first-side).
    """

    arcs: list
    crossings: list

    def __len__(self):
        return len(self.arcs)

    def holonomy(self) -> int:
        flips = sum(1 for _, _, f, _ in self.crossings if f)
        return -1 if flips % 2 else 1

    def edge_walk(self):
        """Cyclic sequence of (edge id, direction) for spine words."""
        return [(e, 1 if forward else -1) for e, _, _, forward in self.crossings]


def _arcs_of(tri, weights):
    arcs = []
    for t in range(tri.num_triangles):
        for k in range(3):
            for d in range(tri.corner_count(weights, t, k)):
                arcs.append((t, k, d))
    return arcs


def _arc_endpoint(tri, weights, arc, which):
    """Endpoint ``which`` in {0 on side k, 1 on side k+1}: (side, position)."""
    t, k, d = arc
    if which == 0:
        i = k
        w = tri.side_weight(weights, t, i)
        return (t, i), w - 1 - d
    i = (k + 1) % 3
    return (t, i), d


def _point_lookup(tri, weights):
    """(t, i, q) -> (arc, which endpoint)."""
    table = {}
    for t in range(tri.num_triangles):
        for k in range(3):
            for d in range(tri.corner_count(weights, t, k)):
                arc = (t, k, d)
                (s0, q0) = _arc_endpoint(tri, weights, arc, 0)
                (s1, q1) = _arc_endpoint(tri, weights, arc, 1)
                table[(s0[0], s0[1], q0)] = (arc, 0)
                table[(s1[0], s1[1], q1)] = (arc, 1)
    return table


def edge_canonical_position(tri, edge, side, q, w):
    """Position along the edge's first side; sides map via the gluing flag."""
    first = tri.edge_sides[edge][0]
    if side == first:
        return q
    return q if tri.edge_flag[edge] == FLIP else w - 1 - q


def trace(tri: Triangulation, weights) -> list[TracedComponent]:
    """Decompose a valid normal multicurve into closed components."""
    lookup = _point_lookup(tri, weights)
    arcs = _arcs_of(tri, weights)
    visited = set()
    components = []
    for start in arcs:
        if start in visited:
            continue
        comp_arcs = []
        comp_crossings = []
        arc, entry = start, 0
        while True:
            visited.add(arc)
            comp_arcs.append(arc)
            exit_end = 1 - entry
            (t, i), q = _arc_endpoint(tri, weights, arc, exit_end)
            edge = tri.side_edge[(t, i)]
            w = weights[edge]
            u, j, q2 = tri.cross(t, i, q, w)
            flag_flip = tri.edge_flag[edge] == FLIP
            forward = tri.edge_sides[edge][0] == (t, i)
            comp_crossings.append(
                (edge, edge_canonical_position(tri, edge, (t, i), q, w), flag_flip, forward)
            )
            arc, entry = lookup[(u, j, q2)]
            if arc == start and entry == 0:
                break
        components.append(TracedComponent(comp_arcs, comp_crossings))
    return components


def validate_normal(tri: Triangulation, curve: NormalCurve) -> bool:
    """True iff matching holds and the weights trace to exactly one curve."""
    check_reference(tri, curve)
    if not validate_weights(tri, curve.weights):
        return False
    return len(trace(tri, curve.weights)) == 1


def sidedness(tri: Triangulation, curve: NormalCurve) -> str:
    """One- or two-sidedness via orientation holonomy along the itinerary."""
    check_reference(tri, curve)
    comps = trace(tri, curve.weights)
    if len(comps) != 1:
        raise NotConnected("multicurve with %d components" % len(comps))
    return ONE_SIDED if comps[0].holonomy() == -1 else TWO_SIDED


# -- vertex slides on closed models ------------------------------------------


def _vertex_links(tri: Triangulation):
    """Links of interior vertices: cyclic corners and the edge-end between.

    Returns a list of links; each link is (corners, ends) with ``ends[m]``
    = (edge id, end tag, crossing direction) crossed between corners m and
    m+1.  End tag "A" means the start of the edge's first side, "B" the
    other end; direction is +1 when the walk crosses from the edge's first
    side.
    """
    boundary = tri.boundary_vertices()
    links = []
    seen = set()
    for t0 in range(tri.num_triangles):
        for k0 in range(3):
            v = tri.vertex_of_corner(t0, k0)
            if v in boundary or (t0, k0) in seen:
                continue
            corners = []
            ends = []
            t, k = t0, k0
            # leave corner (t, k) via side k+1 at its start
            cur = (t, (k + 1) % 3, "start")
            while True:
                corners.append((t, k))
                seen.add((t, k))
                ct, ci, cend = cur
                edge = tri.side_edge[(ct, ci)]
                direction = 1 if tri.edge_sides[edge][0] == (ct, ci) else -1
                ends.append((edge, _end_tag(tri, edge, (ct, ci), cend), direction))
                (u, j), flag = tri.glue[(ct, ci)]
                if flag == FLIP:
                    new_end = cend
                else:
                    new_end = "end" if cend == "start" else "start"
                if new_end == "start":
                    t, k = u, (j - 1) % 3
                    cur = (u, (j - 1) % 3, "end")
                else:
                    t, k = u, j % 3
                    cur = (u, (j + 1) % 3, "start")
                if (t, k) == (t0, k0):
                    break
            links.append((corners, ends))
    return links


def _end_tag(tri, edge, side, endtype):
    first = tri.edge_sides[edge][0]
    if side == first:
        return "A" if endtype == "start" else "B"
    if tri.edge_flag[edge] == FLIP:
        return "A" if endtype == "start" else "B"
    return "B" if endtype == "start" else "A"


def _arc_flank_ends(tri, weights, arc):
    """The two edge-ends flanking the arc's corner: (entry0, entry1).

    Index 0 is the end on side k (arc endpoint 0), index 1 on side k+1.
    """
    t, k, _ = arc
    e0 = tri.side_edge[(t, k)]
    e1 = tri.side_edge[(t, (k + 1) % 3)]
    # corner k is the END of side k and the START of side k+1
    return (
        (e0, _end_tag(tri, e0, (t, k), "end")),
        (e1, _end_tag(tri, e1, (t, (k + 1) % 3), "start")),
    )


def slide_variants(tri: Triangulation, weights):
    """Weight vectors obtained by sliding a component across a vertex.

    The only move applied is the whole-wrap reroute: a component whose arcs
    all hug one interior vertex innermost, closed up by exactly one other
    crossing P, is replaced by the complementary wrap around the vertex
    with P kept.  In that configuration P sits alone on its edge and the
    swept disk contains nothing but the vertex, so the reroute is an
    isotopy; partial runs are never slid (their endpoints interact with
    other strands).
    """
    comps = trace(tri, weights)
    links = _vertex_links(tri)
    if not links:
        return []
    corner_index = {}
    for li, (corners, ends) in enumerate(links):
        for m, c in enumerate(corners):
            corner_index[c] = (li, m)

    out = set()
    for comp in comps:
        L = len(comp.arcs)
        hug = []
        for i in range(L):
            arc = comp.arcs[i]
            nxt = comp.arcs[(i + 1) % L]
            if arc[2] != 0 or nxt[2] != 0:
                hug.append(False)
                continue
            exit_end = _arc_flank_ends(tri, weights, arc)
            entry_end = _arc_flank_ends(tri, weights, nxt)
            edge, qc, _, _ = comp.crossings[i]
            w = weights[edge]
            shared = False
            for cand in exit_end:
                if cand in entry_end and cand[0] == edge:
                    dist = qc if cand[1] == "A" else w - 1 - qc
                    if dist == 0:
                        shared = True
                        break
            hug.append(shared)
        if all(hug):
            continue  # vertex-linking component
        non_hugs = [i for i in range(L) if not hug[i]]
        if len(non_hugs) != 1:
            continue
        vec = _reroute_wrap(tri, weights, comp, corner_index, links, non_hugs[0])
        if vec is not None:
            out.add(vec)
    return sorted(out)


def _reroute_wrap(tri, weights, comp, corner_index, links, break_idx):
    """Replace an all-but-one-hugging component by the complementary wrap."""
    L = len(comp.arcs)
    order = [comp.arcs[(break_idx + 1 + x) % L] for x in range(L)]
    keys = [corner_index.get(a[:2]) for a in order]
    if any(key is None for key in keys):
        return None
    li = keys[0][0]
    if any(key[0] != li for key in keys):
        return None
    corners, ends = links[li]
    k = len(corners)
    j = L
    if j >= k:
        return None
    positions = [key[1] for key in keys]
    forward = all(positions[x + 1] == (positions[x] + 1) % k for x in range(j - 1))
    backward = all(positions[x + 1] == (positions[x] - 1) % k for x in range(j - 1))
    if not (forward or backward):
        return None
    if backward:
        positions = positions[::-1]
    a = positions[0]
    new = list(weights)
    for x in range(j - 1):
        new[ends[(a + x) % k][0]] -= 1
    for x in range(j, k - 1):
        new[ends[(a + x) % k][0]] += 1
    if any(z < 0 for z in new):
        return None
    vec = tuple(new)
    if not validate_weights(tri, vec):
        return None
    if len(trace(tri, vec)) != len(trace(tri, weights)):
        return None
    return vec


def enumerate_weight_vectors(tri: Triangulation, total: int):
    """All valid normal multicurve vectors of given total, in lex order."""
    edges = list(range(tri.num_edges))
    interior = [e for e in edges if e in set(tri.interior_edges)]
    # pre-index triangles by the last interior edge they touch
    tri_edges = []
    for t in range(tri.num_triangles):
        tri_edges.append(tuple(tri.side_edge[(t, i)] for i in range(3)))
    out = []
    vec = [0] * tri.num_edges

    pos_of = {e: i for i, e in enumerate(interior)}
    checks = [[] for _ in range(len(interior) + 1)]
    for t, te in enumerate(tri_edges):
        last = max(
            (pos_of[e] for e in te if e in pos_of),
            default=-1,
        )
        checks[last + 1].append(te)

    def triangle_ok(te):
        a, b, c = (vec[e] for e in te)
        return (a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b

    def rec(i, remaining):
        for te in checks[i]:
            if not triangle_ok(te):
                return
        if i == len(interior):
            if remaining == 0:
                out.append(tuple(vec))
            return
        e = interior[i]
        for val in range(0, remaining + 1):
            vec[e] = val
            rec(i + 1, remaining - val)
        vec[e] = 0

    rec(0, total)
    return out


@lru_cache(maxsize=None)
def _canonical_klein_cached(weights):
    """Exact canonical vector on N2.0 via Klein-group conjugacy."""
    from .spine import klein_conjugacy_key

    tri = model_surface(2, 0)
    comps = trace(tri, weights)
    if len(comps) != 1:
        raise NotConnected("canonical form needs a single component")
    key = klein_conjugacy_key(tri, comps[0])
    for total in range(1, sum(weights) + 1):
        for vec in enumerate_weight_vectors(tri, total):
            comps2 = trace(tri, vec)
            if len(comps2) != 1:
                continue
            if klein_conjugacy_key(tri, comps2[0]) == key:
                return vec
    return weights


@lru_cache(maxsize=None)
def _canonical_closed_cached(model_key, weights):
    """Slide-closure canonical vector (closed models with genus >= 3).

    The whole-wrap reroute is sound but not known to merge every pair of
    isotopic vectors; duplicates may survive at large weights.
    """
    from .triangulation import parse_model_key

    s = parse_model_key(model_key)
    tri = model_surface(s.genus, s.boundary)
    current = weights
    while True:
        cap = sum(current) + CANON_SLACK
        seen = {current}
        frontier = [current]
        best = current
        while frontier:
            nxt = []
            for vec in frontier:
                for out in slide_variants(tri, vec):
                    if sum(out) > cap or out in seen:
                        continue
                    seen.add(out)
                    nxt.append(out)
                    if (sum(out), out) < (sum(best), best):
                        best = out
            frontier = nxt
        if (sum(best), best) < (sum(current), current):
            current = best
        else:
            return current


def canonical_weights(tri: Triangulation, weights) -> tuple[int, ...]:
    """Canonical representative vector of the isotopy class of ``weights``.

    Bordered models have unique normal vectors, so the input is returned
    unchanged.  On the Klein bottle the class is decided exactly in the
    fundamental group; other closed models use the slide closure.
    """
    weights = tuple(weights)
    if tri.boundary_sides:
        return weights
    if tri.name == "N2.0":
        return _canonical_klein_cached(weights)
    return _canonical_closed_cached(tri.name, weights)


def curve_from_weights(tri: Triangulation, weights) -> NormalCurve:
    return NormalCurve(tri.name, canonical_weights(tri, weights))
