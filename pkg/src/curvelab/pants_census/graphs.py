"""Pants decompositions encoded as decorated trivalent graphs.

A :class:`PantsGraph` has one node per pair of pants; each node carries
exactly three slots.  Slots are matched in pairs by internal edges (each
edge carries a gluing sign, relative to arbitrary per-pants local
orientations), or they are crosscap legs (the slot circle is glued to
itself antipodally, producing a one-sided curve) or boundary legs.

The encoding decides orientability of the reglued surface by cycle parity
of the signs, and supports cutting along any decomposition curve by local
surgery on the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import Disconnected, FormatError, OutOfHypothesis
from ..surface_core import PieceSpec, SurfaceSpec, max_simplex_dimension_range

__all__ = [
    "PantsGraph",
    "CurveLabel",
    "CurveClassification",
    "realized_surface",
    "classify_curve",
    "adjacency_graph",
    "is_top_dimensional",
    "curve_labels",
]

ONE_SIDED = "one_sided"
TWO_SIDED = "two_sided"


@dataclass(frozen=True, order=True)
class CurveLabel:
    """Reference to one curve of a decomposition.

    ``kind`` is ``"edge"`` or ``"crosscap"``; ``index`` points into the
    graph's sorted edge tuple resp. sorted crosscap tuple.
    """

    kind: str
    index: int

    def __str__(self):
        return "%s[%d]" % (self.kind, self.index)


@dataclass(frozen=True)
class CurveClassification:
    sidedness: str
    separating: bool
    complement_orientable: bool
    complement_pieces: tuple[PieceSpec, ...]


class PantsGraph:
    """Decorated trivalent graph encoding one pants decomposition.

    Parameters
    ----------
    num_pants:
        number of pair-of-pants nodes, labelled 0..p-1
    edges:
        iterable of (u, v, sign) with sign in {+1, -1}; u == v encodes a
        self-gluing of two distinct slots of one pants
    crosscaps:
        iterable of pants ids, one entry per crosscap leg (multiplicities
        allowed)
    boundaries:
        iterable of pants ids, one entry per boundary leg
    """

    __slots__ = ("num_pants", "edges", "crosscaps", "boundaries")

    def __init__(self, num_pants, edges=(), crosscaps=(), boundaries=()):
        if num_pants < 1:
            raise ValueError("a pants graph needs at least one pants")
        norm_edges = []
        for u, v, s in edges:
            if s not in (1, -1):
                raise ValueError("gluing sign must be +1 or -1, got %r" % (s,))
            if not (0 <= u < num_pants and 0 <= v < num_pants):
                raise ValueError("edge endpoint out of range")
            a, b = (u, v) if u <= v else (v, u)
            norm_edges.append((a, b, s))
        norm_edges.sort()
        self.num_pants = num_pants
        self.edges = tuple(norm_edges)
        self.crosscaps = tuple(sorted(crosscaps))
        self.boundaries = tuple(sorted(boundaries))
        self._check_slots()

    def _check_slots(self):
        used = [0] * self.num_pants
        for u, v, _ in self.edges:
            used[u] += 1
            used[v] += 1
        for v in self.crosscaps:
            used[v] += 1
        for v in self.boundaries:
            used[v] += 1
        for v, k in enumerate(used):
            if k != 3:
                raise ValueError(
                    "pants %d has %d slot assignments, expected exactly 3" % (v, k)
                )

    # -- basic derived data -------------------------------------------------

    def curve_count(self) -> int:
        return len(self.edges) + len(self.crosscaps)

    def dimension(self) -> int:
        """Dimension of the maximal simplex spanned by the decomposition."""
        return self.curve_count() - 1

    def is_connected(self) -> bool:
        parent = list(range(self.num_pants))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        root = find(0)
        return all(find(v) == root for v in range(self.num_pants))

    def incidences(self, label: CurveLabel) -> tuple[int, ...]:
        """Pants ids touched by a curve, with multiplicity."""
        if label.kind == "edge":
            u, v, _ = self.edges[label.index]
            return (u, v)
        if label.kind == "crosscap":
            return (self.crosscaps[label.index],)
        raise ValueError("unknown curve label kind %r" % (label.kind,))

    # -- text format ---------------------------------------------------------

    def _slot_table(self):
        """Deterministic slot assignment: edge incidences, crosscaps, boundaries."""
        nxt = [0] * self.num_pants
        edge_slots = []
        for u, v, _ in self.edges:
            su = nxt[u]
            nxt[u] += 1
            sv = nxt[v]
            nxt[v] += 1
            edge_slots.append(((u, su), (v, sv)))
        cc_slots = []
        for v in self.crosscaps:
            cc_slots.append((v, nxt[v]))
            nxt[v] += 1
        bd_slots = []
        for v in self.boundaries:
            bd_slots.append((v, nxt[v]))
            nxt[v] += 1
        return edge_slots, cc_slots, bd_slots

    def serialize(self) -> str:
        """Text form: one record per line, lexicographically ordered."""
        edge_slots, cc_slots, bd_slots = self._slot_table()
        lines = ["pants %d" % v for v in range(self.num_pants)]
        for ((u, su), (v, sv)), (_, _, s) in zip(edge_slots, self.edges):
            a, b = sorted(((u, su), (v, sv)))
            lines.append("edge %d.%d %d.%d %s" % (a[0], a[1], b[0], b[1], "+" if s == 1 else "-"))
        for v, sl in cc_slots:
            lines.append("crosscap %d.%d" % (v, sl))
        for v, sl in bd_slots:
            lines.append("boundary %d.%d" % (v, sl))
        return "\n".join(sorted(lines)) + "\n"

    @classmethod
    def parse(cls, text: str) -> "PantsGraph":
        pants = set()
        edges = []
        crosscaps = []
        boundaries = []

        def slot(tok):
            try:
                v, s = tok.split(".")
                return int(v), int(s)
            except ValueError:
                raise FormatError("bad slot %r" % (tok,)) from None

        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "pants" and len(parts) == 2:
                pants.add(int(parts[1]))
            elif parts[0] == "edge" and len(parts) == 4:
                (u, _), (v, _) = slot(parts[1]), slot(parts[2])
                if parts[3] not in ("+", "-"):
                    raise FormatError("bad sign %r" % (parts[3],))
                edges.append((u, v, 1 if parts[3] == "+" else -1))
            elif parts[0] == "crosscap" and len(parts) == 2:
                crosscaps.append(slot(parts[1])[0])
            elif parts[0] == "boundary" and len(parts) == 2:
                boundaries.append(slot(parts[1])[0])
            else:
                raise FormatError("bad pants-graph record %r" % (line,))
        if not pants:
            raise FormatError("no pants records")
        if pants != set(range(len(pants))):
            raise FormatError("pants ids must be 0..p-1")
        return cls(len(pants), edges, crosscaps, boundaries)

    def __repr__(self):
        return "PantsGraph(p=%d, edges=%r, crosscaps=%r, boundaries=%r)" % (
            self.num_pants,
            self.edges,
            self.crosscaps,
            self.boundaries,
        )

    def __eq__(self, other):
        return (
            isinstance(other, PantsGraph)
            and self.num_pants == other.num_pants
            and self.edges == other.edges
            and self.crosscaps == other.crosscaps
            and self.boundaries == other.boundaries
        )

    def __hash__(self):
        return hash((self.num_pants, self.edges, self.crosscaps, self.boundaries))


def curve_labels(pg: PantsGraph) -> list[CurveLabel]:
    """All curves of the decomposition, edges first, deterministic order."""
    labels = [CurveLabel("edge", i) for i in range(len(pg.edges))]
    labels += [CurveLabel("crosscap", i) for i in range(len(pg.crosscaps))]
    return labels


def realized_surface(pg: PantsGraph):
    """Homeomorphism type of the surface reglued from the pants graph.

    Returns a :class:`SurfaceSpec` when the result is nonorientable and an
    orientable :class:`PieceSpec` otherwise.  Raises :class:`Disconnected`
    when the graph is not connected.
    """
    if not pg.is_connected():
        raise Disconnected("pants graph is not connected")
    p = pg.num_pants
    n = len(pg.boundaries)
    chi = -p
    if _is_orientable(pg):
        genus = (2 - chi - n) // 2
        return PieceSpec(True, genus, n)
    return SurfaceSpec(2 - chi - n, n)


def _is_orientable(pg: PantsGraph) -> bool:
    """Orientable iff no crosscaps and the sign pattern has even cycles only.

    Per-pants sign flips are quotiented by propagating a potential along a
    spanning tree and checking every remaining edge.
    """
    if pg.crosscaps:
        return False
    p = pg.num_pants
    adj = [[] for _ in range(p)]
    loops_and_extra = []
    seen_tree = set()
    for i, (u, v, s) in enumerate(pg.edges):
        if u == v:
            loops_and_extra.append(i)
        else:
            adj[u].append((v, i, s))
            adj[v].append((u, i, s))
    pot = [None] * p
    pot[0] = 0
    stack = [0]
    tree = set()
    while stack:
        u = stack.pop()
        for v, i, s in adj[u]:
            if pot[v] is None:
                pot[v] = pot[u] ^ (s == -1)
                tree.add(i)
                stack.append(v)
    for i, (u, v, s) in enumerate(pg.edges):
        if i in tree:
            continue
        if u == v:
            if s == -1:
                return False
            continue
        if pot[u] ^ pot[v] ^ (s == -1):
            return False
    _ = seen_tree, loops_and_extra
    return True


def _cut_component(pg: PantsGraph, keep, edges, crosscaps, boundaries) -> PieceSpec:
    """Realize one component after cutting; vertices are relabelled."""
    order = sorted(keep)
    relabel = {v: i for i, v in enumerate(order)}
    sub = PantsGraph(
        len(order),
        [(relabel[u], relabel[v], s) for u, v, s in edges],
        [relabel[v] for v in crosscaps],
        [relabel[v] for v in boundaries],
    )
    realized = realized_surface(sub)
    if isinstance(realized, SurfaceSpec):
        return PieceSpec(False, realized.genus, realized.boundary)
    return realized


def classify_curve(pg: PantsGraph, label: CurveLabel) -> CurveClassification:
    """Sidedness, separation and complement types of one decomposition curve.

    Cutting a crosscap curve turns its slot into a boundary leg; cutting an
    internal edge turns both slots into boundary legs (separating iff the
    edge is a bridge).
    """
    if label.kind == "crosscap":
        v = pg.crosscaps[label.index]
        cc = list(pg.crosscaps)
        del cc[label.index]
        cut = PantsGraph(pg.num_pants, pg.edges, cc, list(pg.boundaries) + [v])
        piece = _cut_component(
            pg, range(pg.num_pants), cut.edges, cut.crosscaps, cut.boundaries
        )
        return CurveClassification(ONE_SIDED, False, piece.orientable, (piece,))

    u0, v0, _ = pg.edges[label.index]
    edges = [e for i, e in enumerate(pg.edges) if i != label.index]
    boundaries = list(pg.boundaries) + [u0, v0]

    parent = list(range(pg.num_pants))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in edges:
        parent[find(u)] = find(v)
    comps = {}
    for v in range(pg.num_pants):
        comps.setdefault(find(v), set()).add(v)
    pieces = []
    for comp in sorted(comps.values(), key=min):
        sub_edges = [e for e in edges if e[0] in comp]
        sub_cc = [v for v in pg.crosscaps if v in comp]
        sub_bd = [v for v in boundaries if v in comp]
        pieces.append(_cut_component(pg, comp, sub_edges, sub_cc, sub_bd))
    pieces.sort()
    separating = len(pieces) == 2
    orientable = all(piece.orientable for piece in pieces)
    return CurveClassification(TWO_SIDED, separating, orientable, tuple(pieces))


def adjacency_graph(pg: PantsGraph) -> set[tuple[CurveLabel, CurveLabel]]:
    """Pairs of distinct curves bounding a common pair of pants."""
    labels = curve_labels(pg)
    incident = {lab: set(pg.incidences(lab)) for lab in labels}
    rel = set()
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            if incident[a] & incident[b]:
                rel.add((a, b))
    return rel


def is_top_dimensional(pg: PantsGraph) -> bool:
    """True iff the decomposition has the largest possible dimension.

    Only defined (in closed form) for nonorientable g >= 2, (g,n) != (2,0).
    """
    realized = realized_surface(pg)
    if not isinstance(realized, SurfaceSpec):
        raise OutOfHypothesis("pants graph realizes an orientable surface")
    rng = max_simplex_dimension_range(realized)
    return pg.dimension() == rng.hi
