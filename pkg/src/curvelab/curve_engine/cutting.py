"""Cutting a model surface along a normal multicurve.

The curve arcs divide each triangle into faces: one face per corner depth
plus a central face.  Gluing the surviving side-interval pieces across
interior edges reassembles the complement; the curve copies and original
boundary intervals stay free.  Pieces are classified by Euler
characteristic (faces - interval gluings + interior vertices), orientation
propagation across interval gluings, and boundary-circle bookkeeping that
remembers which circles are copies of which curve component.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotConnected
from ..surface_core import PieceSpec
from .normal import NormalCurve, check_reference, trace, validate_weights
from .triangulation import FLIP, Triangulation

__all__ = ["CutStructure", "cut_structure", "cut_along", "is_essential"]


@dataclass(frozen=True)
class CopyCircle:
    """One boundary circle of the cut surface coming from the curve."""

    component: int
    index: int
    piece: int
    orientation_sign: int  # trace direction vs induced boundary orientation


@dataclass
class Piece:
    index: int
    chi: int
    orientable: bool
    original_circles: tuple[int, ...]
    copy_circles: tuple[tuple[int, int], ...]  # (component, copy index)

    @property
    def boundary_count(self):
        return len(self.original_circles) + len(self.copy_circles)

    def spec(self) -> PieceSpec:
        b = self.boundary_count
        if self.orientable:
            return PieceSpec(True, (2 - self.chi - b) // 2, b)
        return PieceSpec(False, 2 - self.chi - b, b)


class CutStructure:
    """Complement of a normal multicurve, with circle bookkeeping."""

    def __init__(self, tri: Triangulation, weights):
        self.tri = tri
        self.weights = tuple(weights)
        if not validate_weights(tri, self.weights):
            raise ValueError("invalid multicurve weights")
        self.components = trace(tri, self.weights)
        self._build()

    # -- face decomposition -------------------------------------------------

    def _cnr(self, t, k):
        return self.tri.corner_count(self.weights, t, k)

    def _faces_of_triangle(self, t):
        faces = [("c", t)]
        for k in range(3):
            for d in range(self._cnr(t, k)):
                faces.append(("k", t, k, d))
        return faces

    def _face_at_interval(self, t, i, r):
        w = self.tri.side_weight(self.weights, t, i)
        cs = self._cnr(t, (i - 1) % 3)
        ce = self._cnr(t, i)
        if r < cs:
            return ("k", t, (i - 1) % 3, r)
        if r > w - ce:
            return ("k", t, i, w - r)
        return ("c", t)

    def _arc_faces(self, t, k, d):
        """(corner-side face, far-side face) of arc (t, k, d)."""
        near = ("k", t, k, d)
        far = ("k", t, k, d + 1) if d + 1 < self._cnr(t, k) else ("c", t)
        return near, far

    def _build(self):
        tri = self.tri
        faces = []
        for t in range(tri.num_triangles):
            faces.extend(self._faces_of_triangle(t))
        findex = {f: i for i, f in enumerate(faces)}
        self.faces = faces

        gluings = []  # (face a, face b, flag)
        for e in tri.interior_edges:
            (t, i), (u, j) = tri.edge_sides[e]
            w = self.weights[e]
            flag = tri.edge_flag[e]
            for r in range(w + 1):
                r2 = r if flag == FLIP else w - r
                fa = findex[self._face_at_interval(t, i, r)]
                fb = findex[self._face_at_interval(u, j, r2)]
                gluings.append((fa, fb, flag))
        self.gluings = gluings

        # components of the cut surface
        parent = list(range(len(faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for fa, fb, _ in gluings:
            parent[find(fa)] = find(fb)
        roots = {}
        self.face_piece = [0] * len(faces)
        for x in range(len(faces)):
            r = find(x)
            if r not in roots:
                roots[r] = len(roots)
            self.face_piece[x] = roots[r]
        num_pieces = len(roots)

        # Euler characteristic: faces - gluings + interior vertices
        chi = [0] * num_pieces
        for x in range(len(faces)):
            chi[self.face_piece[x]] += 1
        for fa, fb, _ in gluings:
            chi[self.face_piece[fa]] -= 1
        boundary_verts = tri.boundary_vertices()
        for v in range(tri.num_vertices):
            if v in boundary_verts:
                continue
            pieces_touched = set()
            for t in range(tri.num_triangles):
                for k in range(3):
                    if tri.vertex_of_corner(t, k) == v:
                        if self._cnr(t, k) > 0:
                            f = ("k", t, k, 0)
                        else:
                            f = ("c", t)
                        pieces_touched.add(self.face_piece[findex[f]])
            if len(pieces_touched) != 1:
                raise AssertionError("interior vertex split across pieces")
            chi[pieces_touched.pop()] += 1

        # orientability per piece: propagate face signs across gluings
        sign = [0] * len(faces)
        orientable = [True] * num_pieces
        adj = [[] for _ in range(len(faces))]
        for fa, fb, flag in gluings:
            rel = 1 if flag != FLIP else -1
            adj[fa].append((fb, rel))
            adj[fb].append((fa, rel))
        for start in range(len(faces)):
            if sign[start]:
                continue
            sign[start] = 1
            stack = [start]
            while stack:
                x = stack.pop()
                for y, rel in adj[x]:
                    want = sign[x] * rel
                    if sign[y] == 0:
                        sign[y] = want
                        stack.append(y)
                    elif sign[y] != want:
                        orientable[self.face_piece[x]] = False
        self.face_sign = sign

        # original boundary circles
        original = [[] for _ in range(num_pieces)]
        self.tri_circles = tri.boundary_circles()
        for ci, circle in enumerate(self.tri_circles):
            t, i = circle[0]
            piece = self.face_piece[findex[self._face_at_interval(t, i, 0)]]
            for t2, i2 in circle:
                p2 = self.face_piece[findex[self._face_at_interval(t2, i2, 0)]]
                if p2 != piece:
                    raise AssertionError("boundary circle split across pieces")
            original[piece].append(ci)

        # curve-copy circles
        self.copy_circles = []
        copies_by_piece = [[] for _ in range(num_pieces)]
        for comp_idx, comp in enumerate(self.components):
            circles = self._trace_copies(comp, orientable)
            for copy_idx, (segs, piece, osign) in enumerate(circles):
                self.copy_circles.append(
                    CopyCircle(comp_idx, copy_idx, piece, osign)
                )
                copies_by_piece[piece].append((comp_idx, copy_idx))

        self.pieces = [
            Piece(
                p,
                chi[p],
                orientable[p],
                tuple(original[p]),
                tuple(copies_by_piece[p]),
            )
            for p in range(num_pieces)
        ]

    # -- copy circle tracing --------------------------------------------------

    def _trace_copies(self, comp, orientable):
        """Chain the two parallel copies of one component into circles.

        Returns a list of (segments, piece, orientation sign); segments are
        (arc position in component, copy side in {near, far}).  The sign is
        only defined (and checked for consistency) in orientable pieces.
        """
        tri = self.tri
        findex = {f: i for i, f in enumerate(self.faces)}
        L = len(comp.arcs)
        entries = []  # per arc: entry endpoint index (0 = side k, 1 = side k+1)
        ptr = 0
        # reconstruct entry endpoints: the trace exits via the opposite end
        # of the entry; crossing x joins arc x exit and arc x+1 entry.
        # The trace in normal.trace always starts at endpoint 0.
        entry = 0
        for x in range(L):
            entries.append(entry)
            exit_end = 1 - entry
            # determine the entry endpoint of the next arc
            t, k, d = comp.arcs[x]
            i = (k, (k + 1) % 3)[exit_end]
            side = (t, i)
            q = self._arc_endpoint_pos(comp.arcs[x], exit_end)
            edge = tri.side_edge[side]
            u, j, q2 = tri.cross(t, i, q, self.weights[edge])
            nxt = comp.arcs[(x + 1) % L]
            entry = self._which_endpoint(nxt, (u, j), q2)
        # now chain copy segments
        unused = {(x, side) for x in range(L) for side in ("near", "far")}
        circles = []
        while unused:
            start = min(unused)
            chain = []
            cur = start
            piece = None
            osign = None
            while True:
                unused.discard(cur)
                chain.append(cur)
                x, copy_side = cur
                arc = comp.arcs[x]
                near, far = self._arc_faces(*arc)
                face = near if copy_side == "near" else far
                fpiece = self.face_piece[findex[face]]
                fsign = self.face_sign[findex[face]]
                if piece is None:
                    piece = fpiece
                elif piece != fpiece:
                    raise AssertionError("copy circle crosses pieces")
                if orientable[fpiece]:
                    seg_sign = fsign * self._copy_direction_sign(
                        arc, copy_side, entries[x]
                    )
                    if osign is None:
                        osign = seg_sign
                    elif osign != seg_sign:
                        raise AssertionError("inconsistent copy orientation")
                cur = self._next_copy(comp, entries, x, copy_side)
                if cur == start:
                    break
            circles.append((chain, piece, osign))
        return circles

    def _arc_endpoint_pos(self, arc, which):
        t, k, d = arc
        if which == 0:
            return self.tri.side_weight(self.weights, t, k) - 1 - d
        return d

    def _which_endpoint(self, arc, side, q):
        t, k, d = arc
        if side == (t, k) and q == self._arc_endpoint_pos(arc, 0):
            return 0
        if side == (t, (k + 1) % 3) and q == self._arc_endpoint_pos(arc, 1):
            return 1
        raise AssertionError("crossing does not match arc endpoint")

    @staticmethod
    def _copy_half(arc, copy_side, endpoint):
        """Half ('-' before, '+' after) at the given endpoint of a copy.

        The corner-side copy takes the '+' half on side k (the corner is at
        the end of side k) and the '-' half on side k+1.
        """
        if copy_side == "near":
            return "+" if endpoint == 0 else "-"
        return "-" if endpoint == 0 else "+"

    def _copy_direction_sign(self, arc, copy_side, entry):
        """Trace direction vs the positively oriented face boundary.

        With the parent triangle's chart, the corner face's boundary
        traverses its arc from side k+1 to side k; the far face traverses
        it from side k to side k+1.
        """
        trace_forward = entry == 0  # entered on side k, leaves via side k+1
        face_forward = copy_side == "far"
        return 1 if trace_forward == face_forward else -1

    def _next_copy(self, comp, entries, x, copy_side):
        """Follow a copy across the crossing after arc x."""
        tri = self.tri
        L = len(comp.arcs)
        arc = comp.arcs[x]
        exit_end = 1 - entries[x]
        half = self._copy_half(arc, copy_side, exit_end)
        t, k, d = arc
        i = (k, (k + 1) % 3)[exit_end]
        edge = tri.side_edge[(t, i)]
        flag = tri.edge_flag[edge]
        # half transforms across the gluing: flip keeps -,+; keep swaps
        half2 = half if flag == FLIP else ("+" if half == "-" else "-")
        nxt_idx = (x + 1) % L
        nxt = comp.arcs[nxt_idx]
        entry2 = entries[nxt_idx]
        for side2 in ("near", "far"):
            if self._copy_half(nxt, side2, entry2) == half2:
                return (nxt_idx, side2)
        raise AssertionError("no matching copy half")

    # -- queries ---------------------------------------------------------------

    def piece_specs(self):
        return sorted(piece.spec() for piece in self.pieces)

    def copy_circle(self, component, copy_idx) -> CopyCircle:
        for c in self.copy_circles:
            if c.component == component and c.index == copy_idx:
                return c
        raise KeyError((component, copy_idx))

    def copies_of(self, component):
        return [c for c in self.copy_circles if c.component == component]


def cut_structure(tri: Triangulation, weights) -> CutStructure:
    return CutStructure(tri, weights)


def cut_along(tri: Triangulation, curve: NormalCurve) -> list[PieceSpec]:
    """Homeomorphism types of the complement components of a single curve."""
    check_reference(tri, curve)
    cut = CutStructure(tri, curve.weights)
    if len(cut.components) != 1:
        raise NotConnected("cut_along needs a single curve")
    return cut.piece_specs()


def is_essential(tri: Triangulation, curve: NormalCurve) -> bool:
    """Nontriviality: no disk or Moebius bound, not boundary-parallel.

    One-sided curves never bound a subsurface and are never parallel to the
    (two-sided) boundary, so they are always essential.
    """
    check_reference(tri, curve)
    cut = CutStructure(tri, curve.weights)
    if len(cut.components) != 1:
        raise NotConnected("is_essential needs a single curve")
    copies = cut.copies_of(0)
    if len(copies) == 1:
        return True
    for copy in copies:
        piece = cut.pieces[copy.piece]
        others = [c for c in piece.copy_circles if c != (0, copy.index)]
        if piece.chi == 1 and not others and not piece.original_circles:
            return False  # bounds a disk
        if piece.chi == 0 and not piece.orientable and not others and not piece.original_circles:
            return False  # bounds a Moebius band
        if (
            piece.chi == 0
            and piece.orientable
            and not others
            and len(piece.original_circles) == 1
        ):
            return False  # annulus between the curve and a boundary circle
    return True
