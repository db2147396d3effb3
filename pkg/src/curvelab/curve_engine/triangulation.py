"""Triangulated surface models.

A triangulation is a set of triangles with sides glued in pairs.  Each
triangle's sides are indexed 0,1,2 in cyclic order; corner ``k`` sits
between side ``k`` and side ``k+1``; side ``i`` runs from corner ``i-1``
to corner ``i``.  A gluing carries an orientation flag:

* ``keep``: the gluing is orientation-compatible; side positions are
  matched reversing the side directions (q <-> w-1-q),
* ``flip``: the gluing reverses orientation; positions match directly
  (q <-> q).

Model surfaces are built from a fan-triangulated polygon.  For bordered
surfaces the polygon word places every vertex class on the boundary, which
makes normal representatives of curve classes unique; closed surfaces use
the standard one-vertex polygon.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import FormatError
from ..surface_core import PieceSpec, SurfaceSpec

__all__ = ["Triangulation", "model_surface", "model_registry_key", "parse_model_key"]

KEEP = "keep"
FLIP = "flip"


class Triangulation:
    """Compact surface built from triangles with glued sides."""

    def __init__(self, num_triangles, gluings, name=""):
        self.name = name
        self.num_triangles = num_triangles
        self.glue = {}
        for (t, i), (u, j), flag in gluings:
            if flag not in (KEEP, FLIP):
                raise ValueError("bad flag %r" % (flag,))
            if (t, i) in self.glue or (u, j) in self.glue:
                raise ValueError("side glued twice")
            if (t, i) == (u, j):
                raise ValueError("side glued to itself")
            self.glue[(t, i)] = ((u, j), flag)
            self.glue[(u, j)] = ((t, i), flag)
        self.boundary_sides = tuple(
            (t, i)
            for t in range(num_triangles)
            for i in range(3)
            if (t, i) not in self.glue
        )
        self._build_edges()
        self._build_vertices()
        self._validate()

    # -- construction helpers ---------------------------------------------

    def _build_edges(self):
        self.side_edge = {}
        self.edge_sides = []
        self.edge_flag = []
        for t in range(self.num_triangles):
            for i in range(3):
                side = (t, i)
                if side in self.side_edge:
                    continue
                eid = len(self.edge_sides)
                if side in self.glue:
                    other, flag = self.glue[side]
                    self.side_edge[side] = eid
                    self.side_edge[other] = eid
                    self.edge_sides.append((side, other))
                    self.edge_flag.append(flag)
                else:
                    self.side_edge[side] = eid
                    self.edge_sides.append((side,))
                    self.edge_flag.append(None)
        self.num_edges = len(self.edge_sides)
        self.interior_edges = tuple(
            e for e in range(self.num_edges) if len(self.edge_sides[e]) == 2
        )
        self.boundary_edges = tuple(
            e for e in range(self.num_edges) if len(self.edge_sides[e]) == 1
        )

    def _corner_id(self, t, k):
        return 3 * t + (k % 3)

    def _build_vertices(self):
        n = 3 * self.num_triangles
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for (t, i), (other, flag) in self.glue.items():
            u, j = other
            start_t = self._corner_id(t, i - 1)
            end_t = self._corner_id(t, i)
            start_u = self._corner_id(u, j - 1)
            end_u = self._corner_id(u, j)
            if flag == FLIP:
                union(start_t, start_u)
                union(end_t, end_u)
            else:
                union(start_t, end_u)
                union(end_t, start_u)
        roots = {}
        self.corner_vertex = [0] * n
        for x in range(n):
            r = find(x)
            if r not in roots:
                roots[r] = len(roots)
            self.corner_vertex[x] = roots[r]
        self.num_vertices = len(roots)

    def vertex_of_corner(self, t, k):
        return self.corner_vertex[self._corner_id(t, k)]

    def side_endpoints(self, t, i):
        """(start vertex, end vertex) of side i of triangle t."""
        return (self.vertex_of_corner(t, i - 1), self.vertex_of_corner(t, i))

    def _validate(self):
        if not self.is_connected():
            raise ValueError("triangulation is not connected")
        for t in range(self.num_triangles):
            eids = {self.side_edge[(t, i)] for i in range(3)}
            if len(eids) != 3:
                raise ValueError("triangle %d does not have 3 distinct edges" % t)
        # boundary must be a 1-manifold
        deg = {}
        for t, i in self.boundary_sides:
            a, b = self.side_endpoints(t, i)
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        for v, d in deg.items():
            if d != 2:
                raise ValueError("boundary vertex %d has degree %d" % (v, d))

    # -- global invariants ---------------------------------------------------

    def is_connected(self):
        if self.num_triangles == 1:
            return True
        parent = list(range(self.num_triangles))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.interior_edges:
            (t, _), (u, _) = self.edge_sides[e]
            parent[find(t)] = find(u)
        root = find(0)
        return all(find(t) == root for t in range(self.num_triangles))

    def is_orientable(self):
        sign = [0] * self.num_triangles
        sign[0] = 1
        stack = [0]
        while stack:
            t = stack.pop()
            for i in range(3):
                if (t, i) not in self.glue:
                    continue
                (u, _), flag = self.glue[(t, i)]
                want = sign[t] if flag == KEEP else -sign[t]
                if sign[u] == 0:
                    sign[u] = want
                    stack.append(u)
                elif sign[u] != want:
                    return False
        return True

    def chi(self):
        return self.num_triangles - self.num_edges + self.num_vertices

    def boundary_vertices(self):
        out = set()
        for t, i in self.boundary_sides:
            a, b = self.side_endpoints(t, i)
            out.add(a)
            out.add(b)
        return out

    def boundary_circles(self):
        """Boundary circles as lists of sides (order within a circle fixed)."""
        sides = sorted(self.boundary_sides)
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        verts = self.boundary_vertices()
        for v in verts:
            parent[("v", v)] = ("v", v)
        for s in sides:
            parent[("s", s)] = ("s", s)
        for s in sides:
            a, b = self.side_endpoints(*s)
            parent[find(("s", s))] = find(("v", a))
            ra, rb = find(("v", a)), find(("v", b))
            if ra != rb:
                parent[ra] = rb
        groups = {}
        for s in sides:
            groups.setdefault(find(("s", s)), []).append(s)
        return [groups[k] for k in sorted(groups)]

    def surface_type(self):
        b = len(self.boundary_circles())
        chi = self.chi()
        if self.is_orientable():
            return PieceSpec(True, (2 - chi - b) // 2, b)
        return SurfaceSpec(2 - chi - b, b)

    # -- normal position helpers ----------------------------------------------

    def side_weight(self, weights, t, i):
        return weights[self.side_edge[(t, i)]]

    def corner_count(self, weights, t, k):
        """Number of normal arcs cutting corner k of triangle t."""
        a = self.side_weight(weights, t, k)
        b = self.side_weight(weights, t, (k + 1) % 3)
        c = self.side_weight(weights, t, (k + 2) % 3)
        return (a + b - c) // 2

    def cross(self, t, i, q, w):
        """Cross the gluing at side (t, i), position q of w; returns (u, j, q')."""
        (u, j), flag = self.glue[(t, i)]
        return (u, j, q if flag == FLIP else w - 1 - q)

    # -- text format -----------------------------------------------------------

    def serialize(self):
        lines = ["triangle %d" % t for t in range(self.num_triangles)]
        done = set()
        for (t, i), (other, flag) in sorted(self.glue.items()):
            if (t, i) in done:
                continue
            done.add((t, i))
            done.add(other)
            u, j = other
            lines.append("glue %d.%d %d.%d %s" % (t, i, u, j, flag))
        for t, i in sorted(self.boundary_sides):
            lines.append("bdry %d.%d" % (t, i))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text, name=""):
        triangles = set()
        gluings = []

        def side(tok):
            try:
                t, i = tok.split(".")
                return int(t), int(i)
            except ValueError:
                raise FormatError("bad side %r" % (tok,)) from None

        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "triangle" and len(parts) == 2:
                triangles.add(int(parts[1]))
            elif parts[0] == "glue" and len(parts) == 4:
                if parts[3] not in (KEEP, FLIP):
                    raise FormatError("bad flag %r" % (parts[3],))
                gluings.append((side(parts[1]), side(parts[2]), parts[3]))
            elif parts[0] == "bdry" and len(parts) == 2:
                side(parts[1])
            else:
                raise FormatError("bad triangulation record %r" % (line,))
        if triangles != set(range(len(triangles))):
            raise FormatError("triangle ids must be 0..F-1")
        return cls(len(triangles), gluings, name=name)

    def __repr__(self):
        return "Triangulation(%r, F=%d, E=%d, V=%d)" % (
            self.name,
            self.num_triangles,
            self.num_edges,
            self.num_vertices,
        )


def _fan_model(g, n):
    """Fan-triangulated polygon model of N_{g,n}.

    Polygon word: a1 a1 a2 a2 ... ag ag  B1  (x2 B2 x2^-1) ... (xn Bn xn^-1)
    with crosscap pairs glued direction-preserving (flag ``flip``) and tether
    pairs direction-reversing (flag ``keep``).  The fan apex is the polygon
    corner between the two a1 sides, which keeps glued partner sides on
    distinct triangles.  For n >= 1 every vertex class meets the boundary.
    """
    m = 2 * g + (3 * n - 2 if n >= 1 else 0)
    if n == 0:
        m = 2 * g
    if m < 4:
        raise ValueError("fan model needs at least 4 polygon sides")
    # triangles T_j = (w1, w_j, w_j+1) for j = 2..m-1; triangle index j-2
    # polygon side j lives on:
    #   side 1 on triangle 0 (as its side 0), side 0 on triangle m-3 (side 2),
    #   side j (2 <= j <= m-1) on triangle j-2 (as its side 1)
    def poly_side(j):
        if j == 1:
            return (0, 0)
        if j == 0:
            return (m - 3, 2)
        return (j - 2, 1)

    gluings = []
    # internal fan diagonals d_j = (w1, w_j), j = 3..m-1: side 2 of T_{j-1}
    # glued to side 0 of T_j, direction-reversing
    for j in range(3, m):
        gluings.append(((j - 3, 2), (j - 2, 0), KEEP))
    # crosscap pairs
    for k in range(g):
        gluings.append((poly_side(2 * k), poly_side(2 * k + 1), FLIP))
    # tether pairs
    for j in range(n - 1):
        base = 2 * g + 1 + 3 * j
        gluings.append((poly_side(base), poly_side(base + 2), KEEP))
    return Triangulation(m - 2, gluings, name="N%d.%d" % (g, n))


def _moebius_model():
    """Two-triangle Mobius band: square aaBB' split along (w1, w3)."""
    # T0 = (w0,w1,w3): sides a=(w0,w1), diag=(w1,w3), B'=(w3,w0)
    # T1 = (w1,w2,w3): sides a=(w1,w2), B=(w2,w3), diag=(w3,w1)
    gluings = [
        ((0, 0), (1, 0), FLIP),  # a ~ a, direction-preserving
        ((0, 1), (1, 2), KEEP),  # diagonal
    ]
    return Triangulation(2, gluings, name="N1.1")


@lru_cache(maxsize=None)
def model_surface(genus, boundary):
    """The fixed model triangulation of N_{g,n} used by all curve machinery."""
    s = SurfaceSpec(genus, boundary)
    if (genus, boundary) == (1, 1):
        tri = _moebius_model()
    elif (genus, boundary) == (1, 0):
        raise ValueError("the projective plane has no model here (no fan)")
    else:
        tri = _fan_model(genus, boundary)
    realized = tri.surface_type()
    if realized != s:
        raise AssertionError("model for %s realized %s" % (s, realized))
    if boundary >= 1:
        if set(range(tri.num_vertices)) != tri.boundary_vertices():
            raise AssertionError("bordered model for %s has interior vertices" % (s,))
    return tri


def model_registry_key(tri: Triangulation) -> str:
    return tri.name


def parse_model_key(key: str) -> SurfaceSpec:
    """Parse a registry key like ``N2.1`` into a surface spec."""
    if not key.startswith("N"):
        raise FormatError("bad model key %r" % (key,))
    try:
        g, n = key[1:].split(".")
        return SurfaceSpec(int(g), int(n))
    except ValueError:
        raise FormatError("bad model key %r" % (key,)) from None
