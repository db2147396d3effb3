"""Canonical forms for decorated pants graphs.

Two pants graphs are equivalent iff they are related by

* decorated graph isomorphism (pants relabelling, slot symmetry),
* per-pants sign flips (reversing one pants' local orientation flips the
  sign of every incident non-loop edge), and
* sign absorption at crosscap legs (any single edge incident to a pants
  that carries a crosscap leg may flip its sign).

The canonical form is the lexicographically least text serialization over
the equivalence class.  Vertex labellings are searched by iterative
partition refinement with individualization; sign vectors are canonicalised
by a breadth-first orbit walk under flips, absorptions, automorphisms and
parallel-edge swaps.
"""

from __future__ import annotations

from .graphs import PantsGraph

__all__ = [
    "canonical_form",
    "canonicalize",
    "shape_of",
    "canonical_shape",
    "sign_orbit",
]


def shape_of(pg: PantsGraph):
    """Extract (p, legs, edges, signs): the sign-free shape plus sign vector."""
    p = pg.num_pants
    nb = [0] * p
    nx = [0] * p
    for v in pg.boundaries:
        nb[v] += 1
    for v in pg.crosscaps:
        nx[v] += 1
    legs = tuple(zip(nb, nx))
    edges = tuple((u, v) for u, v, _ in pg.edges)
    signs = tuple(1 if s == -1 else 0 for _, _, s in pg.edges)
    return p, legs, edges, signs


def _refine(adj, cells):
    """Equitable refinement of an ordered partition w.r.t. multigraph adjacency."""
    while True:
        colour = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                colour[v] = ci
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = {}
                for u, mult in adj[v].items():
                    key = colour[u]
                    counts[key] = counts.get(key, 0) + mult
                sig.setdefault(tuple(sorted(counts.items())), []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                new_cells.append(sorted(sig[key]))
        cells = new_cells
        if not changed:
            return cells


def _shape_key(p, legs, edges, perm):
    new_edges = []
    for u, v in edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        new_edges.append((a, b))
    new_edges.sort()
    new_legs = [None] * p
    for v in range(p):
        new_legs[perm[v]] = legs[v]
    return tuple(new_legs), tuple(new_edges)


def canonical_shape(p, legs, edges):
    """Canonical labelling of the sign-free decorated multigraph.

    Returns ``(key, perms)`` where key = (legs, edges) under the best
    labelling and perms is the full coset of labellings achieving it (their
    pairwise quotients generate the automorphism group).
    """
    adj = [dict() for _ in range(p)]
    loops = [0] * p
    for u, v in edges:
        if u == v:
            loops[u] += 1
        else:
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1

    base = {}
    for v in range(p):
        base.setdefault((legs[v], loops[v], sum(adj[v].values())), []).append(v)
    cells = [sorted(base[k]) for k in sorted(base)]
    cells = _refine(adj, cells)

    best = [None]
    best_perms = []

    def descend(cells):
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            perm = [0] * p
            idx = 0
            for cell in cells:
                perm[cell[0]] = idx
                idx += 1
            key = _shape_key(p, legs, edges, perm)
            if best[0] is None or key < best[0]:
                best[0] = key
                best_perms.clear()
                best_perms.append(tuple(perm))
            elif key == best[0]:
                best_perms.append(tuple(perm))
            return
        pos = cells.index(target)
        for v in target:
            rest = [u for u in target if u != v]
            new_cells = cells[:pos] + [[v], rest] + cells[pos + 1 :]
            descend(_refine(adj, new_cells))

    descend(cells)
    return best[0], best_perms


def _edge_perm_from_vertex_perm(canon_edges, tau):
    """Edge-index permutation induced by a vertex permutation (blockwise)."""
    groups = {}
    for i, (u, v) in enumerate(canon_edges):
        groups.setdefault((u, v), []).append(i)
    eperm = [None] * len(canon_edges)
    for (u, v), idxs in groups.items():
        a, b = tau[u], tau[v]
        if a > b:
            a, b = b, a
        target = groups[(a, b)]
        for src, dst in zip(idxs, target):
            eperm[src] = dst
    return tuple(eperm)


def sign_orbit(p, canon_legs, canon_edges, vec, taus):
    """Orbit of a sign vector; returns (lexicographic minimum, orbit set).

    Generators: per-pants flips, single-edge flips at crosscap-bearing
    pants, automorphism-induced edge permutations and parallel-edge swaps.
    The orbit has at most 2^E states, so a plain walk suffices.
    """
    E = len(canon_edges)
    if E == 0:
        return (), {()}
    cross_vertices = {v for v in range(p) if canon_legs[v][1] > 0}
    gens = []
    for v in range(p):
        mask = tuple(1 if (u == v) != (w == v) else 0 for u, w in canon_edges)
        if any(mask):
            gens.append(lambda x, m=mask: tuple(a ^ b for a, b in zip(x, m)))
    for i, (u, w) in enumerate(canon_edges):
        if u in cross_vertices or w in cross_vertices:
            gens.append(lambda x, i=i: x[:i] + (x[i] ^ 1,) + x[i + 1 :])
    eperms = {_edge_perm_from_vertex_perm(canon_edges, tau) for tau in taus}
    for i in range(E - 1):
        if canon_edges[i] == canon_edges[i + 1]:
            sw = list(range(E))
            sw[i], sw[i + 1] = sw[i + 1], sw[i]
            eperms.add(tuple(sw))
    for ep in sorted(eperms):
        if ep != tuple(range(E)):
            inv = tuple(ep.index(j) for j in range(E))
            gens.append(lambda x, inv=inv: tuple(x[inv[j]] for j in range(E)))

    seen = {tuple(vec)}
    frontier = [tuple(vec)]
    best = tuple(vec)
    while frontier:
        nxt = []
        for state in frontier:
            for gen in gens:
                out = gen(state)
                if out not in seen:
                    seen.add(out)
                    nxt.append(out)
                    if out < best:
                        best = out
        frontier = nxt
    return best, seen


def canonicalize(pg: PantsGraph) -> PantsGraph:
    """Canonical representative of the equivalence class of ``pg``."""
    p, legs, edges, signs = shape_of(pg)
    (canon_legs, canon_edges), perms = canonical_shape(p, legs, edges)

    # transport the sign vector along the first optimal labelling, then
    # minimise over the automorphism coset inside the orbit walk
    perm0 = perms[0]
    order = sorted(
        range(len(edges)),
        key=lambda i: (
            min(perm0[edges[i][0]], perm0[edges[i][1]]),
            max(perm0[edges[i][0]], perm0[edges[i][1]]),
        ),
    )
    moved = [0] * len(edges)
    for new_pos, old_i in enumerate(order):
        moved[new_pos] = signs[old_i]
    taus = [tuple(sigma[perm0.index(i)] for i in range(p)) for sigma in perms]
    canon_signs, _ = sign_orbit(p, canon_legs, canon_edges, moved, taus)

    crosscaps = []
    boundaries = []
    for v, (nb, nx) in enumerate(canon_legs):
        crosscaps.extend([v] * nx)
        boundaries.extend([v] * nb)
    return PantsGraph(
        p,
        [(u, v, -1 if b else 1) for (u, v), b in zip(canon_edges, canon_signs)],
        crosscaps,
        boundaries,
    )


def canonical_form(pg: PantsGraph) -> bytes:
    """Canonical byte serialization (dedup key; equal iff equivalent)."""
    return canonicalize(pg).serialize().encode("ascii")
