"""Exhaustive enumeration of pants decompositions per surface.

Decompositions are generated as decorated trivalent graphs: distribute
boundary and crosscap legs over the pants nodes, enumerate the internal
multigraphs by backtracking over adjacency matrices, quotient by canonical
form, then enumerate gluing-sign classes per shape.  The stream is
deterministic: exactly one representative per canonical-form class, sorted
by canonical byte serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import OutOfHypothesis
from ..surface_core import (
    DimensionRange,
    SurfaceSpec,
    max_simplex_dimension_range,
    pants_count,
    top_census_counts,
)
from .canon import canonical_form, canonical_shape, sign_orbit
from .graphs import ONE_SIDED, PantsGraph, classify_curve, curve_labels

__all__ = [
    "enumerate_decompositions",
    "enumerated_dimension_set",
    "verify_lemma_2_1",
    "verify_lemma_2_2",
    "Lemma21Report",
    "Lemma22Report",
]


def _leg_distributions(p, total, cap):
    """Nonincreasing sequences of length p, entries <= cap, with given sum."""
    out = []

    def rec(prefix, remaining, bound):
        k = len(prefix)
        if k == p:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        slots_left = p - k
        for x in range(min(bound, remaining, cap), -1, -1):
            if x * slots_left < remaining:
                break
            rec(prefix + [x], remaining - x, x)

    rec([], total, cap)
    return out


def _paired_leg_distributions(p, n, c):
    """Per-vertex (boundary, crosscap) leg counts, profile-sorted."""
    results = set()
    for nb in _leg_distributions(p, n, 3):
        caps = [3 - b for b in nb]

        def rec(prefix, remaining):
            k = len(prefix)
            if k == p:
                if remaining == 0:
                    legs = tuple(zip(nb, prefix))
                    if all(legs[i] >= legs[i + 1] for i in range(p - 1)):
                        results.add(legs)
                return
            for x in range(min(caps[k], remaining), -1, -1):
                rec(prefix + [x], remaining - x)

        rec([], c)
    return sorted(results, reverse=True)


def _symmetric_matrices(d):
    """Symmetric nonneg integer matrices, even diagonal, row sums ``d``."""
    p = len(d)
    A = [[0] * p for _ in range(p)]
    out = []

    def row_start(i):
        return sum(A[k][i] for k in range(i))

    def rec(i, j, row_used):
        if i == p:
            out.append([row[:] for row in A])
            return
        if j == p:
            if row_used == d[i]:
                rec(i + 1, i + 1, row_start(i + 1) if i + 1 < p else 0)
            return
        remaining = d[i] - row_used
        if j == i:
            for val in range(0, remaining + 1, 2):
                A[i][i] = val
                rec(i, j + 1, row_used + val)
            A[i][i] = 0
            return
        cap = min(remaining, d[j] - row_start(j) - A[j][j])
        for val in range(0, cap + 1):
            A[i][j] = val
            A[j][i] = val
            rec(i, j + 1, row_used + val)
        A[i][j] = 0
        A[j][i] = 0

    rec(0, 0, 0)
    return out


def _connected(p, edges):
    if p == 1:
        return True
    parent = list(range(p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    root = find(0)
    return all(find(v) == root for v in range(p))


def _matrix_to_edges(A):
    p = len(A)
    edges = []
    for u in range(p):
        edges.extend([(u, u)] * (A[u][u] // 2))
        for v in range(u + 1, p):
            edges.extend([(u, v)] * A[u][v])
    return tuple(sorted(edges))


def _has_odd_cycle(p, edges, signs):
    """True iff the sign pattern is not equivalent to all-positive."""
    adj = [[] for _ in range(p)]
    for i, (u, v) in enumerate(edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    pot = [None] * p
    pot[0] = 0
    stack = [0]
    tree = set()
    while stack:
        u = stack.pop()
        for v, i in adj[u]:
            if pot[v] is None:
                pot[v] = pot[u] ^ signs[i]
                tree.add(i)
                stack.append(v)
    for i, (u, v) in enumerate(edges):
        if i in tree:
            continue
        if u == v:
            if signs[i]:
                return True
            continue
        if pot[u] ^ pot[v] ^ signs[i]:
            return True
    return False


@lru_cache(maxsize=None)
def _enumerate_cached(genus, boundary):
    s = SurfaceSpec(genus, boundary)
    p = pants_count(s)
    g, n = s.genus, s.boundary
    shapes = {}
    for c in range(g % 2, g + 1, 2):
        two_e = 3 * p - n - c
        if two_e < 0 or two_e % 2:
            continue
        E = two_e // 2
        if E < p - 1:
            continue
        for legs in _paired_leg_distributions(p, n, c):
            d = [3 - nb - nx for nb, nx in legs]
            if any(x < 0 for x in d):
                continue
            for A in _symmetric_matrices(d):
                edges = _matrix_to_edges(A)
                if not _connected(p, edges):
                    continue
                key, perms = canonical_shape(p, legs, edges)
                if key not in shapes:
                    shapes[key] = perms

    graphs = []
    for (canon_legs, canon_edges), perms in shapes.items():
        p_ = len(canon_legs)
        E = len(canon_edges)
        c = sum(nx for _, nx in canon_legs)
        perm0 = perms[0]
        taus = [tuple(sigma[perm0.index(i)] for i in range(p_)) for sigma in perms]
        seen = set()
        reps = []
        for bits in range(1 << E):
            vec = tuple((bits >> k) & 1 for k in range(E))
            if vec in seen:
                continue
            rep, orbit = sign_orbit(p_, canon_legs, canon_edges, vec, taus)
            seen.update(orbit)
            if c == 0 and not _has_odd_cycle(p_, canon_edges, rep):
                continue  # orientable regluing, not this surface
            reps.append(rep)
        for rep in sorted(set(reps)):
            crosscaps = []
            boundaries = []
            for v, (nb, nx) in enumerate(canon_legs):
                crosscaps.extend([v] * nx)
                boundaries.extend([v] * nb)
            pg = PantsGraph(
                p_,
                [(u, v, -1 if b else 1) for (u, v), b in zip(canon_edges, rep)],
                crosscaps,
                boundaries,
            )
            graphs.append(pg)
    graphs.sort(key=canonical_form)
    return tuple(graphs)


def enumerate_decompositions(s: SurfaceSpec):
    """Yield one canonical representative per decomposition class of ``s``.

    The stream is sorted by canonical form and is byte-stable across runs.
    Raises :class:`NoPantsDecomposition` via :func:`pants_count` when the
    surface has none.
    """
    pants_count(s)
    yield from _enumerate_cached(s.genus, s.boundary)


def enumerated_dimension_set(s: SurfaceSpec) -> set[int]:
    """Achieved maximal-simplex dimensions, from exhaustive enumeration."""
    return {pg.dimension() for pg in enumerate_decompositions(s)}


@dataclass(frozen=True)
class Lemma21Report:
    surface: SurfaceSpec
    achieved_dims: tuple[int, ...]
    expected: DimensionRange
    passed: bool


@dataclass(frozen=True)
class Lemma22Report:
    surface: SurfaceSpec
    top_count: int
    expected_counts: tuple[int, int]
    passed: bool
    violations: tuple[str, ...] = field(default_factory=tuple)


def verify_lemma_2_1(s: SurfaceSpec) -> Lemma21Report:
    """Compare achieved dimensions against the closed-form range."""
    expected = max_simplex_dimension_range(s)  # OutOfHypothesis for g=1, (2,0)
    achieved = enumerated_dimension_set(s)
    return Lemma21Report(
        surface=s,
        achieved_dims=tuple(sorted(achieved)),
        expected=expected,
        passed=achieved == expected.as_set(),
    )


def verify_lemma_2_2(s: SurfaceSpec) -> Lemma22Report:
    """Check the census of every top-dimensional decomposition of ``s``."""
    expected = top_census_counts(s)  # OutOfHypothesis outside the lemma
    if s.genus < 2 or (s.genus, s.boundary) == (2, 0):
        raise OutOfHypothesis("lemma 2.2 sweep needs the dimension formula; got %s" % s)
    top_dim = max_simplex_dimension_range(s).hi
    top = [pg for pg in enumerate_decompositions(s) if pg.dimension() == top_dim]
    violations = []
    for k, pg in enumerate(top):
        one_sided = 0
        separating = 0
        for lab in curve_labels(pg):
            cls = classify_curve(pg, lab)
            if cls.sidedness == ONE_SIDED:
                one_sided += 1
                if cls.complement_orientable:
                    violations.append(
                        "top[%d] %s: one-sided curve with orientable complement" % (k, lab)
                    )
            else:
                if cls.separating:
                    separating += 1
                else:
                    violations.append(
                        "top[%d] %s: two-sided nonseparating curve" % (k, lab)
                    )
        if (one_sided, separating) != expected:
            violations.append(
                "top[%d]: census (%d, %d) != expected (%d, %d)"
                % (k, one_sided, separating, expected[0], expected[1])
            )
    return Lemma22Report(
        surface=s,
        top_count=len(top),
        expected_counts=expected,
        passed=not violations,
        violations=tuple(violations),
    )
