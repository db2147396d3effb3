"""Injective simplicial self-maps: search, lemma predicates, certificates.

The search backtracks over vertex images in canonical order and emits
every total injective edge-preserving map of the finite complex.  Optional
propagators prune with the lemma predicates; each is available only under
its stated surface hypothesis and never prunes a map induced by a
homeomorphism.  Certification searches generator words breadth-first and
verifies the induced action vertex by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import PropagatorHypothesisViolated
from ..curve_engine.mapping import apply_generator, generator_dictionary
from ..curve_engine.normal import ONE_SIDED, TWO_SIDED
from .complexes import FiniteCurveComplex, adjacency_in, small_intersection

__all__ = [
    "PROPAGATORS",
    "propagator_hypothesis_holds",
    "search_injective_maps",
    "map_is_injective_simplicial",
    "GeometricityCertificate",
    "certify_geometric",
    "LemmaReport",
    "verify_lemma_predicates",
]

PROPAGATORS = ("L2.3", "L2.4", "L2.5", "L2.9", "L2.10")


def propagator_hypothesis_holds(surface, name) -> bool:
    g, n = surface.genus, surface.boundary
    if name == "L2.3" or name == "L2.4":
        return g + n >= 4
    if name == "L2.5":
        return (g, n) in ((1, 4), (2, 2))
    if name == "L2.9":
        return (g, n) == (3, 0) or g + n >= 4
    if name == "L2.10":
        return g >= 2 and ((g, n) == (3, 0) or g + n >= 4)
    raise ValueError("unknown propagator %r" % (name,))


def _small_intersection_pairs(cc):
    """Pairs (i < j) with nonzero intersection and a small-intersection witness."""
    out = set()
    n = len(cc.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if cc.inter(i, j) == 0:
                continue
            if small_intersection(cc, i, j).answer == "yes":
                out.add((i, j))
    return out


def map_is_injective_simplicial(cc: FiniteCurveComplex, images) -> bool:
    n = len(cc.vertices)
    if sorted(set(images)) != sorted(set(range(n))) and len(set(images)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if cc.is_edge(i, j) and not cc.is_edge(images[i], images[j]):
                return False
    return True


def search_injective_maps(cc: FiniteCurveComplex, propagators=(), most_constrained=False):
    """All total injective edge-preserving vertex maps surviving propagators.

    Deterministic: the emitted list is sorted by image tuple regardless of
    the internal assignment order flag.
    """
    for name in propagators:
        if name not in PROPAGATORS:
            raise ValueError("unknown propagator %r" % (name,))
        if not propagator_hypothesis_holds(cc.surface, name):
            raise PropagatorHypothesisViolated(
                "%s requires its surface hypothesis; %s does not satisfy it"
                % (name, cc.surface)
            )
    n = len(cc.vertices)
    use_23 = "L2.3" in propagators
    use_24 = "L2.4" in propagators
    use_25 = "L2.5" in propagators
    use_29 = "L2.9" in propagators
    use_210 = "L2.10" in propagators

    small_pairs = _small_intersection_pairs(cc) if use_23 else set()
    true_top = {s.vertices: s for s in cc.true_top_simplices()}
    one_sided = [cc.one_sided(i) for i in range(n)]
    nonor_one_sided = [
        one_sided[i] and not cc.annotations[i]["complement_orientable"]
        for i in range(n)
    ]

    if most_constrained:
        order = sorted(
            range(n), key=lambda i: (-sum(1 for j in range(n) if cc.is_edge(i, j)), i)
        )
    else:
        order = list(range(n))

    results = []
    images = {}
    used = set()

    def clique_checks(v):
        """Lemma 2.4/2.9 checks on true top cliques completed by assigning v."""
        for verts, simplex in true_top.items():
            if v not in verts or any(u not in images for u in verts):
                continue
            img = frozenset(images[u] for u in verts)
            target = cc._true_by_set.get(img)
            if target is None or not target.is_top(cc.top_dimension()):
                continue  # image is not a true top decomposition; no constraint
            for x in verts:
                for y in verts:
                    if x >= y:
                        continue
                    adj = adjacency_in(cc, verts, x, y)
                    adj_img = adjacency_in(
                        cc, tuple(sorted(img)), images[x], images[y]
                    )
                    if use_24 and not adj and adj_img:
                        return False
                    if use_29 and adj and not adj_img:
                        return False
        return True

    def assign(pos):
        if pos == n:
            results.append(tuple(images[i] for i in range(n)))
            return
        v = order[pos]
        for m in range(n):
            if m in used:
                continue
            ok = True
            if (use_25 or use_210) and one_sided[v]:
                if use_25 and not one_sided[m]:
                    ok = False
                if ok and use_210 and nonor_one_sided[v] and not nonor_one_sided[m]:
                    ok = False
            if ok:
                for u in images:
                    if cc.is_edge(u, v) and not cc.is_edge(images[u], m):
                        ok = False
                        break
                    if use_23:
                        pair = (min(u, v), max(u, v))
                        if pair in small_pairs and cc.inter(images[u], m) == 0:
                            ok = False
                            break
            if not ok:
                continue
            images[v] = m
            used.add(m)
            if (not (use_24 or use_29)) or clique_checks(v):
                assign(pos + 1)
            del images[v]
            used.discard(m)

    assign(0)
    return sorted(results)


@dataclass(frozen=True)
class GeometricityCertificate:
    word: tuple[str, ...]
    word_length: int
    vertex_flags: tuple[bool, ...]

    @property
    def found(self):
        return True


@dataclass(frozen=True)
class NotFoundAtBound:
    bound: int

    @property
    def found(self):
        return False


def _default_dictionary(cc: FiniteCurveComplex, max_twists=4):
    two_sided = [
        cc.vertices[i]
        for i in range(len(cc.vertices))
        if cc.annotations[i]["sidedness"] == TWO_SIDED
    ][:max_twists]
    if not cc.tri.boundary_sides:
        two_sided = []
    return generator_dictionary(cc.tri, two_sided)


def certify_geometric(cc: FiniteCurveComplex, images, word_bound, generators=None):
    """Breadth-first search for a generator word inducing the given map.

    Returns a :class:`GeometricityCertificate` or :class:`NotFoundAtBound`.
    """
    gens = generators if generators is not None else _default_dictionary(cc)
    target = tuple(cc.vertices[m].weights for m in images)
    action_cache = {}

    def act(gen, weights_tuple):
        key = (gen.name, weights_tuple)
        if key not in action_cache:
            from ..curve_engine.normal import NormalCurve

            out = apply_generator(cc.tri, gen, NormalCurve(cc.tri.name, weights_tuple))
            action_cache[key] = out.weights
        return action_cache[key]

    start = tuple(c.weights for c in cc.vertices)
    if start == target:
        return GeometricityCertificate((), 0, tuple(True for _ in images))
    seen = {start: ()}
    frontier = [start]
    for depth in range(1, word_bound + 1):
        nxt = []
        for state in frontier:
            word = seen[state]
            for gen in gens:
                out = tuple(act(gen, w) for w in state)
                if out in seen:
                    continue
                seen[out] = word + (gen.name,)
                if out == target:
                    return GeometricityCertificate(
                        word + (gen.name,), depth, tuple(True for _ in images)
                    )
                nxt.append(out)
        frontier = nxt
    return NotFoundAtBound(word_bound)


@dataclass(frozen=True)
class SuiteResult:
    words_explored: int
    induced_maps: int
    checks: int
    violations: tuple[str, ...]

    @property
    def passed(self):
        return not self.violations


def homeomorphism_invariance_suite(cc: FiniteCurveComplex, word_bound=4, max_twists=2):
    """Verify generator words of bounded length against the complex.

    Two layers: every single generator is checked pointwise on all
    vertices (annotations preserved, every pairwise intersection number
    preserved) — word invariance follows by composition; and every word
    whose action maps the vertex set into itself induces a self-map that
    must be injective simplicial, preserve the table, survive every
    applicable propagator, and pass the lemma predicates.
    """
    from ..curve_engine.cutting import cut_along
    from ..curve_engine.intersection import intersection_number
    from ..curve_engine.normal import NormalCurve, sidedness

    gens = _default_dictionary(cc, max_twists=max_twists)
    n = len(cc.vertices)
    weights_to_index = {c.weights: i for i, c in enumerate(cc.vertices)}
    action_cache = {}

    def act(gen, weights_tuple):
        key = (gen.name, weights_tuple)
        if key not in action_cache:
            out = apply_generator(cc.tri, gen, NormalCurve(cc.tri.name, weights_tuple))
            action_cache[key] = out.weights
        return action_cache[key]

    enabled = [p for p in PROPAGATORS if propagator_hypothesis_holds(cc.surface, p)]
    small_pairs = _small_intersection_pairs(cc) if "L2.3" in enabled else set()
    top = cc.top_dimension()

    violations = []
    checks = 0

    # layer 1: pointwise single-generator invariance (composes to words)
    for gen in gens:
        imgs = [NormalCurve(cc.tri.name, act(gen, c.weights)) for c in cc.vertices]
        for i in range(n):
            checks += 1
            if sidedness(cc.tri, imgs[i]) != cc.annotations[i]["sidedness"]:
                violations.append("%s changes sidedness of vertex %d" % (gen.name, i))
            pieces = cut_along(cc.tri, imgs[i])
            if (len(pieces) == 2) != cc.annotations[i]["separating"]:
                violations.append("%s changes separation of vertex %d" % (gen.name, i))
            if all(p.orientable for p in pieces) != cc.annotations[i]["complement_orientable"]:
                violations.append(
                    "%s changes complement orientability of vertex %d" % (gen.name, i)
                )
        for i in range(n):
            for j in range(i, n):
                if intersection_number(cc.tri, imgs[i], imgs[j]) != cc.inter(i, j):
                    violations.append(
                        "%s changes i(%d,%d)" % (gen.name, i, j)
                    )

    maps_seen = set()
    start = tuple(c.weights for c in cc.vertices)
    seen = {start}
    frontier = [start]
    words = 0
    for _ in range(word_bound):
        nxt = []
        for state in frontier:
            for gen in gens:
                words += 1
                out = tuple(act(gen, w) for w in state)
                if out in seen:
                    continue
                seen.add(out)
                nxt.append(out)
        frontier = nxt
    for state in sorted(seen):
        if any(w not in weights_to_index for w in state):
            continue  # not a self-map of the truncation
        images = tuple(weights_to_index[w] for w in state)
        if images in maps_seen:
            continue
        maps_seen.add(images)
        checks += 1
        if len(set(images)) != n or not map_is_injective_simplicial(cc, images):
            violations.append("word-induced map %r is not injective simplicial" % (images,))
            continue
        for i in range(n):
            if cc.annotations[i] != cc.annotations[images[i]]:
                violations.append(
                    "map %r changes annotations at vertex %d" % (images, i)
                )
        for i in range(n):
            for j in range(i, n):
                if cc.inter(i, j) != cc.inter(images[i], images[j]):
                    violations.append(
                        "map %r changes i(%d,%d)" % (images, i, j)
                    )
        # propagator survival
        for i, j in small_pairs:
            if cc.inter(images[i], images[j]) == 0:
                violations.append("map %r pruned by L2.3 at (%d,%d)" % (images, i, j))
        if "L2.5" in enabled or "L2.10" in enabled:
            for i in range(n):
                if cc.one_sided(i) and not cc.one_sided(images[i]):
                    violations.append("map %r pruned by L2.5 at %d" % (images, i))
        if ("L2.4" in enabled or "L2.9" in enabled) and top is not None:
            for simplex in cc.true_top_simplices():
                verts = simplex.vertices
                img = frozenset(images[v] for v in verts)
                target = cc._true_by_set.get(img)
                if target is None or not target.is_top(top):
                    continue
                for x in verts:
                    for y in verts:
                        if x >= y:
                            continue
                        adj = adjacency_in(cc, verts, x, y)
                        adj_img = adjacency_in(cc, tuple(sorted(img)), images[x], images[y])
                        if adj != adj_img:
                            violations.append(
                                "map %r pruned by adjacency lemmas at (%d,%d)" % (images, x, y)
                            )
        for rep in verify_lemma_predicates(cc, images):
            if rep.applicable and not rep.passed:
                violations.extend(
                    "map %r fails %s: %s" % (images, rep.lemma, v) for v in rep.violations
                )
    return SuiteResult(words, len(maps_seen), checks, tuple(violations))


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    applicable: bool
    checked: int
    violations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self):
        return not self.violations


def verify_lemma_predicates(cc: FiniteCurveComplex, images):
    """Per-lemma reports for a total vertex map of the complex.

    The map must be injective and simplicial; otherwise a single rejection
    report is returned.
    """
    n = len(cc.vertices)
    if len(set(images)) != n or not map_is_injective_simplicial(cc, images):
        return [
            LemmaReport("simplicial", True, 1, ("map is not injective simplicial",))
        ]
    s = cc.surface
    reports = []

    # L2.3: small intersection maps to nonzero intersection
    if propagator_hypothesis_holds(s, "L2.3"):
        violations = []
        checked = 0
        for i, j in sorted(_small_intersection_pairs(cc)):
            checked += 1
            if cc.inter(images[i], images[j]) == 0:
                violations.append("small pair (%d,%d) maps to disjoint pair" % (i, j))
        reports.append(LemmaReport("L2.3", True, checked, tuple(violations)))
    else:
        reports.append(LemmaReport("L2.3", False, 0))

    # adjacency lemmas over true top cliques with true-top images
    top = cc.top_dimension()
    adjacency_cases = {"L2.4": [], "L2.6": [], "L2.7": [], "L2.8": []}
    counts = {k: 0 for k in adjacency_cases}
    for simplex in cc.true_top_simplices():
        verts = simplex.vertices
        img = frozenset(images[v] for v in verts)
        target = cc._true_by_set.get(img)
        if target is None or not target.is_top(top):
            continue
        for x in verts:
            for y in verts:
                if x >= y:
                    continue
                adj = adjacency_in(cc, verts, x, y)
                adj_img = adjacency_in(cc, tuple(sorted(img)), images[x], images[y])
                both = (cc.one_sided(x), cc.one_sided(y))
                if not adj:
                    counts["L2.4"] += 1
                    if adj_img:
                        adjacency_cases["L2.4"].append(
                            "nonadjacent (%d,%d) in %r maps adjacent" % (x, y, verts)
                        )
                else:
                    case = (
                        "L2.7"
                        if all(both)
                        else "L2.6" if not any(both) else "L2.8"
                    )
                    counts[case] += 1
                    if not adj_img:
                        adjacency_cases[case].append(
                            "adjacent (%d,%d) in %r maps nonadjacent" % (x, y, verts)
                        )
    hyp = {
        "L2.4": propagator_hypothesis_holds(s, "L2.4"),
        "L2.6": s.genus + s.boundary >= 5,
        "L2.7": propagator_hypothesis_holds(s, "L2.9"),
        "L2.8": s.genus + s.boundary >= 4,
    }
    for lemma in ("L2.4", "L2.6", "L2.7", "L2.8"):
        if hyp[lemma]:
            reports.append(
                LemmaReport(lemma, True, counts[lemma], tuple(adjacency_cases[lemma]))
            )
        else:
            reports.append(LemmaReport(lemma, False, 0))
    # L2.9 = union of the adjacency cases
    if propagator_hypothesis_holds(s, "L2.9"):
        total = counts["L2.6"] + counts["L2.7"] + counts["L2.8"]
        viols = tuple(
            adjacency_cases["L2.6"] + adjacency_cases["L2.7"] + adjacency_cases["L2.8"]
        )
        reports.append(LemmaReport("L2.9", True, total, viols))
    else:
        reports.append(LemmaReport("L2.9", False, 0))

    # L2.5 / L2.10: sidedness and complement preservation
    for lemma, extra in (("L2.5", False), ("L2.10", True)):
        if not propagator_hypothesis_holds(s, lemma):
            reports.append(LemmaReport(lemma, False, 0))
            continue
        violations = []
        checked = 0
        for i in range(n):
            if not cc.one_sided(i):
                continue
            if extra and cc.annotations[i]["complement_orientable"]:
                continue
            checked += 1
            if not cc.one_sided(images[i]):
                violations.append("one-sided %d maps to two-sided %d" % (i, images[i]))
            elif extra and cc.annotations[images[i]]["complement_orientable"]:
                violations.append(
                    "nonorientable-complement %d maps to orientable-complement %d"
                    % (i, images[i])
                )
        reports.append(LemmaReport(lemma, True, checked, tuple(violations)))
    return reports
