import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvelab.errors import Disconnected, NoPantsDecomposition, OutOfHypothesis
from curvelab.pants_census import (
    ONE_SIDED,
    TWO_SIDED,
    CurveLabel,
    PantsGraph,
    adjacency_graph,
    canonical_form,
    classify_curve,
    curve_labels,
    enumerate_decompositions,
    enumerated_dimension_set,
    is_top_dimensional,
    realized_surface,
    verify_lemma_2_1,
    verify_lemma_2_2,
)
from curvelab.surface_core import PieceSpec, SurfaceSpec


def orientable_bruteforce(pg):
    """Independent orientability oracle: try all per-pants orientations."""
    if pg.crosscaps:
        return False
    for assign in itertools.product((1, -1), repeat=pg.num_pants):
        ok = True
        for u, v, s in pg.edges:
            if u == v:
                if s != 1:
                    ok = False
                    break
            elif s * assign[u] * assign[v] != 1:
                ok = False
                break
        if ok:
            return True
    return False


# -- realized_surface -----------------------------------------------------


def test_realized_three_crosscaps():
    pg = PantsGraph(1, [], [0, 0, 0], [])
    assert realized_surface(pg) == SurfaceSpec(3, 0)


def test_realized_torus_with_hole():
    pg = PantsGraph(1, [(0, 0, 1)], [], [0])
    assert realized_surface(pg) == PieceSpec(True, 1, 1)


def test_realized_klein_with_hole():
    # oracle: brute force over per-pants orientations says nonorientable
    pg = PantsGraph(1, [(0, 0, -1)], [], [0])
    assert not orientable_bruteforce(pg)
    assert realized_surface(pg) == SurfaceSpec(2, 1)


def test_realized_disconnected():
    pg = PantsGraph(2, [(0, 0, 1), (1, 1, 1)], [], [0, 1])
    with pytest.raises(Disconnected):
        realized_surface(pg)


@pytest.mark.parametrize("g,n", [(3, 0), (2, 1), (4, 0), (2, 2), (1, 4), (3, 2)])
def test_realized_matches_bruteforce_orientability(g, n):
    s = SurfaceSpec(g, n)
    for pg in enumerate_decompositions(s):
        assert realized_surface(pg) == s
        assert not orientable_bruteforce(pg)


# -- enumeration ----------------------------------------------------------


def test_enumerate_3_0():
    pgs = list(enumerate_decompositions(SurfaceSpec(3, 0)))
    assert len(pgs) == 2
    dims = sorted(pg.dimension() for pg in pgs)
    assert dims == [1, 2]
    kinds = sorted((len(pg.edges), len(pg.crosscaps)) for pg in pgs)
    assert kinds == [(0, 3), (1, 1)]


def test_enumerate_1_3_all_two_curves():
    for pg in enumerate_decompositions(SurfaceSpec(1, 3)):
        assert pg.curve_count() == 2


def test_enumerate_2_1_count():
    # hand enumeration: one pants; either two crosscap legs, or a self-edge
    # whose sign must be negative to reglue nonorientably
    pgs = list(enumerate_decompositions(SurfaceSpec(2, 1)))
    assert len(pgs) == 2


def test_enumerate_no_decomposition():
    with pytest.raises(NoPantsDecomposition):
        list(enumerate_decompositions(SurfaceSpec(2, 0)))


def test_stream_sorted_and_stable():
    s = SurfaceSpec(4, 1)
    first = [canonical_form(pg) for pg in enumerate_decompositions(s)]
    second = [canonical_form(pg) for pg in enumerate_decompositions(s)]
    assert first == second
    assert first == sorted(first)
    assert len(set(first)) == len(first)


@pytest.mark.parametrize("g,n", [(3, 0), (4, 0), (2, 2), (1, 4), (5, 1), (3, 2)])
def test_counting_identity_and_parity(g, n):
    s = SurfaceSpec(g, n)
    for pg in enumerate_decompositions(s):
        p = pg.num_pants
        n_legs = len(pg.boundaries)
        c = len(pg.crosscaps)
        assert pg.curve_count() == (3 * p - n_legs + c) // 2
        assert (3 * p - n_legs + c) % 2 == 0
        assert c % 2 == g % 2
        assert c <= g


# -- canonical form -------------------------------------------------------


def _relabel(pg, perm, rng):
    """Random equivalent presentation: relabel + pants flips + absorptions."""
    edges = []
    cross_pants = set(pg.crosscaps)
    flips = {v: rng.random() < 0.5 for v in range(pg.num_pants)}
    for u, v, s in pg.edges:
        if u != v:
            if flips[u]:
                s = -s
            if flips[v]:
                s = -s
        if (u in cross_pants or v in cross_pants) and rng.random() < 0.5:
            s = -s
        edges.append((perm[u], perm[v], s))
    return PantsGraph(
        pg.num_pants,
        edges,
        [perm[v] for v in pg.crosscaps],
        [perm[v] for v in pg.boundaries],
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_canonical_form_invariance(seed):
    rng = random.Random(seed)
    surfaces = [(3, 0), (2, 1), (4, 0), (2, 2), (1, 4)]
    g, n = surfaces[rng.randrange(len(surfaces))]
    pgs = list(enumerate_decompositions(SurfaceSpec(g, n)))
    pg = pgs[rng.randrange(len(pgs))]
    perm = list(range(pg.num_pants))
    rng.shuffle(perm)
    scrambled = _relabel(pg, perm, rng)
    assert canonical_form(scrambled) == canonical_form(pg)


def test_canonical_forms_distinct():
    a = PantsGraph(1, [], [0, 0, 0], [])
    b = PantsGraph(1, [(0, 0, 1)], [0], [])
    assert canonical_form(a) != canonical_form(b)


def test_canonical_absorbs_self_edge_sign_at_crosscap_pants():
    plus = PantsGraph(1, [(0, 0, 1)], [0], [])
    minus = PantsGraph(1, [(0, 0, -1)], [0], [])
    assert canonical_form(plus) == canonical_form(minus)


def test_self_edge_sign_rigid_without_crosscap():
    plus = PantsGraph(1, [(0, 0, 1)], [], [0])
    minus = PantsGraph(1, [(0, 0, -1)], [], [0])
    assert canonical_form(plus) != canonical_form(minus)


def test_text_format_roundtrip():
    for pg in enumerate_decompositions(SurfaceSpec(4, 1)):
        text = pg.serialize()
        assert PantsGraph.parse(text) == pg
        assert text == "".join(sorted(text.splitlines(keepends=True)))


# -- classification and adjacency ----------------------------------------


def test_classify_crosscap_on_3_0():
    pg = PantsGraph(1, [], [0, 0, 0], [])
    cls = classify_curve(pg, CurveLabel("crosscap", 0))
    assert cls.sidedness == ONE_SIDED
    assert not cls.separating
    assert not cls.complement_orientable
    assert cls.complement_pieces == (PieceSpec(False, 2, 1),)


def test_classify_bridge_is_separating():
    # two pants joined by a bridge, decorated to realize N(2,2)
    pg = PantsGraph(2, [(0, 1, 1)], [0, 1], [0, 1])
    cls = classify_curve(pg, CurveLabel("edge", 0))
    assert cls.sidedness == TWO_SIDED
    assert cls.separating
    assert len(cls.complement_pieces) == 2


def test_classify_nonbridge_not_separating():
    pg = PantsGraph(1, [(0, 0, -1)], [], [0])
    cls = classify_curve(pg, CurveLabel("edge", 0))
    assert not cls.separating
    assert len(cls.complement_pieces) == 1


def test_bridges_separate_everywhere():
    for pg in enumerate_decompositions(SurfaceSpec(4, 1)):
        for lab in curve_labels(pg):
            cls = classify_curve(pg, lab)
            if lab.kind == "crosscap":
                assert not cls.separating
            if cls.separating:
                assert len(cls.complement_pieces) == 2
            chi_total = sum(piece.chi for piece in cls.complement_pieces)
            assert chi_total == -pg.num_pants


def test_adjacency_three_crosscaps():
    pg = PantsGraph(1, [], [0, 0, 0], [])
    rel = adjacency_graph(pg)
    assert len(rel) == 3  # all three pairwise adjacent


def test_adjacency_chain_on_1_4():
    # P = {a, z, t}: crosscap a on pants 0, bridge z between 0 and 1,
    # bridge t between 1 and 2; a adj z, z adj t, but a not adj t
    pg = PantsGraph(
        3,
        [(0, 1, 1), (1, 2, 1)],
        [0],
        [0, 1, 2, 2],
    )
    assert realized_surface(pg) == SurfaceSpec(1, 4)
    labels = curve_labels(pg)
    z = CurveLabel("edge", 0)
    t = CurveLabel("edge", 1)
    a = CurveLabel("crosscap", 0)
    rel = adjacency_graph(pg)

    def adj(x, y):
        return (x, y) in rel or (y, x) in rel

    assert adj(a, z)
    assert adj(z, t)
    assert not adj(a, t)
    assert len(labels) == 3


def test_adjacency_single_curve_empty():
    pg = PantsGraph(1, [], [0], [0, 0])
    assert adjacency_graph(pg) == set()


# -- top dimension and lemma verifiers ------------------------------------


def test_is_top_dimensional_3_0():
    pgs = {len(pg.edges): pg for pg in enumerate_decompositions(SurfaceSpec(3, 0))}
    assert is_top_dimensional(pgs[0])  # three crosscaps, dim 2
    assert not is_top_dimensional(pgs[1])  # self edge + crosscap, dim 1


def test_is_top_dimensional_4_2_tree():
    s = SurfaceSpec(4, 2)
    tops = [
        pg
        for pg in enumerate_decompositions(s)
        if len(pg.crosscaps) == 4 and is_top_dimensional(pg)
    ]
    assert tops
    for pg in tops:
        assert pg.curve_count() == 7


def test_is_top_out_of_hypothesis():
    pg = PantsGraph(1, [], [0], [0, 0])  # realizes N(1,2)
    with pytest.raises(OutOfHypothesis):
        is_top_dimensional(pg)


@pytest.mark.parametrize(
    "g,n,dims",
    [(3, 0, (1, 2)), (2, 1, (0, 1)), (5, 2, (6, 7, 8))],
)
def test_verify_lemma_2_1(g, n, dims):
    report = verify_lemma_2_1(SurfaceSpec(g, n))
    assert report.passed
    assert report.achieved_dims == dims


def test_verify_lemma_2_1_out_of_hypothesis():
    with pytest.raises(OutOfHypothesis):
        verify_lemma_2_1(SurfaceSpec(1, 4))


@pytest.mark.parametrize(
    "g,n,counts",
    [(3, 0, (3, 0)), (7, 0, (7, 4)), (2, 2, (2, 1))],
)
def test_verify_lemma_2_2(g, n, counts):
    report = verify_lemma_2_2(SurfaceSpec(g, n))
    assert report.passed
    assert report.expected_counts == counts
    assert report.top_count >= 1


def test_enumerated_dimension_set_genus_one():
    # no closed form for g = 1: the census reports what enumeration finds
    assert enumerated_dimension_set(SurfaceSpec(1, 3)) == {1}
    assert enumerated_dimension_set(SurfaceSpec(1, 4)) == {2}
