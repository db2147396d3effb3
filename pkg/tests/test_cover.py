import pytest

from curvelab.curve_engine.classes import enumerate_curve_classes
from curvelab.curve_engine.cover import (
    double_cover,
    double_cover_oracle,
    lift_weights,
    preimage_connected,
)
from curvelab.curve_engine.intersection import intersection_number
from curvelab.curve_engine.normal import ONE_SIDED, sidedness, trace
from curvelab.curve_engine.triangulation import model_surface
from curvelab.surface_core import SurfaceSpec

SURFACES = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (2, 0), (3, 0), (4, 0), (5, 0)]


@pytest.mark.parametrize("g,n", SURFACES)
def test_cover_is_orientable_connected_double(g, n):
    tri = model_surface(g, n)
    cover = double_cover(tri)
    assert cover.total.is_orientable()
    assert cover.total.is_connected()
    assert cover.total.num_triangles == 2 * tri.num_triangles
    assert cover.total.chi() == 2 * tri.chi()
    assert len(cover.total.boundary_circles()) == 2 * len(tri.boundary_circles())


def test_deck_involution_fixed_point_free():
    tri = model_surface(2, 1)
    cover = double_cover(tri)
    deck = cover.deck_edge_map()
    assert all(deck[deck[e]] == e for e in deck)
    # no triangle is fixed: sheets swap
    for t in range(cover.total.num_triangles):
        assert (t + 1 if t % 2 == 0 else t - 1) != t


@pytest.mark.parametrize("g,n", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 0), (3, 0)])
def test_sidedness_equals_preimage_connectivity(g, n):
    tri = model_surface(g, n)
    for c in enumerate_curve_classes(SurfaceSpec(g, n), 8):
        assert preimage_connected(tri, c) == (sidedness(tri, c) == ONE_SIDED)


def test_two_sided_lift_has_two_components():
    tri = model_surface(2, 0)
    cover = double_cover(tri)
    y = enumerate_curve_classes(SurfaceSpec(2, 0), 12)[2]
    lifted = lift_weights(cover, y.weights)
    assert len(trace(cover.total, lifted)) == 2


@pytest.mark.parametrize("g,n,bound", [((1), 2, 10), ((2), 1, 8), ((1), 4, 9), ((2), 2, 8), ((3), 1, 7), ((2), 0, 12)])
def test_oracle_agrees_with_primary(g, n, bound):
    tri = model_surface(g, n)
    cl = enumerate_curve_classes(SurfaceSpec(g, n), bound)
    for i in range(len(cl)):
        for j in range(i, len(cl)):
            assert double_cover_oracle(tri, cl[i], cl[j]) == intersection_number(
                tri, cl[i], cl[j]
            )


def test_oracle_self_convention():
    tri = model_surface(2, 0)
    c1, c2, y = enumerate_curve_classes(SurfaceSpec(2, 0), 12)
    assert double_cover_oracle(tri, c1, c1) == 1  # connected preimage
    assert double_cover_oracle(tri, y, y) == 0  # two disjoint lifts
