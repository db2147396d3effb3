import pytest

from curvelab.curve_engine.classes import enumerate_curve_classes
from curvelab.curve_engine.intersection import (
    geometric_intersection,
    intersection_number,
)
from curvelab.curve_engine.normal import NormalCurve, ONE_SIDED, sidedness
from curvelab.curve_engine.triangulation import model_surface
from curvelab.errors import NotEssential
from curvelab.surface_core import SurfaceSpec


def klein():
    return model_surface(2, 0), enumerate_curve_classes(SurfaceSpec(2, 0), 12)


def test_klein_table():
    tri, cl = klein()
    c1, c2, y = cl
    assert intersection_number(tri, c1, c2) == 0
    assert intersection_number(tri, c1, y) == 1
    assert intersection_number(tri, c2, y) == 1


def test_self_intersection_convention():
    tri, cl = klein()
    for c in cl:
        expected = 1 if sidedness(tri, c) == ONE_SIDED else 0
        assert intersection_number(tri, c, c) == expected
    # convention also applies to non-canonical representatives of one class
    wound = NormalCurve("N2.0", (2, 1, 1))
    assert intersection_number(tri, wound, cl[0]) == 1


def test_symmetry():
    tri = model_surface(2, 2)
    cl = enumerate_curve_classes(SurfaceSpec(2, 2), 10)
    for i in range(len(cl)):
        for j in range(i + 1, len(cl)):
            assert intersection_number(tri, cl[i], cl[j]) == intersection_number(
                tri, cl[j], cl[i]
            )


def test_rejects_inessential():
    tri = model_surface(2, 0)
    sep = NormalCurve("N2.0", (0, 2, 2))
    core = NormalCurve("N2.0", (0, 1, 1))
    with pytest.raises(NotEssential):
        intersection_number(tri, sep, core)


def test_pants_partners_are_disjoint():
    # curves of one decomposition realize intersection zero concretely
    from curvelab.rigidity_lab.complexes import build_complex

    cc = build_complex(SurfaceSpec(2, 2), 10)
    for simplex in cc.true_simplices:
        for a in simplex.vertices:
            for b in simplex.vertices:
                if a < b:
                    assert cc.inter(a, b) == 0


def test_regression_same_arc_bigon():
    # both crossings of this pair sit on a single arc; the reduction must
    # walk the wrap-around corridor to remove them
    tri = model_surface(2, 1)
    a = NormalCurve("N2.1", (0, 1, 1, 0, 0))
    b = NormalCurve("N2.1", (1, 2, 1, 1, 0))
    assert intersection_number(tri, a, b) == 0


def test_overlay_parity_is_stable():
    # the reduced count has the parity of any transverse position
    tri = model_surface(1, 4)
    cl = enumerate_curve_classes(SurfaceSpec(1, 4), 9)
    for i in range(len(cl)):
        for j in range(i + 1, len(cl)):
            ov = geometric_intersection(tri, cl[i].weights, cl[j].weights)
            raw = geometric_intersection(tri, cl[i].weights, cl[j].weights)
            assert ov.count() == raw.count()
            assert ov.count() >= 0


def test_fixture_pair_nonzero():
    # a one-sided curve and a curve swapping into its decomposition meet
    from curvelab.rigidity_lab.fixtures import load_fixture

    fx = load_fixture("Fig3i")
    cc = fx.complex_
    x, t = fx.curves["x"], fx.curves["t"]
    assert cc.inter(x, t) != 0
