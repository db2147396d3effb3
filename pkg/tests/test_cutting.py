import pytest

from curvelab.curve_engine.classes import enumerate_curve_classes
from curvelab.curve_engine.cutting import CutStructure, cut_along, is_essential
from curvelab.curve_engine.normal import (
    NormalCurve,
    ONE_SIDED,
    enumerate_weight_vectors,
    sidedness,
    trace,
)
from curvelab.curve_engine.triangulation import model_surface
from curvelab.errors import NotConnected
from curvelab.surface_core import PieceSpec, SurfaceSpec


def test_moebius_core_cut_and_essential():
    tri = model_surface(1, 1)
    core = NormalCurve("N1.1", (1, 1, 0, 0))
    assert cut_along(tri, core) == [PieceSpec(True, 0, 2)]
    assert is_essential(tri, core)


def test_moebius_double_bounds_and_parallel():
    tri = model_surface(1, 1)
    dbl = NormalCurve("N1.1", (2, 2, 0, 0))
    assert sorted(map(str, cut_along(tri, dbl))) == ["N1.1", "S0.2"]
    assert not is_essential(tri, dbl)


def test_klein_cuts():
    tri = model_surface(2, 0)
    # one-sided core: complement is a Moebius band, still essential
    core = NormalCurve("N2.0", (0, 1, 1))
    assert cut_along(tri, core) == [PieceSpec(False, 1, 1)]
    assert is_essential(tri, core)
    # two-sided nonseparating: complement is an annulus
    y = NormalCurve("N2.0", (1, 1, 0))
    assert cut_along(tri, y) == [PieceSpec(True, 0, 2)]
    assert is_essential(tri, y)
    # separating curve bounds a Moebius band on each side
    sep = NormalCurve("N2.0", (0, 2, 2))
    assert cut_along(tri, sep) == [PieceSpec(False, 1, 1), PieceSpec(False, 1, 1)]
    assert not is_essential(tri, sep)
    # vertex-linking curve bounds a disk
    link = NormalCurve("N2.0", (2, 2, 2))
    assert PieceSpec(True, 0, 1) in cut_along(tri, link)
    assert not is_essential(tri, link)


def test_one_sided_core_on_1_2_essential():
    tri = model_surface(1, 2)
    classes = enumerate_curve_classes(SurfaceSpec(1, 2), 8)
    core = classes[0]
    assert sidedness(tri, core) == ONE_SIDED
    pieces = cut_along(tri, core)
    assert len(pieces) == 1
    assert pieces[0].orientable
    assert pieces[0].boundary == 3
    assert is_essential(tri, core)


def test_one_sided_cut_on_3_0_matches_census():
    tri = model_surface(3, 0)
    classes = enumerate_curve_classes(SurfaceSpec(3, 0), 8)
    complements = set()
    for c in classes:
        if sidedness(tri, c) == ONE_SIDED:
            pieces = cut_along(tri, c)
            assert len(pieces) == 1
            complements.add(str(pieces[0]))
    # both complement types of a one-sided curve occur
    assert "N2.1" in complements
    assert "S1.1" in complements


def test_cut_along_needs_single_curve():
    tri = model_surface(1, 1)
    with pytest.raises(NotConnected):
        cut_along(tri, NormalCurve("N1.1", (3, 3, 0, 0)))


@pytest.mark.parametrize("g,n", [(1, 2), (2, 1), (2, 2), (3, 1), (3, 0)])
def test_chi_additivity_and_boundary_bookkeeping(g, n):
    tri = model_surface(g, n)
    s = SurfaceSpec(g, n)
    checked = 0
    for total in range(1, 7):
        for vec in enumerate_weight_vectors(tri, total):
            if len(trace(tri, vec)) != 1:
                continue
            cut = CutStructure(tri, vec)
            assert sum(p.chi for p in cut.pieces) == s.chi
            copies = cut.copies_of(0)
            curve = NormalCurve(tri.name, vec)
            expected_new = 1 if sidedness(tri, curve) == ONE_SIDED else 2
            assert len(copies) == expected_new
            total_bdry = sum(p.boundary_count for p in cut.pieces)
            assert total_bdry == n + expected_new
            checked += 1
    assert checked > 0
