import pytest

from curvelab.curve_engine.classes import enumerate_curve_classes
from curvelab.curve_engine.cutting import cut_along
from curvelab.curve_engine.intersection import intersection_number
from curvelab.curve_engine.mapping import (
    apply_generator,
    automorphism_generators,
    boundary_permutation,
    crosscap_slide,
    dehn_twist,
    model_automorphisms,
)
from curvelab.curve_engine.normal import NormalCurve, ONE_SIDED, TWO_SIDED, sidedness
from curvelab.curve_engine.triangulation import model_surface
from curvelab.errors import IncompatibleSupport
from curvelab.surface_core import SurfaceSpec


def two_sided_classes(tri, s, bound):
    return [
        c
        for c in enumerate_curve_classes(s, bound)
        if sidedness(tri, c) == TWO_SIDED
    ]


def test_twist_fixes_disjoint_curves():
    tri = model_surface(2, 2)
    s = SurfaceSpec(2, 2)
    cl = enumerate_curve_classes(s, 8)
    t = two_sided_classes(tri, s, 8)[0]
    gen = dehn_twist(tri, t, 1)
    for c in cl:
        if intersection_number(tri, t, c) == 0:
            assert apply_generator(tri, gen, c) == c


@pytest.mark.parametrize("g,n,bound", [(2, 1, 8), (2, 2, 8), (1, 4, 9), (3, 1, 7)])
def test_twist_inverse_pairs(g, n, bound):
    tri = model_surface(g, n)
    s = SurfaceSpec(g, n)
    cl = enumerate_curve_classes(s, bound)
    for t in two_sided_classes(tri, s, bound)[:2]:
        plus = dehn_twist(tri, t, 1)
        minus = dehn_twist(tri, t, -1)
        for c in cl:
            img = apply_generator(tri, plus, c)
            assert apply_generator(tri, minus, img) == c


def test_twist_preserves_classification_and_intersections():
    tri = model_surface(2, 2)
    s = SurfaceSpec(2, 2)
    cl = enumerate_curve_classes(s, 8)
    t = two_sided_classes(tri, s, 8)[0]
    gen = dehn_twist(tri, t, 1)
    imgs = {c: apply_generator(tri, gen, c) for c in cl}
    for c in cl:
        assert sidedness(tri, imgs[c]) == sidedness(tri, c)
        assert len(cut_along(tri, imgs[c])) == len(cut_along(tri, c))
    for i, a in enumerate(cl):
        for b in cl[i:]:
            assert intersection_number(tri, imgs[a], imgs[b]) == intersection_number(
                tri, a, b
            )


def test_twist_iterates_grow_linearly():
    tri = model_surface(2, 1)
    s = SurfaceSpec(2, 1)
    cl = enumerate_curve_classes(s, 8)
    t = two_sided_classes(tri, s, 8)[0]
    gen = dehn_twist(tri, t, 1)
    cur = next(c for c in cl if intersection_number(tri, t, c) > 0)
    totals = [cur.total()]
    for _ in range(10):
        cur = apply_generator(tri, gen, cur)
        totals.append(cur.total())
    diffs = {totals[k + 1] - totals[k] for k in range(5, 10)}
    assert len(diffs) == 1  # eventually linear growth


def test_twist_requires_two_sided_and_bordered():
    tri = model_surface(2, 2)
    s = SurfaceSpec(2, 2)
    one_sided = [
        c for c in enumerate_curve_classes(s, 8) if sidedness(tri, c) == ONE_SIDED
    ][0]
    with pytest.raises(IncompatibleSupport):
        dehn_twist(tri, one_sided, 1)
    klein = model_surface(2, 0)
    y = enumerate_curve_classes(SurfaceSpec(2, 0), 12)[2]
    with pytest.raises(IncompatibleSupport):
        dehn_twist(klein, y, 1)


def test_klein_automorphism_swaps_cores():
    tri = model_surface(2, 0)
    c1, c2, y = enumerate_curve_classes(SurfaceSpec(2, 0), 12)
    swaps = []
    for gen in automorphism_generators(tri):
        imgs = (
            apply_generator(tri, gen, c1),
            apply_generator(tri, gen, c2),
            apply_generator(tri, gen, y),
        )
        if imgs == (c2, c1, y):
            swaps.append(gen)
    assert swaps


def test_automorphism_preserves_intersections():
    tri = model_surface(2, 0)
    cl = enumerate_curve_classes(SurfaceSpec(2, 0), 12)
    for gen in automorphism_generators(tri):
        imgs = {c: apply_generator(tri, gen, c) for c in cl}
        for i, a in enumerate(cl):
            for b in cl[i:]:
                assert intersection_number(tri, imgs[a], imgs[b]) == intersection_number(tri, a, b)


def test_crosscap_slide_unsupported():
    tri = model_surface(2, 1)
    cl = enumerate_curve_classes(SurfaceSpec(2, 1), 8)
    with pytest.raises(IncompatibleSupport):
        crosscap_slide(tri, cl[0], cl[2])


def test_boundary_permutation_identity_exists():
    tri = model_surface(2, 2)
    gen = boundary_permutation(tri, (0, 1))
    cl = enumerate_curve_classes(SurfaceSpec(2, 2), 8)
    assert all(apply_generator(tri, gen, c) == c for c in cl)


def test_boundary_permutation_unavailable_swap():
    # the fan models are rigid: no symmetry exchanges the two cuffs
    tri = model_surface(2, 2)
    with pytest.raises(IncompatibleSupport):
        boundary_permutation(tri, (1, 0))
