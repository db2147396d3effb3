import itertools

import pytest

from curvelab.curve_engine.classes import enumerate_curve_classes
from curvelab.curve_engine.normal import (
    NormalCurve,
    ONE_SIDED,
    TWO_SIDED,
    canonical_weights,
    enumerate_weight_vectors,
    sidedness,
    trace,
    validate_normal,
    validate_weights,
)
from curvelab.curve_engine.triangulation import model_surface
from curvelab.errors import NotConnected, WrongTriangulation
from curvelab.surface_core import SurfaceSpec


def test_validate_rejects_zero_and_bad_parity():
    tri = model_surface(1, 1)
    assert not validate_weights(tri, (0, 0, 0, 0))
    assert not validate_weights(tri, (1, 0, 0, 0))  # odd triangle sum
    assert not validate_weights(tri, (1, 1, 1, 0))  # boundary weight
    assert validate_weights(tri, (1, 1, 0, 0))


def test_validate_normal_needs_one_component():
    tri = model_surface(1, 1)
    assert validate_normal(tri, NormalCurve("N1.1", (1, 1, 0, 0)))
    # doubled core is a two-component multicurve? no: it traces to one
    # boundary-parallel curve; the triple splits off the core
    assert not validate_normal(tri, NormalCurve("N1.1", (3, 3, 0, 0)))


def test_validate_normal_wrong_reference():
    tri = model_surface(1, 1)
    with pytest.raises(WrongTriangulation):
        validate_normal(tri, NormalCurve("N2.1", (1, 1, 0, 0, 0)))


def test_moebius_core_one_sided():
    tri = model_surface(1, 1)
    assert sidedness(tri, NormalCurve("N1.1", (1, 1, 0, 0))) == ONE_SIDED
    assert sidedness(tri, NormalCurve("N1.1", (2, 2, 0, 0))) == TWO_SIDED


def test_sidedness_needs_single_component():
    tri = model_surface(1, 1)
    with pytest.raises(NotConnected):
        sidedness(tri, NormalCurve("N1.1", (3, 3, 0, 0)))


def test_trace_components_and_parallel_copies():
    tri = model_surface(2, 1)
    classes = enumerate_curve_classes(SurfaceSpec(2, 1), 6)
    one = classes[0]
    assert len(trace(tri, one.weights)) == 1
    doubled = tuple(2 * w for w in one.weights)
    comps = trace(tri, doubled)
    assert len(comps) == 2


def test_klein_windings_merge():
    tri = model_surface(2, 0)
    # windings of the crosscap cores around the interior vertex
    assert canonical_weights(tri, (2, 1, 1)) == (0, 1, 1)
    assert canonical_weights(tri, (1, 2, 1)) == (1, 0, 1)
    assert canonical_weights(tri, (2, 3, 1)) == (1, 0, 1)
    assert canonical_weights(tri, (3, 2, 1)) == (0, 1, 1)
    # the two separating doubles are isotopic
    assert canonical_weights(tri, (2, 0, 2)) == canonical_weights(tri, (0, 2, 2))
    # distinct classes stay distinct
    keys = {canonical_weights(tri, w) for w in [(0, 1, 1), (1, 0, 1), (1, 1, 0)]}
    assert len(keys) == 3


def test_klein_census_exhaustive():
    tri = model_surface(2, 0)
    classes = {}
    for w in itertools.product(range(13), repeat=3):
        if sum(w) == 0 or sum(w) > 12 or not validate_weights(tri, w):
            continue
        if len(trace(tri, w)) != 1:
            continue
        classes.setdefault(canonical_weights(tri, w), []).append(w)
    # every vector of weight <= 12 lands in one of five families
    assert set(classes) == {
        (0, 1, 1), (1, 0, 1), (1, 1, 0), (0, 2, 2), (2, 2, 2),
    }


def test_canonical_idempotent():
    for g, n in [(2, 0), (3, 0), (2, 1)]:
        tri = model_surface(g, n)
        for c in enumerate_curve_classes(SurfaceSpec(g, n), 8):
            assert canonical_weights(tri, c.weights) == c.weights


@pytest.mark.parametrize(
    "g,n,bound,count",
    [(1, 1, 12, 1), (1, 1, 16, 1), (2, 0, 12, 3), (2, 0, 16, 3)],
)
def test_small_census_stability(g, n, bound, count):
    assert len(enumerate_curve_classes(SurfaceSpec(g, n), bound)) == count


def test_enumeration_growth_on_n1_2():
    small = enumerate_curve_classes(SurfaceSpec(1, 2), 8)
    large = enumerate_curve_classes(SurfaceSpec(1, 2), 14)
    assert len(small) >= 2
    assert len(large) > len(small)
    assert set(c.weights for c in small) <= set(c.weights for c in large)


def test_enumeration_deterministic_and_duplicate_free():
    a = enumerate_curve_classes(SurfaceSpec(2, 2), 10)
    b = enumerate_curve_classes(SurfaceSpec(2, 2), 10)
    assert a == b
    assert len({c.weights for c in a}) == len(a)
    assert a == sorted(a, key=lambda c: (c.total(), c.weights))


def test_weight_vector_enumerator_matches_bruteforce():
    tri = model_surface(2, 1)
    for total in range(1, 6):
        fast = set(enumerate_weight_vectors(tri, total))
        slow = {
            w
            for w in itertools.product(range(total + 1), repeat=tri.num_edges)
            if sum(w) == total and validate_weights(tri, w)
        }
        assert fast == slow
