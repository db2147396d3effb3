import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvelab.errors import NoPantsDecomposition, OutOfHypothesis
from curvelab.surface_core import (
    SurfaceSpec,
    euler_characteristic,
    max_simplex_dimension_range,
    pants_count,
    top_census_counts,
)


@pytest.mark.parametrize(
    "g,n,chi",
    [(1, 0, 1), (2, 0, 0), (7, 0, -5), (1, 2, -1), (3, 4, -5)],
)
def test_euler_characteristic(g, n, chi):
    assert euler_characteristic(SurfaceSpec(g, n)) == chi


@pytest.mark.parametrize("g,n,p", [(1, 3, 2), (3, 0, 1), (1, 2, 1), (7, 0, 5)])
def test_pants_count(g, n, p):
    assert pants_count(SurfaceSpec(g, n)) == p


@pytest.mark.parametrize("g,n", [(2, 0), (1, 1), (1, 0)])
def test_pants_count_rejects_nonnegative_chi(g, n):
    with pytest.raises(NoPantsDecomposition):
        pants_count(SurfaceSpec(g, n))


@pytest.mark.parametrize(
    "g,n,lo,hi",
    [(7, 0, 7, 10), (4, 2, 4, 6), (2, 1, 0, 1), (3, 0, 1, 2), (5, 2, 6, 8)],
)
def test_dimension_range(g, n, lo, hi):
    rng = max_simplex_dimension_range(SurfaceSpec(g, n))
    assert (rng.lo, rng.hi) == (lo, hi)
    assert rng.hi - rng.lo == rng.r


@pytest.mark.parametrize("g,n", [(1, 0), (1, 5), (2, 0)])
def test_dimension_range_out_of_hypothesis(g, n):
    with pytest.raises(OutOfHypothesis):
        max_simplex_dimension_range(SurfaceSpec(g, n))


@pytest.mark.parametrize(
    "g,n,one_sided,separating",
    [(7, 0, 7, 4), (4, 2, 4, 3), (3, 0, 3, 0), (2, 2, 2, 1)],
)
def test_top_census_counts(g, n, one_sided, separating):
    assert top_census_counts(SurfaceSpec(g, n)) == (one_sided, separating)


@pytest.mark.parametrize("g,n", [(2, 1), (1, 4), (2, 0), (3, 1)])
def test_top_census_out_of_hypothesis(g, n):
    s = SurfaceSpec(g, n)
    if (g, n) == (3, 1):
        assert top_census_counts(s) == (3, 1)
        return
    with pytest.raises(OutOfHypothesis):
        top_census_counts(s)


def test_invalid_surface_specs():
    with pytest.raises(ValueError):
        SurfaceSpec(0, 3)
    with pytest.raises(ValueError):
        SurfaceSpec(2, -1)


@given(st.integers(2, 40), st.integers(0, 40))
def test_range_width_and_census_sum(g, n):
    if (g, n) == (2, 0):
        return
    s = SurfaceSpec(g, n)
    rng = max_simplex_dimension_range(s)
    assert rng.hi - rng.lo == g // 2
    if (g, n) == (3, 0) or g + n >= 4:
        one_sided, separating = top_census_counts(s)
        assert one_sided + separating - 1 == rng.hi


@given(st.integers(1, 40), st.integers(0, 40))
def test_chi_additivity(g, n):
    s = SurfaceSpec(g, n)
    if s.chi <= -1:
        assert euler_characteristic(s) == -pants_count(s)
    else:
        with pytest.raises(NoPantsDecomposition):
            pants_count(s)
