import pytest

from curvelab.curve_engine.triangulation import (
    Triangulation,
    model_surface,
    parse_model_key,
)
from curvelab.errors import FormatError
from curvelab.surface_core import SurfaceSpec

MODELS = [
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 0), (2, 1), (2, 2), (2, 3),
    (3, 0), (3, 1), (3, 2),
    (4, 0), (4, 1), (5, 0), (7, 0),
]


@pytest.mark.parametrize("g,n", MODELS)
def test_model_realizes_surface(g, n):
    tri = model_surface(g, n)
    assert tri.surface_type() == SurfaceSpec(g, n)
    assert not tri.is_orientable()
    assert tri.is_connected()
    assert tri.chi() == 2 - g - n
    assert len(tri.boundary_circles()) == n


@pytest.mark.parametrize("g,n", [(1, 1), (1, 4), (2, 2), (3, 1), (4, 1)])
def test_bordered_models_have_all_vertices_on_boundary(g, n):
    tri = model_surface(g, n)
    assert tri.boundary_vertices() == set(range(tri.num_vertices))


@pytest.mark.parametrize("g,n", [(2, 0), (3, 0), (5, 0)])
def test_closed_models_have_one_vertex(g, n):
    tri = model_surface(g, n)
    assert tri.num_vertices == 1
    assert not tri.boundary_sides


@pytest.mark.parametrize("g,n", MODELS)
def test_triangles_have_three_distinct_edges(g, n):
    tri = model_surface(g, n)
    for t in range(tri.num_triangles):
        assert len({tri.side_edge[(t, i)] for i in range(3)}) == 3


@pytest.mark.parametrize("g,n", [(1, 1), (2, 1), (2, 2), (3, 0)])
def test_text_format_roundtrip(g, n):
    tri = model_surface(g, n)
    text = tri.serialize()
    back = Triangulation.parse(text, name=tri.name)
    assert back.serialize() == text
    assert back.surface_type() == tri.surface_type()


def test_parse_rejects_garbage():
    with pytest.raises(FormatError):
        Triangulation.parse("triangle 0\nglue 0.0 0.1 sideways\n")


def test_parse_model_key():
    assert parse_model_key("N2.1") == SurfaceSpec(2, 1)
    with pytest.raises(FormatError):
        parse_model_key("S2.1")
