import numpy as np
import pytest

from src.polytope import (
    build_polytope, cube, default_ordering, faces_of_dim, h_vector, order_vertices, orient_edges,
    point, prism, product, simplex, square, vertex_indices,
)
from src.utils.errors import DegenerateFunctional, DimensionMismatch, DuplicateVertex, InvalidOrdering, NotSimple


@pytest.fixture
def sq():
    return square()


def test_h_vectors():
    assert str(h_vector(square(), default_ordering(square()))) == "1 2 1"
    assert str(h_vector(prism(), default_ordering(prism()))) == "1 2 2 1"
    assert h_vector(cube(3), default_ordering(cube(3))).h == (1, 3, 3, 1)
    assert h_vector(simplex(3), default_ordering(simplex(3))).h == (1, 1, 1, 1)
    assert h_vector(point(), default_ordering(point())).h == (1,)


def generic_orderings(P, count, seed=0):
    """Orderings from random integer functionals in [-50, 50], skipping degenerate ones."""
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        try:
            found.append(orient_edges(P, [int(x) for x in rng.integers(-50, 51, size=P.dim)]))
        except DegenerateFunctional:
            continue
    return found


@pytest.mark.parametrize("P, h", [
    (square(), (1, 2, 1)),
    (prism(), (1, 2, 2, 1)),
    (cube(3), (1, 3, 3, 1)),
    (cube(4), (1, 4, 6, 4, 1)),
    (simplex(3), (1, 1, 1, 1)),
    (product(square(), simplex(1)), (1, 3, 3, 1)),
])
def test_h_vector_independent_of_functional(P, h):
    for ordering in generic_orderings(P, 20):
        assert h_vector(P, ordering).h == h


def test_vertex_indices(sq):
    ordering = orient_edges(sq, [1, 2])
    assert ordering.order == ("v00", "v10", "v01", "v11")
    assert vertex_indices(sq, ordering) == {"v00": 0, "v10": 1, "v01": 1, "v11": 2}


def test_degenerate_functional(sq):
    with pytest.raises(DegenerateFunctional):
        orient_edges(sq, [1, 0])
    with pytest.raises(DimensionMismatch):
        orient_edges(sq, [1, 2, 3])


def test_abstract_order(sq):
    assert h_vector(sq, order_vertices(sq, ["v11", "v10", "v01", "v00"])).h == (1, 2, 1)
    with pytest.raises(InvalidOrdering):
        order_vertices(sq, ["v00", "v11", "v10", "v01"])
    with pytest.raises(InvalidOrdering):
        order_vertices(sq, ["v00", "v10"])


def test_faces(sq):
    assert len(faces_of_dim(sq, 0)) == 4
    assert len(faces_of_dim(sq, 1)) == 4
    assert len(faces_of_dim(cube(3), 1)) == 12
    assert faces_of_dim(sq, 2) == [frozenset()]


def test_product_of_intervals():
    P = product(simplex(1), simplex(1))
    assert len(P.vertices) == 4
    assert P.facets == ("F1_1", "F2_1", "F1_2", "F2_2")
    assert h_vector(P, default_ordering(P)).h == (1, 2, 1)


def test_invalid_tables():
    with pytest.raises(NotSimple):
        build_polytope({"a": ["F1"], "b": ["F1", "F2"]}, 2)
    with pytest.raises(DuplicateVertex):
        build_polytope({"a": ["F1", "F2"], "b": ["F2", "F1"]}, 2)
    with pytest.raises(NotSimple):
        build_polytope({}, 1)
