import numpy as np
import pytest

from src.charfunc import Ring, connected_sum_char, hirzebruch_char, prism_char, simplex_char
from src.polytope import prism, simplex, square
from src.rings import (
    first_pontryagin, multiply, present_cohomology, stanley_reisner_generators, total_stiefel_whitney,
)
from src.utils.errors import WrongRing


@pytest.mark.parametrize("P, char, ranks", [
    (simplex(1), simplex_char(1), [1, 0, 1]),
    (simplex(2), simplex_char(2), [1, 0, 1, 0, 1]),
    (square(), hirzebruch_char(0), [1, 0, 2, 0, 1]),
    (square(), hirzebruch_char(1), [1, 0, 2, 0, 1]),
    (square(), hirzebruch_char(2), [1, 0, 2, 0, 1]),
    (prism(), prism_char(), [1, 0, 2, 0, 2, 0, 1]),
])
def test_ranks_follow_h_vector(P, char, ranks):
    presentation = present_cohomology(P, char)
    assert presentation.ranks() == ranks
    assert sum(presentation.ranks()) == len(P.vertices)


def test_mod2_presentation_of_small_cover():
    presentation = present_cohomology(simplex(2), simplex_char(2, Ring.F2))
    assert presentation.weight == 1
    assert presentation.ranks() == [1, 1, 1]


def test_integral_function_read_mod2():
    presentation = present_cohomology(square(), hirzebruch_char(1), coefficients=Ring.F2)
    assert presentation.weight == 2
    assert presentation.ranks() == [1, 0, 2, 0, 1]


def test_no_integral_presentation_of_mod2_function():
    with pytest.raises(WrongRing):
        present_cohomology(simplex(2), simplex_char(2, Ring.F2), coefficients=Ring.Z)


def test_cp2_generator_square_is_nonzero():
    presentation = present_cohomology(simplex(2), simplex_char(2))
    u = presentation.generator(0)
    assert not multiply(u, u).is_zero
    assert multiply(presentation.one(), u) == u


@pytest.mark.parametrize("r", range(-3, 4))
def test_hirzebruch_p1_vanishes(r):
    p1 = first_pontryagin(square(), hirzebruch_char(r), variable="x")
    assert p1.is_zero
    assert p1.format() == "0 (zero)"


def test_connected_sum_p1():
    p1 = first_pontryagin(square(), connected_sum_char(), variable="x")
    assert not p1.is_zero
    assert p1.format() == "6*x1*x2 (nonzero)"


def test_p1_needs_integral_function():
    with pytest.raises(WrongRing):
        first_pontryagin(simplex(2), simplex_char(2, Ring.F2))


def test_stiefel_whitney_of_fibres():
    assert total_stiefel_whitney(square(), hirzebruch_char(0)).is_one
    assert total_stiefel_whitney(square(), hirzebruch_char(2)).is_one
    assert not total_stiefel_whitney(square(), hirzebruch_char(1)).is_one
    assert not total_stiefel_whitney(simplex(2), simplex_char(2)).is_one
    assert total_stiefel_whitney(simplex(1), simplex_char(1)).is_one


@pytest.mark.parametrize("P, generators", [
    (square(), [("F1", "F3"), ("F2", "F4")]),
    (simplex(2), [("F1", "F2", "F3")]),
    (prism(), [("F4", "F5"), ("F1", "F2", "F3")]),
])
def test_minimal_non_faces(P, generators):
    assert stanley_reisner_generators(P) == generators


RING_FIBRES = [
    (square(), hirzebruch_char(1)),
    (square(), connected_sum_char()),
    (prism(), prism_char()),
    (simplex(3), simplex_char(3)),
]


def random_classes(presentation, count, rng):
    """Integer combinations of the degree-2 generators with coefficients in [-3, 3]."""
    generators = [presentation.generator(i) for i in range(presentation.polytope.num_facets)]
    found = []
    for _ in range(count):
        total = presentation.zero(presentation.weight)
        for u, c in zip(generators, rng.integers(-3, 4, size=len(generators))):
            total = total + u.scale(int(c))
        found.append(total)
    return found


@pytest.mark.parametrize("P, char", RING_FIBRES)
def test_products_are_associative_and_commutative(P, char):
    presentation = present_cohomology(P, char)
    rng = np.random.default_rng(0)
    triples = zip(*(random_classes(presentation, 200, rng) for _ in range(3)))
    for a, b, c in triples:
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, b) == multiply(b, a)


@pytest.mark.parametrize("P, char", RING_FIBRES)
def test_normal_form_is_idempotent(P, char):
    presentation = present_cohomology(P, char)
    rng = np.random.default_rng(1)
    left, right = random_classes(presentation, 50, rng), random_classes(presentation, 50, rng)
    for a, b in zip(left, right):
        for x in (a, multiply(a, b)):
            assert presentation.reduce(presentation.representative(x), x.degree) == x


@pytest.mark.parametrize("P, char", RING_FIBRES + [(square(), hirzebruch_char(2)), (simplex(2), simplex_char(2))])
def test_p1_vanishing_does_not_depend_on_pivot(P, char):
    verdicts = {first_pontryagin(P, char, pivot_vertex=v).is_zero for v in P.vertices}
    assert len(verdicts) == 1


def test_connected_sum_p1_at_every_pivot():
    P = square()
    for v in P.vertices:
        p1 = first_pontryagin(P, connected_sum_char(), pivot_vertex=v)
        assert not p1.is_zero
        assert all(c % 6 == 0 for c in p1.value.coords)
