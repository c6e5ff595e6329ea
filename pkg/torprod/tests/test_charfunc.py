import pytest

from src.charfunc import (
    Ring, connected_sum_char, hirzebruch_char, linear_ideal_rows, make_char, prism_char, require_valid,
    simplex_char, validate_char,
)
from src.polytope import prism, simplex, square
from src.utils.errors import DimensionMismatch, InvalidCharFunction


@pytest.mark.parametrize("r", range(-3, 4))
def test_hirzebruch_valid(r):
    assert validate_char(square(), hirzebruch_char(r)).ok


def test_named_functions_valid():
    assert validate_char(square(), connected_sum_char()).ok
    assert validate_char(prism(), prism_char()).ok
    for n in (1, 2, 3):
        assert validate_char(simplex(n), simplex_char(n)).ok
        assert validate_char(simplex(n), simplex_char(n, Ring.F2)).ok


def test_singular_function():
    char = make_char({"F1": [1, 0], "F2": [0, 1], "F3": [2, 1], "F4": [0, 1]})
    report = validate_char(square(), char)
    assert not report.ok
    assert report.offending == (("v11", -2), ("v01", 2))
    with pytest.raises(InvalidCharFunction):
        require_valid(square(), char)


def test_mod2_reduction():
    char = hirzebruch_char(2).reduce_mod2()
    assert char.ring is Ring.F2
    assert char.vector("F3") == (1, 0)
    assert validate_char(square(), char).ok


def test_linear_ideal():
    rows = linear_ideal_rows(square(), hirzebruch_char(3))
    assert [row.coefficients for row in rows] == [(1, 0, 1, 0), (0, 1, 3, 1)]
    assert rows[1].format(["u1", "u2", "u3", "u4"]) == "u2 + 3*u3 + u4"


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        make_char({"F1": [1, 0], "F2": [1]})
    with pytest.raises(DimensionMismatch):
        validate_char(square(), make_char({"F1": [1, 0], "F2": [0, 1], "F3": [1, 1]}))
