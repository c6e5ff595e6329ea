from fractions import Fraction

import numpy as np
import pytest

from src.utils import (
    determinant, integer_matrix, poincare_polynomial, format_polynomial, quotient_by_rows,
    rank_over_q, smith_normal_form,
)
from src.utils.errors import TorsionDetected


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def test_snf_diagonal():
    assert smith_normal_form([[2, 0], [0, 4]]).diagonal == [2, 4]
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == [2, 4]


def test_snf_transforms(rng):
    for _ in range(10):
        A = integer_matrix(rng.integers(-5, 6, size=(3, 4)).tolist())
        snf = smith_normal_form(A)
        assert (snf.U.dot(A).dot(snf.V) == snf.D).all()
        factors = snf.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@pytest.mark.parametrize("seed", range(3))
def test_snf_of_large_matrices(seed):
    rng = np.random.default_rng(seed)
    A = integer_matrix(rng.integers(-50, 51, size=(30, 30)).tolist())
    snf = smith_normal_form(A)
    assert (snf.U.dot(A).dot(snf.V) == snf.D).all()
    factors = snf.invariant_factors
    assert all(a > 0 for a in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    assert snf.rank == rank_over_q(A.tolist())


def test_snf_empty_matrix():
    snf = smith_normal_form(np.zeros((0, 3), dtype=object))
    assert snf.rank == 0


def test_determinant_and_rank():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([]) == 1
    rows = [[Fraction(1, 2), Fraction(1)], [Fraction(1), Fraction(2)]]
    assert rank_over_q(rows) == 1


def test_quotient_unit_pivots():
    # Z^3 / (e1 - e3): basis e1, e2 after pivoting on the last column
    quotient = quotient_by_rows([[1, 0, -1]], 3)
    assert quotient.monomial_basis
    assert quotient.coordinates([0, 0, 1]) == (1, 0)


def test_quotient_torsion():
    with pytest.raises(TorsionDetected):
        quotient_by_rows([[2, 2]], 2)


def test_formatting():
    assert format_polynomial([(2, "x2^2"), (-4, "x1*x2")]) == "2*x2^2 - 4*x1*x2"
    assert format_polynomial([(0, "x")]) == "0"
    assert poincare_polynomial([1, 1, 0, 1]) == "1 + t + t^3"
