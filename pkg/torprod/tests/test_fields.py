from fractions import Fraction

import numpy as np
import pytest

from src.fields import (
    Octonion, Quaternion, extend_by_sphere_fibre, extend_by_cp1_fibre, check_point, cp1_fibre_fields, field_matrix,
    linear_sphere_fields, random_point, sp_constructed, sphere_fibre_fields, sphere_point, verify_family,
)
from src.utils.errors import BadP, EmptyBase
from src.utils.linalg import rank_over_q


def test_constructed_counts():
    assert [sp_constructed(m) for m in (1, 2, 3, 5, 7, 15)] == [1, 0, 3, 1, 7, 7]
    assert linear_sphere_fields(4).count == 0


def test_circle_field():
    x1, x2 = Fraction(3, 5), Fraction(4, 5)
    (field,) = linear_sphere_fields(1).fields
    assert field(((x1, x2),)) == ((-x2, x1),)


def test_quaternion_units():
    i, j, k = (Quaternion([0, 1, 0, 0]), Quaternion([0, 0, 1, 0]), Quaternion([0, 0, 0, 1]))
    assert (i * j).data == k.data
    assert (j * i).data == tuple(-x for x in k.data)


def test_octonion_norm_is_multiplicative():
    rng = np.random.default_rng(3)
    a = Octonion([int(x) for x in rng.integers(-4, 5, size=8)])
    b = Octonion([int(x) for x in rng.integers(-4, 5, size=8)])
    norm = lambda o: sum(x * x for x in o.data)
    assert norm(a * b) == norm(a) * norm(b)


def test_sphere_points_are_exact():
    rng = np.random.default_rng(0)
    for _ in range(20):
        (x,) = random_point((5,), rng)
        assert sum(c * c for c in x) == 1
    assert sphere_point([0, 0]) == (0, 0, -1)


@pytest.mark.parametrize("m", [1, 3, 5, 7, 11, 15])
def test_linear_fields_verify(m):
    family = linear_sphere_fields(m)
    assert family.count == sp_constructed(m)
    assert verify_family(family, trials=25, seed=m).ok


def test_sphere_fibre_construction():
    family = extend_by_sphere_fibre(3, 5, 3)
    assert family.count == 5
    assert family.provenance == "sphere-fibre extension"
    report = verify_family(family, trials=100, seed=0)
    assert report.ok
    assert report.checked == 100


def test_cp1_fibre_construction():
    family = extend_by_cp1_fibre(linear_sphere_fields(3))
    assert family.count == 4
    assert family.factors == (3, 2)
    assert verify_family(family, trials=100, seed=0).ok


def test_cp1_fibre_over_the_circle():
    family = extend_by_cp1_fibre(linear_sphere_fields(1))
    assert family.count == 2
    assert verify_family(family, trials=100, seed=0).ok


def test_iterated_cp1_fibres():
    family = cp1_fibre_fields((3,), (1, 1))
    assert family.count == 5
    assert family.provenance == "CP1-fibre extension (iterated)"
    assert verify_family(family, trials=100, seed=0).ok


@pytest.mark.parametrize("seed", range(1, 6))
def test_extensions_verify_across_seeds(seed):
    assert verify_family(extend_by_sphere_fibre(3, 5, 3), trials=100, seed=seed).ok
    assert verify_family(extend_by_cp1_fibre(linear_sphere_fields(3)), trials=100, seed=seed).ok


def test_corrupted_field_fails_independence():
    point = ((1, 0, 0, 0), (0, 0, 0, 0, 0, 1))
    good = verify_family(extend_by_sphere_fibre(3, 5, 3), trials=0, points=[point])
    assert good.ok
    bad = verify_family(extend_by_sphere_fibre(3, 5, 3, corrupted=True), trials=0, points=[point])
    assert not bad.ok
    assert [c.check for c in bad.counterexamples] == ["independence"]
    assert bad.counterexamples[0].trial == 0


def test_rank_is_scale_invariant():
    family = linear_sphere_fields(7)
    x = sphere_point([1, 2, 0, -1, 3, 1, 2])
    scaled = (tuple(3 * c for c in x),)
    assert rank_over_q(field_matrix(family, (x,))) == 7
    assert rank_over_q(field_matrix(family, scaled)) == 7


def test_unit_sphere_check():
    family = linear_sphere_fields(1)
    found = check_point(family, ((Fraction(1), Fraction(1)),), trial=4)
    assert [c.check for c in found] == ["unit sphere"]


def test_workers_do_not_change_the_report():
    family = extend_by_sphere_fibre(3, 5, 3)
    one = verify_family(family, trials=30, seed=7, workers=1)
    two = verify_family(family, trials=30, seed=7, workers=2)
    assert one.as_dict() == two.as_dict()


def test_iterated_sphere_fibres():
    family = sphere_fibre_fields((3,), [(5, 3), (5, 2)])
    assert family.count == 6
    assert family.provenance == "sphere-fibre extension (iterated)"
    assert verify_family(family, trials=20, seed=1).ok


def test_construction_errors():
    with pytest.raises(EmptyBase):
        extend_by_sphere_fibre(2, 5, 3)
    with pytest.raises(BadP):
        extend_by_sphere_fibre(3, 5, 0)
    with pytest.raises(BadP):
        extend_by_sphere_fibre(3, 5, 6)
