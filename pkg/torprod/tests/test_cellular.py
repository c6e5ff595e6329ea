import pytest

from src.cellular import (
    AbelianGroup, build_complex, closed_form_check, cohomology, dump_matrices, homology, rp_homology,
)
from src.charfunc import hirzebruch_char, simplex_char
from src.polytope import default_ordering, point, product, simplex, square
from src.utils.errors import DimensionMismatch


def groups(m, P, twisted=False):
    return [str(g) for g in homology(build_complex(m, P, default_ordering(P), twisted=twisted))]


@pytest.mark.parametrize("m", range(1, 7))
def test_real_projective_spaces(m):
    assert groups(m, point()) == [str(g) for g in rp_homology(m)]


def test_rp2_and_rp3():
    assert groups(2, point()) == ["Z", "Z/2", "0"]
    assert groups(3, point()) == ["Z", "Z/2", "0", "Z"]


FIBRES = {
    "CP1": simplex(1),
    "CP2": simplex(2),
    "CP1xCP1": product(simplex(1), simplex(1)),
    "square": square(),
}


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("name", sorted(FIBRES))
@pytest.mark.parametrize("twisted", [False, True])
def test_vertex_shift_prediction(m, name, twisted):
    P = FIBRES[name]
    report = closed_form_check(m, P, default_ordering(P), twisted=twisted)
    assert report.agree
    assert all(t == 2 for g in report.computed for t in g.torsion)


def test_dold_manifold_twisted():
    assert groups(1, simplex(1)) == ["Z", "Z", "Z", "Z"]
    assert groups(1, simplex(1), twisted=True) == ["Z", "Z", "Z/2", "0"]


def test_cohomology_by_universal_coefficients():
    C = build_complex(2, point(), default_ordering(point()))
    assert [str(g) for g in cohomology(C)] == ["Z", "0", "Z/2"]


def test_euler_of_complex():
    P = simplex(2)
    assert build_complex(2, P, default_ordering(P)).euler() == 3
    assert build_complex(3, square(), default_ordering(square())).euler() == 0


def test_dump_matrices():
    C = build_complex(2, point(), default_ordering(point()))
    assert dump_matrices(C) == {0: [], 1: [], 2: [(0, 0, 2)]}


def test_group_strings():
    assert str(AbelianGroup()) == "0"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup(2, (2, 2))) == "Z^2 + (Z/2)^2"
    assert str(AbelianGroup(0, (2,)) + AbelianGroup(1)) == "Z + Z/2"


def test_negative_sphere():
    with pytest.raises(DimensionMismatch):
        build_complex(-1, point(), default_ordering(point()))
