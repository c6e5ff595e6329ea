import json

import pytest

from src.models import SpaceDescriptor, parse_descriptor
from src.polytope import default_ordering, h_vector
from src.repositories import FIXTURES, FixtureRepository, PolytopeRepository
from src.spaces import Family
from src.utils.errors import ParseError


@pytest.fixture
def polytopes():
    return PolytopeRepository()


@pytest.fixture
def fixtures():
    return FixtureRepository()


def test_named_polytopes(polytopes):
    assert len(polytopes.GetPolytopeByName("prism").vertices) == 6
    assert polytopes.GetPolytopeByName("simplex:3").dim == 3
    assert len(polytopes.GetPolytopeByName("cube:2").facets) == 4
    with pytest.raises(ParseError):
        polytopes.GetPolytopeByName("simplex")
    with pytest.raises(ParseError):
        polytopes.GetPolytopeByName("dodecahedron")


def test_named_char_functions(polytopes):
    assert polytopes.GetCharFunctionByName("hirzebruch", r=2).vector("F3") == (1, 2)
    assert polytopes.GetCharFunctionByName("hirzebruch:-1").vector("F3") == (1, -1)
    assert polytopes.GetCharFunctionByName("cube:2").vector("F2") == (-1, 0)
    with pytest.raises(ParseError):
        polytopes.GetCharFunctionByName("hirzebruch")


def test_export_and_import(polytopes, tmp_path):
    P = polytopes.GetPolytopeByName("prism")
    path = tmp_path / "prism.json"
    polytopes.ExportPolytope(P, str(path), name="prism")
    loaded = polytopes.GetPolytopeByName(str(path))
    assert loaded.vertices == P.vertices
    assert h_vector(loaded, default_ordering(loaded)).h == (1, 2, 2, 1)

    char = polytopes.GetCharFunctionByName("prism")
    char_path = tmp_path / "prism-char.json"
    polytopes.ExportCharFunction(char, str(char_path))
    assert "lambda" in json.loads(char_path.read_text())
    assert polytopes.GetCharFunctionByName(str(char_path)) == char


def test_unreadable_document(polytopes, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        polytopes.ImportPolytope(str(path))
    with pytest.raises(ParseError):
        polytopes.ImportPolytope(str(tmp_path / "missing.json"))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_every_fixture_resolves(fixtures, name):
    space = fixtures.GetFixtureByName(name)
    assert space.family in (Family.PPS, Family.PT, Family.PS)
    assert space.dim >= 1


def test_fixture_twist(fixtures):
    assert "r=3" in fixtures.GetFixtureByName("square-r", r=3).label()
    with pytest.raises(ParseError):
        fixtures.GetFixtureByName("no-such-fixture")


def test_export_fixture(fixtures, tmp_path):
    path = tmp_path / "dold.json"
    fixtures.ExportFixture("dold-1-1", str(path))
    descriptor = parse_descriptor(path.read_text())
    assert descriptor.family is Family.PT
    assert descriptor.cp == [1]


def test_descriptor_validation(fixtures):
    with pytest.raises(ParseError):
        parse_descriptor('{"family": "PT"}')
    with pytest.raises(ParseError):
        parse_descriptor('{"family": "PT", "m": [0], "cp": [1]}')
    with pytest.raises(ParseError):
        fixtures.ResolveDescriptor(SpaceDescriptor(family=Family.PPS, m=[3], cp=[1]))
    with pytest.raises(ParseError):
        fixtures.ResolveDescriptor(SpaceDescriptor(family=Family.PT, m=[3], rp=[1]))


def test_inline_polytope_descriptor(fixtures):
    text = json.dumps({
        "family": "PS",
        "m": [3],
        "polytope": {"dim": 1, "vertices": {"a": ["F1"], "b": ["F2"]}},
        "char": {"ring": "F2", "lambda": {"F1": [1], "F2": [1]}},
        "name": "interval",
    })
    space = fixtures.ResolveDescriptor(parse_descriptor(text))
    assert space.family is Family.PS
    assert space.dim == 4
    assert space.label() == "PS(m=(3); interval)"
