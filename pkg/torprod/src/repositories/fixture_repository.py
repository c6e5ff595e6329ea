# /src/repositories/fixture_repository.py

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from src.models import CharFunctionDocument, PolytopeDocument, SpaceDescriptor
from src.spaces import Family, Space, pps, small_cover, toric
from src.utils.errors import ParseError

from .polytope_repository import PolytopeRepository

logger = logging.getLogger(__name__)


def _descriptor(description: str, **fields) -> Tuple[str, SpaceDescriptor]:
    return description, SpaceDescriptor(**fields)


FIXTURES: Dict[str, Tuple[str, SpaceDescriptor]] = {
    "dold-1-1": _descriptor("Dold manifold D(1,1) = P(S^1, CP^1)",
                            family=Family.PT, m=[1], cp=[1]),
    "square-r": _descriptor("P(S^3, X) over the square with lambda(F3) = (1, r); default r = 1",
                            family=Family.PT, m=[3], polytope="square", char="hirzebruch", r=1,
                            variable="x", name="square-r"),
    "cp2-connected-sum": _descriptor("P(S^3, CP^2 # CP^2) over the square",
                                     family=Family.PT, m=[3], polytope="square", char="connected-sum",
                                     variable="x", name="cp2-connected-sum"),
    "pps-2-4-6-2": _descriptor("P(S^2 x S^4, S^6) with sigma fixing 2 coordinates",
                               family=Family.PPS, m=[2, 4], pairs=[(6, 2)]),
    "pps-3-5-3": _descriptor("P(S^3, S^5) with sigma fixing 3 coordinates",
                             family=Family.PPS, m=[3], pairs=[(5, 3)]),
    "pps-2-2-1": _descriptor("P(S^2, S^2) with sigma a reflection",
                             family=Family.PPS, m=[2], pairs=[(2, 1)]),
    "rp-3": _descriptor("RP^3 as P(S^3, pt)", family=Family.PPS, m=[3]),
    "pt-3-cp1-cp1": _descriptor("P(S^3, CP^1 x CP^1)", family=Family.PT, m=[3], cp=[1, 1]),
    "pt-1-cp1-cp1": _descriptor("P(S^1, CP^1 x CP^1)", family=Family.PT, m=[1], cp=[1, 1]),
    "pt-2-cp2": _descriptor("Dold manifold D(2,2) = P(S^2, CP^2)", family=Family.PT, m=[2], cp=[2]),
    "pt-2-prism": _descriptor("P(S^2, X) over the prism", family=Family.PT, m=[2],
                              polytope="prism", char="prism", name="prism"),
    "ps-2-2-rp1": _descriptor("P(S^2 x S^2, RP^1)", family=Family.PS, m=[2, 2], rp=[1]),
    "ps-2-rp2": _descriptor("P(S^2, RP^2)", family=Family.PS, m=[2], rp=[2]),
}


class FixtureRepository:
    """Built-in spaces reproducing the worked examples."""

    def __init__(self, polytopes: Optional[PolytopeRepository] = None):
        self.polytopes = polytopes or PolytopeRepository()

    def ListAllFixtures(self) -> List[Tuple[str, str]]:
        """Returns (name, description) for every built-in fixture."""
        return [(name, description) for name, (description, _) in FIXTURES.items()]

    def GetDescriptorByName(self, name: str, r: Optional[int] = None) -> SpaceDescriptor:
        """Returns the descriptor of a fixture, with ``r`` overriding its twist."""
        if name not in FIXTURES:
            raise ParseError(f"unknown fixture {name!r}; see 'torprod fixtures'")
        descriptor = FIXTURES[name][1]
        if r is not None:
            descriptor = descriptor.model_copy(update={"r": r})
        return descriptor

    def GetFixtureByName(self, name: str, r: Optional[int] = None) -> Space:
        """Returns a fixture as a resolved Space."""
        return self.ResolveDescriptor(self.GetDescriptorByName(name, r))

    def ResolveDescriptor(self, descriptor: SpaceDescriptor) -> Space:
        """Turns a descriptor into a Space, looking up named polytopes and functions."""
        if descriptor.family is Family.PPS:
            if descriptor.cp is not None or descriptor.rp is not None or descriptor.polytope is not None:
                raise ParseError("a PPS descriptor takes (n, p) pairs, not a projective or polytope fibre")
            return pps(descriptor.m, descriptor.pairs)
        if descriptor.pairs:
            raise ParseError(f"(n, p) pairs only apply to PPS, not {descriptor.family.value}")
        shorthand = descriptor.cp if descriptor.family is Family.PT else descriptor.rp
        wrong = descriptor.rp if descriptor.family is Family.PT else descriptor.cp
        if wrong is not None:
            raise ParseError(f"{descriptor.family.value} fibres use {'cp' if descriptor.family is Family.PT else 'rp'}")
        P = char = None
        name = descriptor.name
        if descriptor.polytope is not None:
            if isinstance(descriptor.polytope, PolytopeDocument):
                P = descriptor.polytope.to_polytope()
                name = name or descriptor.polytope.name
            else:
                P = self.polytopes.GetPolytopeByName(descriptor.polytope)
                name = name or descriptor.polytope
            if descriptor.char is None:
                raise ParseError("a polytope fibre needs a characteristic function")
            if isinstance(descriptor.char, CharFunctionDocument):
                char = descriptor.char.to_char()
            else:
                char = self.polytopes.GetCharFunctionByName(descriptor.char, descriptor.r)
            if descriptor.r is not None:
                name = f"{name}, r={descriptor.r}"
        build = toric if descriptor.family is Family.PT else small_cover
        return build(descriptor.m, shorthand, polytope=P, char=char, variable=descriptor.variable, name=name)

    def ExportFixture(self, name: str, path: str, r: Optional[int] = None) -> None:
        """Writes the fixture's descriptor as JSON."""
        descriptor = self.GetDescriptorByName(name, r)
        Path(path).write_text(descriptor.model_dump_json(indent=2, exclude_none=True, by_alias=True))
        logger.info("wrote fixture %s to %s", name, path)
