# /src/spaces/spaces.py

"""The three families of generalized projective product spaces.

PPS:  P(S^m1 x ... x S^mk, S^n1 x ... x S^nl), sigma_j fixing p_j coordinates on S^nj
PT:   P(S^m1 x ... x S^mk, X) for a toric manifold X (a polytope with an integral function,
      or the shorthand CP^n1 x ... x CP^nl)
PS:   P(S^m1 x ... x S^mk, Y) for a small cover Y (mod-2 function, or RP^n1 x ... x RP^nl)
"""

__all__ = ["Family", "Space", "pps", "toric", "small_cover"]

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence, Tuple

from src.charfunc import CharFunction, Ring, make_char, product_char, require_valid, simplex_char
from src.polytope import SimplePolytope, point, product, simplex
from src.utils.errors import ParseError, WrongRing


class Family(str, Enum):
    PPS = "PPS"
    PT = "PT"
    PS = "PS"


@dataclass(frozen=True)
class Space:
    family: Family
    m: Tuple[int, ...]
    pairs: Tuple[Tuple[int, int], ...] = ()
    projective: Optional[Tuple[int, ...]] = None
    polytope: Optional[SimplePolytope] = field(default=None, compare=False)
    char: Optional[CharFunction] = field(default=None, compare=False)
    variable: str = "u"
    name: Optional[str] = None

    @property
    def k(self) -> int:
        return len(self.m)

    @property
    def ell(self) -> int:
        if self.family is Family.PPS:
            return len(self.pairs)
        return len(self.projective) if self.projective is not None else 0

    @property
    def fibre_weight(self) -> int:
        return 2 if self.family is Family.PT else 1

    @property
    def fibre_dim(self) -> int:
        if self.family is Family.PPS:
            return sum(n for n, _ in self.pairs)
        n = sum(self.projective) if self.projective is not None else self.polytope.dim
        return self.fibre_weight * n

    @property
    def dim(self) -> int:
        return sum(self.m) + self.fibre_dim

    @cached_property
    def fibre(self) -> Tuple[SimplePolytope, CharFunction]:
        """The fibre as polytope and characteristic function (products of simplices for shorthands)."""
        if self.family is Family.PPS:
            raise WrongRing("a sphere-product fibre has no polytope")
        if self.polytope is not None:
            return self.polytope, self.char
        ring = Ring.Z if self.family is Family.PT else Ring.F2
        factors = [simplex(n) for n in self.projective]
        chars = [simplex_char(n, ring) for n in self.projective]
        if not factors:
            return point(), make_char({}, ring)
        if len(factors) == 1:
            return factors[0], chars[0]
        return product(*factors), product_char(*chars)

    def label(self) -> str:
        ms = ",".join(str(x) for x in self.m)
        if self.family is Family.PPS:
            fibre = "; ".join(f"({n},{p})" for n, p in self.pairs)
            return f"PPS(m=({ms}){'; ' + fibre if fibre else ''})"
        if self.projective is not None:
            symbol = "CP" if self.family is Family.PT else "RP"
            fibre = " x ".join(f"{symbol}^{n}" for n in self.projective) or "pt"
        else:
            fibre = self.name or f"{self.polytope.dim}-polytope"
        return f"{self.family.value}(m=({ms}); {fibre})"


def _check_m(m: Sequence[int]) -> Tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if not m:
        raise ParseError("at least one sphere dimension is required")
    if any(x < 1 for x in m):
        raise ParseError(f"sphere dimensions must be positive, got {m}")
    return m


def pps(m: Sequence[int], pairs: Sequence[Tuple[int, int]] = ()) -> Space:
    checked = []
    for n, p in pairs:
        n, p = int(n), int(p)
        if n < 1 or not 0 <= p <= n:
            raise ParseError(f"pair (n, p) = ({n}, {p}) needs n >= 1 and 0 <= p <= n")
        checked.append((n, p))
    return Space(Family.PPS, _check_m(m), tuple(checked))


def _fibre_args(family: Family, m, dims, polytope, char, variable, name) -> Space:
    m = _check_m(m)
    if (dims is None) == (polytope is None):
        raise ParseError("give exactly one of a projective shorthand or a polytope fibre")
    if dims is not None:
        dims = tuple(int(n) for n in dims)
        if any(n < 0 for n in dims):
            raise ParseError(f"projective dimensions must be non-negative, got {dims}")
        return Space(family, m, projective=dims, variable=variable, name=name)
    if char is None:
        raise ParseError("a polytope fibre needs a characteristic function")
    if family is Family.PT and char.ring is not Ring.Z:
        raise WrongRing("toric fibres need an integral characteristic function")
    if family is Family.PS and char.ring is Ring.Z:
        char = char.reduce_mod2()
    require_valid(polytope, char)
    return Space(family, m, polytope=polytope, char=char, variable=variable, name=name)


def toric(m: Sequence[int], cp: Optional[Sequence[int]] = None, polytope: Optional[SimplePolytope] = None,
          char: Optional[CharFunction] = None, variable: str = "u", name: Optional[str] = None) -> Space:
    return _fibre_args(Family.PT, m, cp, polytope, char, variable, name)


def small_cover(m: Sequence[int], rp: Optional[Sequence[int]] = None, polytope: Optional[SimplePolytope] = None,
                char: Optional[CharFunction] = None, variable: str = "u", name: Optional[str] = None) -> Space:
    return _fibre_args(Family.PS, m, rp, polytope, char, variable, name)
