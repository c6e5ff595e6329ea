# /src/charfunc/char_func.py

"""Characteristic functions: one vector per facet, over Z or GF(2)."""

__all__ = [
    "Ring", "CharFunction", "ValidityReport", "LinearForm",
    "make_char", "validate_char", "require_valid", "linear_ideal_rows",
]

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Mapping, Sequence, Tuple

import numpy as np

from src.polytope import SimplePolytope
from src.utils.errors import DimensionMismatch, InvalidCharFunction
from src.utils.formatting import format_polynomial
from src.utils.linalg import determinant, integer_matrix

logger = logging.getLogger(__name__)


class Ring(str, Enum):
    Z = "Z"
    F2 = "F2"

    @property
    def modulus(self):
        return 2 if self is Ring.F2 else None


@dataclass(frozen=True)
class CharFunction:
    ring: Ring
    facets: Tuple[str, ...]
    vectors: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0

    def vector(self, facet: str) -> Tuple[int, ...]:
        return self.vectors[self.facets.index(facet)]

    def matrix(self) -> np.ndarray:
        """The mu x n matrix whose rows are the facet vectors."""
        return integer_matrix(self.vectors, (len(self.vectors), self.rank))

    def reduce_mod2(self) -> "CharFunction":
        return CharFunction(Ring.F2, self.facets, tuple(tuple(x % 2 for x in v) for v in self.vectors))

    def as_dict(self) -> dict:
        return {"ring": self.ring.value, "lambda": {f: list(v) for f, v in zip(self.facets, self.vectors)}}


def make_char(vectors: Mapping[str, Sequence[int]], ring: Ring = Ring.Z) -> CharFunction:
    ring = Ring(ring)
    values = tuple(tuple(int(x) % 2 if ring is Ring.F2 else int(x) for x in v) for v in vectors.values())
    lengths = {len(v) for v in values}
    if len(lengths) > 1:
        raise DimensionMismatch(f"facet vectors have mixed lengths {sorted(lengths)}")
    return CharFunction(ring, tuple(vectors), values)


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    offending: Tuple[Tuple[str, int], ...] = ()

    def describe(self) -> str:
        if self.ok:
            return "OK"
        return "; ".join(f"{v}: det {d}" for v, d in self.offending)


def _check_shape(P: SimplePolytope, char: CharFunction) -> None:
    if set(char.facets) != set(P.facets) or len(char.facets) != len(P.facets):
        raise DimensionMismatch(
            f"characteristic function is defined on {sorted(char.facets)}, polytope has {sorted(P.facets)}")
    if P.num_facets and char.rank != P.dim:
        raise DimensionMismatch(f"facet vectors have length {char.rank}, polytope dimension is {P.dim}")


def validate_char(P: SimplePolytope, char: CharFunction) -> ValidityReport:
    """At every vertex the n incident vectors must form a basis of Z^n (or GF(2)^n)."""
    _check_shape(P, char)
    offending = []
    for v in P.vertices:
        rows = [char.vector(f) for f in P.sort_facets(P.incidence[v])]
        det = determinant(rows)
        good = det % 2 == 1 if char.ring is Ring.F2 else abs(det) == 1
        if not good:
            offending.append((v, det))
    return ValidityReport(not offending, tuple(offending))


def require_valid(P: SimplePolytope, char: CharFunction) -> None:
    report = validate_char(P, char)
    if not report.ok:
        raise InvalidCharFunction(f"singular at {report.describe()}")


@dataclass(frozen=True)
class LinearForm:
    """sum_i coefficients[i] * u_i over the facets in polytope order."""
    coefficients: Tuple[int, ...]

    def format(self, names: Sequence[str]) -> str:
        return format_polynomial((c, name) for c, name in zip(self.coefficients, names))


def linear_ideal_rows(P: SimplePolytope, char: CharFunction) -> List[LinearForm]:
    """The n forms sum_i lambda_{i,l} u_i (l = 1..n) generating J."""
    _check_shape(P, char)
    forms = []
    for l in range(P.dim):
        coefficients = tuple(char.vector(f)[l] for f in P.facets)
        forms.append(LinearForm(coefficients))
    return forms
