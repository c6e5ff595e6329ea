# /src/rings/rings.py

"""Degreewise presentations of Z[u]/(I+J) (toric) and Z_2[u]/(I+J) (small covers).

J is eliminated once, by solving for the variables of a pivot vertex
in terms of the remaining ("free") variables. The Stanley-Reisner
relations are then imposed degree by degree as integer (or GF(2))
row spaces over the monomials in the free variables.
"""

__all__ = [
    "RingClass", "DegreeComponent", "GradedPresentation",
    "PontryaginClass", "StiefelWhitneyClass",
    "stanley_reisner_generators", "present_cohomology", "multiply",
    "first_pontryagin", "total_stiefel_whitney",
]

import logging
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from src.charfunc import CharFunction, Ring, require_valid
from src.polytope import SimplePolytope
from src.utils.errors import DimensionMismatch, PresentationMismatch, WrongRing
from src.utils.formatting import format_polynomial, monomial_label
from src.utils.linalg import LatticeQuotient, quotient_by_rows

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Polynomial = Dict[Exponents, int]


def stanley_reisner_generators(P: SimplePolytope) -> List[Tuple[str, ...]]:
    """Minimal non-faces: facet sets with empty intersection whose proper subsets all meet."""
    generators = []
    for size in range(2, P.dim + 2):
        for subset in combinations(P.facets, size):
            if P.is_face(subset):
                continue
            if all(P.is_face(subset[:k] + subset[k + 1:]) for k in range(size)):
                generators.append(subset)
    return generators


@dataclass(frozen=True)
class RingClass:
    presentation: "GradedPresentation" = field(compare=False, repr=False)
    degree: int
    coords: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def basis(self) -> List[str]:
        return self.presentation.basis(self.degree)

    def _same(self, other: "RingClass") -> None:
        if other.presentation is not self.presentation:
            raise PresentationMismatch("classes come from different presentations")
        if other.degree != self.degree:
            raise DimensionMismatch(f"cannot add degrees {self.degree} and {other.degree}")

    def __add__(self, other: "RingClass") -> "RingClass":
        self._same(other)
        coords = [a + b for a, b in zip(self.coords, other.coords)]
        return self.presentation.make_class(self.degree, coords)

    def __neg__(self) -> "RingClass":
        return self.presentation.make_class(self.degree, [-a for a in self.coords])

    def __sub__(self, other: "RingClass") -> "RingClass":
        return self + (-other)

    def scale(self, k: int) -> "RingClass":
        return self.presentation.make_class(self.degree, [k * a for a in self.coords])

    def __mul__(self, other: "RingClass") -> "RingClass":
        return multiply(self, other)

    def format(self) -> str:
        return format_polynomial(zip(self.coords, self.basis))

    def as_dict(self) -> dict:
        labels = self.basis
        return {
            "degree": self.degree,
            "coords": {label: c for label, c in zip(labels, self.coords) if c},
            "basis": labels,
        }


@dataclass
class DegreeComponent:
    degree: int
    monomials: List[Exponents]
    quotient: Optional[LatticeQuotient]
    labels: List[str]
    representatives: List[Polynomial]

    @property
    def rank(self) -> int:
        return len(self.labels)


class GradedPresentation:
    def __init__(self, polytope: SimplePolytope, ring: Ring, weight: int,
                 names: Sequence[str], free: Sequence[int],
                 substitution: Sequence[Tuple[int, ...]], relations: Sequence[Polynomial],
                 pivot_vertex: Optional[str]):
        self.polytope = polytope
        self.ring = ring
        self.weight = weight
        self.names = tuple(names)
        self.free = tuple(free)
        self.free_names = tuple(self.names[i] for i in self.free)
        self.substitution = tuple(substitution)
        self.relations = list(relations)
        self.pivot_vertex = pivot_vertex
        self.top = weight * polytope.dim
        self.components: Dict[int, DegreeComponent] = {}
        for t in range(0, self.top + 1, weight):
            self.components[t] = self._build_component(t)

    @property
    def modulus(self) -> Optional[int]:
        return self.ring.modulus

    # --- construction ------------------------------------------------------

    def _monomials(self, d: int) -> List[Exponents]:
        q = len(self.free)
        found = []
        for combo in combinations_with_replacement(range(q), d):
            exponents = [0] * q
            for i in combo:
                exponents[i] += 1
            found.append(tuple(exponents))
        return sorted(found)

    def _build_component(self, t: int) -> DegreeComponent:
        d = t // self.weight
        monomials = self._monomials(d)
        column = {m: j for j, m in enumerate(monomials)}
        rows = []
        for relation in self.relations:
            size = sum(next(iter(relation)))
            if size > d:
                continue
            for shift in self._monomials(d - size):
                row = [0] * len(monomials)
                for exponents, coef in relation.items():
                    row[column[tuple(a + b for a, b in zip(exponents, shift))]] += coef
                rows.append(row)
        quotient = quotient_by_rows(rows, len(monomials), modulus=self.modulus)
        if quotient.monomial_basis:
            representatives = [{monomials[j]: 1} for j in quotient.free_columns]
            labels = [monomial_label(monomials[j], self.free_names) for j in quotient.free_columns]
        else:
            representatives = [{m: c for m, c in zip(monomials, vector) if c} for vector in quotient.basis]
            labels = ["(" + format_polynomial((c, monomial_label(m, self.free_names))
                                              for m, c in rep.items()) + ")"
                      for rep in representatives]
        logger.debug("degree %d: %d monomials, %d relations, rank %d", t, len(monomials), len(rows), len(labels))
        return DegreeComponent(t, monomials, quotient, labels, representatives)

    # --- queries -----------------------------------------------------------

    def rank(self, degree: int) -> int:
        component = self.components.get(degree)
        return component.rank if component else 0

    def ranks(self) -> List[int]:
        return [self.rank(t) for t in range(self.top + 1)]

    def basis(self, degree: int) -> List[str]:
        component = self.components.get(degree)
        return list(component.labels) if component else []

    def make_class(self, degree: int, coords: Sequence[int]) -> RingClass:
        coords = [int(c) for c in coords]
        if self.modulus:
            coords = [c % self.modulus for c in coords]
        return RingClass(self, degree, tuple(coords))

    def zero(self, degree: int) -> RingClass:
        return self.make_class(degree, [0] * self.rank(degree))

    def one(self) -> RingClass:
        return self.reduce({tuple([0] * len(self.free)): 1}, 0)

    def reduce(self, polynomial: Polynomial, degree: int) -> RingClass:
        """Normal form of a homogeneous polynomial in the free variables."""
        component = self.components.get(degree)
        if component is None:
            return self.zero(degree)
        column = {m: j for j, m in enumerate(component.monomials)}
        vector = [0] * len(component.monomials)
        for exponents, coef in polynomial.items():
            vector[column[exponents]] += coef
        return self.make_class(degree, component.quotient.coordinates(vector))

    def representative(self, cls: RingClass) -> Polynomial:
        component = self.components.get(cls.degree)
        out: Polynomial = {}
        if component is None:
            return out
        for coef, rep in zip(cls.coords, component.representatives):
            for exponents, c in rep.items():
                out[exponents] = out.get(exponents, 0) + coef * c
        return {m: c for m, c in out.items() if c}

    def generator(self, i: int) -> RingClass:
        """The class of u_i (0-based facet position), after eliminating J."""
        q = len(self.free)
        polynomial = {}
        for j, coef in enumerate(self.substitution[i]):
            if coef:
                exponents = tuple(1 if k == j else 0 for k in range(q))
                polynomial[exponents] = coef
        return self.reduce(polynomial, self.weight)


def _symbols(count: int):
    return sympy.symbols(f"t0:{count}") if count else ()


def _poly_to_dict(expr, gens, modulus: Optional[int]) -> Polynomial:
    poly = sympy.Poly(expr, *gens)
    out = {}
    for exponents, coef in poly.terms():
        coef = int(coef) % modulus if modulus else int(coef)
        if coef:
            out[tuple(exponents)] = coef
    return out


def multiply(a: RingClass, b: RingClass) -> RingClass:
    presentation = a.presentation
    if b.presentation is not presentation:
        raise PresentationMismatch("cannot multiply classes from different presentations")
    degree = a.degree + b.degree
    if degree > presentation.top or degree % presentation.weight:
        return presentation.zero(degree)
    gens = _symbols(len(presentation.free))
    if not gens:
        return presentation.make_class(degree, [x * y for x, y in zip(a.coords, b.coords)])
    left = sympy.Poly.from_dict(presentation.representative(a) or {(0,) * len(gens): 0}, *gens)
    right = sympy.Poly.from_dict(presentation.representative(b) or {(0,) * len(gens): 0}, *gens)
    product = _poly_to_dict((left * right).as_expr(), gens, presentation.modulus)
    return presentation.reduce(product, degree)


def _default_pivot(P: SimplePolytope) -> str:
    return max(P.vertices, key=lambda v: sorted(P.facet_position(f) for f in P.incidence[v]))


def present_cohomology(P: SimplePolytope, char: CharFunction, coefficients: Optional[Ring] = None,
                       variable: str = "u", pivot_vertex: Optional[str] = None) -> GradedPresentation:
    """Presents H*(X; Z) for an integral function, H*(Y; Z_2) for a mod-2 one.

    ``coefficients=Ring.F2`` on an integral function gives H*(X; Z_2)
    with the generators kept in degree 2.
    """
    require_valid(P, char)
    weight = 2 if char.ring is Ring.Z else 1
    ring = Ring(coefficients) if coefficients is not None else char.ring
    if ring is Ring.Z and char.ring is Ring.F2:
        raise WrongRing("a mod-2 characteristic function has no integral presentation")
    working = char.reduce_mod2() if ring is Ring.F2 else char
    modulus = ring.modulus
    names = [f"{variable}{i}" for i in range(1, P.num_facets + 1)]

    if P.dim == 0:
        return GradedPresentation(P, ring, weight, names, (), (), [], None)

    pivot_vertex = pivot_vertex or _default_pivot(P)
    if pivot_vertex not in P.incidence:
        raise DimensionMismatch(f"unknown pivot vertex {pivot_vertex}")
    pivot = sorted(P.facet_position(f) for f in P.incidence[pivot_vertex])
    free = [i for i in range(P.num_facets) if i not in pivot]
    logger.info("eliminating %s at vertex %s", [names[i] for i in pivot], pivot_vertex)

    # J reads A u_pivot + B u_free = 0 with A = Lambda_v^T
    A = sympy.Matrix([[working.vectors[i][l] for i in pivot] for l in range(P.dim)])
    B = sympy.Matrix([[working.vectors[i][l] for i in free] for l in range(P.dim)])
    inverse = A.inv_mod(2) if modulus else A.inv()
    solved = -inverse * B
    substitution: List[Tuple[int, ...]] = [()] * P.num_facets
    for row, i in enumerate(pivot):
        coefs = [int(x) for x in solved.row(row)]
        substitution[i] = tuple(c % modulus if modulus else c for c in coefs)
    for k, i in enumerate(free):
        substitution[i] = tuple(1 if j == k else 0 for j in range(len(free)))

    gens = _symbols(len(free))
    linear = [sum((c * g for c, g in zip(substitution[i], gens)), sympy.Integer(0)) for i in range(P.num_facets)]
    relations = []
    for generator in stanley_reisner_generators(P):
        expr = sympy.Mul(*[linear[P.facet_position(f)] for f in generator])
        polynomial = _poly_to_dict(sympy.expand(expr), gens, modulus)
        if polynomial:
            relations.append(polynomial)
    return GradedPresentation(P, ring, weight, names, free, substitution, relations, pivot_vertex)


@dataclass(frozen=True)
class PontryaginClass:
    value: RingClass
    is_zero: bool

    def format(self) -> str:
        return f"{self.value.format()} ({'zero' if self.is_zero else 'nonzero'})"


def first_pontryagin(P: SimplePolytope, char: CharFunction, variable: str = "u",
                     pivot_vertex: Optional[str] = None) -> PontryaginClass:
    """p1(X) = sum_i u_i^2 in degree 4."""
    if char.ring is not Ring.Z:
        raise WrongRing("the first Pontryagin class needs an integral characteristic function")
    presentation = present_cohomology(P, char, variable=variable, pivot_vertex=pivot_vertex)
    total = presentation.zero(4)
    for i in range(P.num_facets):
        u = presentation.generator(i)
        total = total + multiply(u, u)
    return PontryaginClass(total, total.is_zero)


@dataclass(frozen=True)
class StiefelWhitneyClass:
    components: Tuple[RingClass, ...]

    @property
    def is_one(self) -> bool:
        return all(c.is_zero for c in self.components if c.degree > 0)

    def format(self) -> str:
        parts = [c.format() for c in self.components if not c.is_zero]
        return " + ".join(f"({p})" if " " in p else p for p in parts) or "0"


def total_stiefel_whitney(P: SimplePolytope, char: CharFunction, variable: str = "u") -> StiefelWhitneyClass:
    """W = prod_i (1 + u_i) over GF(2), for toric manifolds and small covers alike."""
    presentation = present_cohomology(P, char, coefficients=Ring.F2, variable=variable)
    total = {0: presentation.one()}
    for i in range(P.num_facets):
        u = presentation.generator(i)
        updated = dict(total)
        for degree, cls in total.items():
            shifted = multiply(cls, u)
            if shifted.degree <= presentation.top:
                updated[shifted.degree] = updated.get(shifted.degree, presentation.zero(shifted.degree)) + shifted
        total = updated
    components = tuple(total.get(t, presentation.zero(t)) for t in range(0, presentation.top + 1, presentation.weight))
    return StiefelWhitneyClass(components)
