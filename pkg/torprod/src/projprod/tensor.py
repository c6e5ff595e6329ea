# /src/projprod/tensor.py

"""Mod-2 cohomology of P(S^m1 x ... x S^mk, X) for a toric manifold or small cover X.

When every m_i > 1 the cohomology is H*(P(m); Z_2) tensored with
H*(X; Z_2). For X = CP^n1 x ... x CP^nl (or RP^...) the fibre factor
is Z_2[d_1..d_l]/(d_j^(n_j+1)) with d_j in degree 2 (or 1), and the
degree-one class a of the base is written c.
"""

__all__ = [
    "TensorTerm", "TensorClass", "TensorAlgebra",
    "tensor_cohomology", "toric_total_sw", "smallcover_total_sw",
]

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from src.charfunc import Ring
from src.rings import present_cohomology
from src.spaces import Family, Space
from src.utils.errors import HypothesisViolation, UnsupportedFamily

from .algebra import BasisElement, ProjectiveProductAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TensorTerm:
    base: BasisElement
    fibre: Tuple[int, ...]


@dataclass(frozen=True)
class TensorClass:
    algebra: "TensorAlgebra" = field(compare=False, repr=False)
    terms: FrozenSet[TensorTerm] = frozenset()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == frozenset({self.algebra.unit_term})

    @property
    def degrees(self) -> List[int]:
        return sorted({self.algebra.degree(t) for t in self.terms})

    def component(self, degree: int) -> "TensorClass":
        return TensorClass(self.algebra, frozenset(t for t in self.terms if self.algebra.degree(t) == degree))

    def __add__(self, other: "TensorClass") -> "TensorClass":
        return TensorClass(self.algebra, self.terms ^ other.terms)

    def __mul__(self, other: "TensorClass") -> "TensorClass":
        result: FrozenSet[TensorTerm] = frozenset()
        for x in self.terms:
            for y in other.terms:
                z = self.algebra.multiply_terms(x, y)
                if z is not None:
                    result = result ^ {z}
        return TensorClass(self.algebra, result)

    def format(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda t: (self.algebra.degree(t), t.base.a,
                                                    sorted(t.base.s), sorted(t.base.t), t.fibre))
        return " + ".join(self.algebra.label(t) for t in ordered)

    def as_dict(self) -> dict:
        return {str(d): self.component(d).format() for d in self.degrees}


class TensorAlgebra:
    def __init__(self, space: Space):
        if space.family is Family.PPS:
            raise UnsupportedFamily("sphere-product fibres are handled by pps_algebra")
        if any(x <= 1 for x in space.m):
            raise HypothesisViolation(f"the tensor description needs every m_i > 1, got m = {space.m}")
        self.space = space
        self.base = ProjectiveProductAlgebra(space.m, check=False)
        self.base_ring_certified = self.base.certified
        if not self.base_ring_certified:
            logger.info("base %s built outside the ring hypotheses", self.base.label())
        self.weight = space.fibre_weight
        self.symbol = "d"
        if space.projective is not None:
            self.dims: Optional[Tuple[int, ...]] = tuple(space.projective)
            self.fibre_ranks = self._truncated_ranks(self.dims)
        else:
            self.dims = None
            P, char = space.fibre
            presentation = present_cohomology(P, char, coefficients=Ring.F2, variable=space.variable)
            self.fibre_ranks = presentation.ranks()

    def _truncated_ranks(self, dims: Sequence[int]) -> List[int]:
        ranks = [1]
        for n in dims:
            factor = [0] * (self.weight * n + 1)
            for e in range(n + 1):
                factor[self.weight * e] = 1
            ranks = _convolve(ranks, factor)
        return ranks

    @property
    def has_basis(self) -> bool:
        return self.dims is not None

    @property
    def ell(self) -> int:
        return len(self.dims) if self.dims is not None else 0

    @property
    def top(self) -> int:
        return self.base.top + len(self.fibre_ranks) - 1

    @property
    def unit_term(self) -> TensorTerm:
        return TensorTerm(BasisElement(0), (0,) * self.ell)

    def relations(self) -> List[str]:
        out = [r.replace("a^", "c^") for r in self.base.relations()]
        for j, n in enumerate(self.dims or ()):
            out.append(f"{self.symbol}{j + 1}^{n + 1} = 0")
        return out

    def poincare(self) -> List[int]:
        return _convolve(self.base.poincare(), self.fibre_ranks)

    def total_dim(self) -> int:
        return sum(self.poincare())

    # --- basis and arithmetic (projective-space fibres only) ---------------

    def _require_basis(self) -> None:
        if not self.has_basis:
            raise UnsupportedFamily("a full basis is only available for products of projective spaces")

    def degree(self, term: TensorTerm) -> int:
        return self.base.degree(term.base) + self.weight * sum(term.fibre)

    def label(self, term: TensorTerm) -> str:
        parts = []
        if term.base.a == 1:
            parts.append("c")
        elif term.base.a > 1:
            parts.append(f"c^{term.base.a}")
        parts += [f"a{i + 1}" for i in sorted(term.base.s)]
        for j, e in enumerate(term.fibre):
            if e == 1:
                parts.append(f"{self.symbol}{j + 1}")
            elif e > 1:
                parts.append(f"{self.symbol}{j + 1}^{e}")
        return "*".join(parts) if parts else "1"

    def basis(self, degree: int) -> List[TensorTerm]:
        self._require_basis()
        out = []
        for fibre in _exponent_grid(self.dims):
            rest = degree - self.weight * sum(fibre)
            for e in self.base.basis(rest) if rest >= 0 else []:
                out.append(TensorTerm(e, fibre))
        return out

    def multiply_terms(self, x: TensorTerm, y: TensorTerm) -> Optional[TensorTerm]:
        base = self.base.multiply_basis(x.base, y.base)
        if base is None:
            return None
        fibre = tuple(a + b for a, b in zip(x.fibre, y.fibre))
        if any(e > n for e, n in zip(fibre, self.dims)):
            return None
        return TensorTerm(base, fibre)

    def make_class(self, terms: Iterable[TensorTerm]) -> TensorClass:
        self._require_basis()
        result: FrozenSet[TensorTerm] = frozenset()
        for t in terms:
            if t.base.a <= self.base.m[0] and all(e <= n for e, n in zip(t.fibre, self.dims)):
                result = result ^ {t}
        return TensorClass(self, result)

    def one(self) -> TensorClass:
        return self.make_class([self.unit_term])

    def c(self, power: int = 1) -> TensorClass:
        return self.make_class([TensorTerm(BasisElement(power), (0,) * self.ell)])

    def d(self, j: int, power: int = 1) -> TensorClass:
        fibre = tuple(power if i == j - 1 else 0 for i in range(self.ell))
        return self.make_class([TensorTerm(BasisElement(0), fibre)])

    def from_polynomial(self, poly: sympy.Poly) -> TensorClass:
        """Reads a mod-2 polynomial in (c, d_1, ..., d_l), dropping truncated monomials."""
        terms = []
        for exponents, coef in poly.terms():
            if int(coef) % 2:
                terms.append(TensorTerm(BasisElement(exponents[0]), tuple(exponents[1:])))
        return self.make_class(terms)


def _convolve(left: Sequence[int], right: Sequence[int]) -> List[int]:
    out = [0] * (len(left) + len(right) - 1)
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            out[i + j] += x * y
    return out


def _exponent_grid(dims: Sequence[int]) -> List[Tuple[int, ...]]:
    grid = [()]
    for n in dims:
        grid = [g + (e,) for g in grid for e in range(n + 1)]
    return grid


def tensor_cohomology(space: Space) -> TensorAlgebra:
    return TensorAlgebra(space)


def _period_exponent(exponent: int, m1: int) -> int:
    # (1 + c)^(2^s) = 1 once 2^s > m1
    period = 1
    while period <= m1:
        period *= 2
    return exponent % period


def _total_class(space: Space, family: Family, c_exponent: int, with_c: bool) -> TensorClass:
    if space.family is not family:
        raise UnsupportedFamily(f"expected a {family.value} space, got {space.family.value}")
    algebra = TensorAlgebra(space)
    if not algebra.has_basis:
        raise UnsupportedFamily("total Stiefel-Whitney classes are expanded for projective-space fibres only")
    c = sympy.Symbol("c")
    ds = sympy.symbols(f"d1:{algebra.ell + 1}") if algebra.ell else ()
    exponent = _period_exponent(c_exponent, algebra.base.m[0])
    expr = (1 + c) ** exponent
    for d, n in zip(ds, algebra.dims):
        expr *= ((1 + c + d) if with_c else (1 + d)) ** (n + 1)
    poly = sympy.Poly(expr, c, *ds, modulus=2)
    logger.debug("total class of %s from (1+c)^%d and %d fibre factors", space.label(), exponent, algebra.ell)
    return algebra.from_polynomial(poly)


def toric_total_sw(space: Space) -> TensorClass:
    """W = (1 + c)^(sum m_i + k - l) * prod_j (1 + c + d_j)^(n_j + 1)."""
    return _total_class(space, Family.PT, sum(space.m) + space.k - space.ell, with_c=True)


def smallcover_total_sw(space: Space) -> TensorClass:
    """W = (1 + c)^(sum (m_i + 1)) * prod_j (1 + d_j)^(n_j + 1)."""
    return _total_class(space, Family.PS, sum(x + 1 for x in space.m), with_c=False)
