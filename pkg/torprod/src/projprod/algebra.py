# /src/projprod/algebra.py

"""H*(P; Z_2) for P = P(S^m1 x ... x S^mk, S^n1 x ... x S^nl).

The ring is Z_2[a]/(a^(m1+1)) tensored with exterior-type generators
a2..ak (degrees m_i) and b1..bl (degrees n_j). The only non-zero
squares are

    a_i^2 = a^(m_i) a_i   when m1 is even and m_i = m1
    b_j^2 = a^(n_j) b_j   when p_j = 1 and n_j = m1
"""

__all__ = [
    "BasisElement", "Z2Class", "ProjectiveProductAlgebra",
    "pps_algebra", "steenrod_square", "square_component", "pps_total_sw",
]

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from src.utils.errors import HypothesisViolation, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisElement:
    a: int
    s: FrozenSet[int] = frozenset()
    t: FrozenSet[int] = frozenset()


@dataclass(frozen=True)
class Z2Class:
    algebra: "ProjectiveProductAlgebra" = field(compare=False, repr=False)
    terms: FrozenSet[BasisElement] = frozenset()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == frozenset({BasisElement(0)})

    @property
    def degrees(self) -> List[int]:
        return sorted({self.algebra.degree(e) for e in self.terms})

    def component(self, degree: int) -> "Z2Class":
        return Z2Class(self.algebra, frozenset(e for e in self.terms if self.algebra.degree(e) == degree))

    def __add__(self, other: "Z2Class") -> "Z2Class":
        return Z2Class(self.algebra, self.terms ^ other.terms)

    def __mul__(self, other: "Z2Class") -> "Z2Class":
        result: FrozenSet[BasisElement] = frozenset()
        for x in self.terms:
            for y in other.terms:
                z = self.algebra.multiply_basis(x, y)
                if z is not None:
                    result = result ^ {z}
        return Z2Class(self.algebra, result)

    def format(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda e: (self.algebra.degree(e), e.a, sorted(e.s), sorted(e.t)))
        return " + ".join(self.algebra.label(e) for e in ordered)

    def as_dict(self) -> dict:
        return {str(d): self.component(d).format() for d in self.degrees}


class ProjectiveProductAlgebra:
    def __init__(self, m: Sequence[int], pairs: Sequence[Tuple[int, int]] = (), check: bool = True):
        if not m:
            raise ParseError("at least one sphere dimension is required")
        self.m = tuple(sorted(int(x) for x in m))
        self.pairs = tuple(sorted((int(n), int(p)) for n, p in pairs))
        self.certified = True
        try:
            self._check_hypotheses()
        except HypothesisViolation as e:
            if check:
                logger.info("rejected %s: %s", self.label(), e.detail)
                raise
            self.certified = False

    def _check_hypotheses(self) -> None:
        m, n = self.m, [n for n, _ in self.pairs]
        if n and m[-1] > n[0]:
            raise HypothesisViolation(f"need m_k <= n_1, got m_k = {m[-1]} > n_1 = {n[0]}")
        for n_j, p_j in self.pairs:
            if not 1 <= p_j <= n_j:
                raise HypothesisViolation(f"need 1 <= p_j <= n_j, got (n, p) = ({n_j}, {p_j})")
        if len(m) >= 2 and not (m[0] < m[-1] or m[0] % 2):
            raise HypothesisViolation(f"need m_1 < m_k or m_1 odd, got m = {m}")

    @property
    def k(self) -> int:
        return len(self.m)

    @property
    def ell(self) -> int:
        return len(self.pairs)

    @property
    def top(self) -> int:
        return sum(self.m) + sum(n for n, _ in self.pairs)

    # --- squares of exterior generators ------------------------------------

    def _alpha_square_active(self, i: int) -> bool:
        return self.m[0] % 2 == 0 and self.m[i] == self.m[0]

    def _beta_square_active(self, j: int) -> bool:
        n, p = self.pairs[j]
        return p == 1 and n == self.m[0]

    def relations(self) -> List[str]:
        out = [f"a^{self.m[0] + 1} = 0"]
        for i in range(1, self.k):
            rhs = f"a^{self.m[i]}*a{i + 1}" if self._alpha_square_active(i) else "0"
            out.append(f"a{i + 1}^2 = {rhs}")
        for j, (n, _) in enumerate(self.pairs):
            rhs = f"a^{n}*b{j + 1}" if self._beta_square_active(j) else "0"
            out.append(f"b{j + 1}^2 = {rhs}")
        return out

    # --- basis -------------------------------------------------------------

    def degree(self, e: BasisElement) -> int:
        return e.a + sum(self.m[i] for i in e.s) + sum(self.pairs[j][0] for j in e.t)

    def label(self, e: Optional[BasisElement] = None) -> str:
        if e is None:
            return self._space_label()
        parts = []
        if e.a == 1:
            parts.append("a")
        elif e.a > 1:
            parts.append(f"a^{e.a}")
        parts += [f"a{i + 1}" for i in sorted(e.s)]
        parts += [f"b{j + 1}" for j in sorted(e.t)]
        return "*".join(parts) if parts else "1"

    def _space_label(self) -> str:
        fibre = "; ".join(f"({n},{p})" for n, p in self.pairs)
        return f"P(m={self.m}{'; ' + fibre if fibre else ''})"

    @cached_property
    def basis_elements(self) -> List[BasisElement]:
        out = []
        alphas = range(1, self.k)
        betas = range(self.ell)
        for size_s in range(self.k):
            for s in combinations(alphas, size_s):
                for size_t in range(self.ell + 1):
                    for t in combinations(betas, size_t):
                        for a in range(self.m[0] + 1):
                            out.append(BasisElement(a, frozenset(s), frozenset(t)))
        return sorted(out, key=lambda e: (self.degree(e), e.a, sorted(e.s), sorted(e.t)))

    def basis(self, degree: int) -> List[BasisElement]:
        return [e for e in self.basis_elements if self.degree(e) == degree]

    def poincare(self) -> List[int]:
        counts = [0] * (self.top + 1)
        for e in self.basis_elements:
            counts[self.degree(e)] += 1
        return counts

    # --- arithmetic --------------------------------------------------------

    def multiply_basis(self, x: BasisElement, y: BasisElement):
        """The product of two basis elements, or None when it vanishes."""
        a = x.a + y.a
        for i in x.s & y.s:
            if not self._alpha_square_active(i):
                return None
            a += self.m[i]
        for j in x.t & y.t:
            if not self._beta_square_active(j):
                return None
            a += self.pairs[j][0]
        if a > self.m[0]:
            return None
        return BasisElement(a, x.s | y.s, x.t | y.t)

    def make_class(self, elements: Iterable[BasisElement]) -> Z2Class:
        terms: FrozenSet[BasisElement] = frozenset()
        for e in elements:
            if e.a <= self.m[0]:
                terms = terms ^ {e}
        return Z2Class(self, terms)

    def zero(self) -> Z2Class:
        return Z2Class(self)

    def one(self) -> Z2Class:
        return self.make_class([BasisElement(0)])

    def alpha(self, power: int = 1) -> Z2Class:
        return self.make_class([BasisElement(power)])

    def alpha_i(self, i: int) -> Z2Class:
        """a_i for 2 <= i <= k."""
        if not 2 <= i <= self.k:
            raise ParseError(f"a_{i} is not a generator of {self._space_label()}")
        return self.make_class([BasisElement(0, frozenset({i - 1}))])

    def beta(self, j: int) -> Z2Class:
        """b_j for 1 <= j <= l."""
        if not 1 <= j <= self.ell:
            raise ParseError(f"b_{j} is not a generator of {self._space_label()}")
        return self.make_class([BasisElement(0, t=frozenset({j - 1}))])

    def one_plus_alpha(self, exponent: int) -> Z2Class:
        """(1 + a)^e, truncated at a^(m1+1); negative e is read modulo a power of 2 above m1."""
        if exponent < 0:
            period = 1
            while period <= self.m[0]:
                period *= 2
            exponent %= period
        return self.make_class(BasisElement(c) for c in range(min(exponent, self.m[0]) + 1)
                               if sympy.binomial(exponent, c) % 2)


def pps_algebra(m: Sequence[int], pairs: Sequence[Tuple[int, int]] = ()) -> ProjectiveProductAlgebra:
    return ProjectiveProductAlgebra(m, pairs)


# --- Steenrod squares ------------------------------------------------------

def _generator_square(algebra: ProjectiveProductAlgebra, kind: str, index: int) -> Z2Class:
    if kind == "a":
        return algebra.alpha() + algebra.alpha(2)
    if kind == "ai":
        return algebra.one_plus_alpha(algebra.m[index] + 1) * algebra.alpha_i(index + 1)
    n, p = algebra.pairs[index]
    return algebra.one_plus_alpha(n + 1 - p) * algebra.beta(index + 1)


def _basis_square(algebra: ProjectiveProductAlgebra, e: BasisElement) -> Z2Class:
    # Cartan formula over the factorization a^a * prod a_i * prod b_j
    result = algebra.one()
    for _ in range(e.a):
        result = result * _generator_square(algebra, "a", 0)
    for i in sorted(e.s):
        result = result * _generator_square(algebra, "ai", i)
    for j in sorted(e.t):
        result = result * _generator_square(algebra, "b", j)
    return result


def steenrod_square(x: Z2Class) -> Z2Class:
    """The total square Sq = Sq^0 + Sq^1 + ... of x."""
    result = x.algebra.zero()
    for e in x.terms:
        result = result + _basis_square(x.algebra, e)
    return result


def square_component(i: int, x: Z2Class) -> Z2Class:
    """Sq^i x for a homogeneous class x."""
    degrees = x.degrees
    if not degrees:
        return x
    if len(degrees) > 1:
        raise ParseError("Sq^i is only taken of homogeneous classes")
    return steenrod_square(x).component(degrees[0] + i)


# --- total Stiefel-Whitney class -------------------------------------------

def pps_total_sw(m: Sequence[int], pairs: Sequence[Tuple[int, int]] = (), splitting: str = "stated") -> Z2Class:
    """W(P) = (1 + a)^E with E read off the stable splitting of the tangent bundle.

    ``stated`` counts n_j - p_j + 2 copies of the line bundle per pair,
    ``thom`` counts n_j + 1 - p_j, the multiplicity in Sq(b_j).
    """
    algebra = pps_algebra(m, pairs)
    if splitting == "stated":
        per_pair = [n - p + 2 for n, p in algebra.pairs]
    elif splitting == "thom":
        per_pair = [n + 1 - p for n, p in algebra.pairs]
    else:
        raise ParseError(f"unknown splitting {splitting!r}, expected 'stated' or 'thom'")
    exponent = sum(x + 1 for x in algebra.m) + sum(per_pair)
    a = sympy.Symbol("a")
    poly = sympy.Poly((1 + a) ** exponent, a, modulus=2)
    powers = [c for (c,), coef in poly.terms() if int(coef) % 2 and c <= algebra.m[0]]
    logger.debug("W(%s) = (1+a)^%d", algebra.label(), exponent)
    return algebra.make_class(BasisElement(c) for c in powers)
