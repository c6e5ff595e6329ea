# /src/projprod/betti.py

"""Rational (and odd-prime) Betti numbers of the three families.

H*(P; Q) is the Z_2-invariant part of H*(S^m1 x ... ; Q) tensor H*(fibre; Q).
The antipodal map acts on the top class of S^m by (-1)^(m+1) and
sigma_j acts on the top class of S^n by (-1)^(n-p+1). The involution
on a small cover is trivial, so there P is P(m) x Y.
"""

__all__ = ["BettiNumbers", "rational_betti", "small_cover_betti"]

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

import sympy

from src.charfunc import CharFunction, Ring
from src.polytope import SimplePolytope
from src.rings import present_cohomology
from src.spaces import Family, Space
from src.utils.errors import ParseError, WrongRing
from src.utils.linalg import rank_over_q

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiNumbers:
    coefficients: str
    numbers: Tuple[int, ...]

    def euler(self) -> int:
        return sum((-1) ** t * b for t, b in enumerate(self.numbers))

    def format(self) -> str:
        return " ".join(str(b) for b in self.numbers)


def _signed_products(factors: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """(degree, weight) for every product of distinct factors; weight parity is the sign."""
    out = []
    for size in range(len(factors) + 1):
        for chosen in combinations(factors, size):
            out.append((sum(d for d, _ in chosen), sum(w for _, w in chosen)))
    return out


def _accumulate(top: int, terms) -> List[int]:
    numbers = [0] * (top + 1)
    for degree in terms:
        numbers[degree] += 1
    return numbers


def _fibre_ranks(space: Space) -> List[int]:
    if space.projective is not None:
        ranks = [1]
        for n in space.projective:
            factor = [1 if t % 2 == 0 else 0 for t in range(2 * n + 1)]
            merged = [0] * (len(ranks) + len(factor) - 1)
            for i, x in enumerate(ranks):
                for j, y in enumerate(factor):
                    merged[i + j] += x * y
            ranks = merged
        return ranks
    P, char = space.fibre
    return present_cohomology(P, char, variable=space.variable).ranks()


def _reduced_betti(P: SimplePolytope, support: Sequence[str]) -> List[int]:
    """Reduced rational Betti numbers of the full subcomplex of the dual complex on ``support``.

    Entry d + 1 holds degree d, starting at d = -1 (the empty complex has
    reduced H_-1 = Q).
    """
    chains = [[()]]
    for size in range(1, P.dim + 1):
        chains.append([s for s in combinations(support, size) if P.is_face(s)])
    ranks = [0]
    for size in range(1, len(chains)):
        position = {s: i for i, s in enumerate(chains[size - 1])}
        rows = [[0] * len(chains[size]) for _ in chains[size - 1]]
        for col, simplex in enumerate(chains[size]):
            for i in range(size):
                rows[position[simplex[:i] + simplex[i + 1:]]][col] = (-1) ** i
        ranks.append(rank_over_q(rows) if chains[size] else 0)
    ranks.append(0)
    return [len(chains[d]) - ranks[d] - ranks[d + 1] for d in range(len(chains))]


def small_cover_betti(P: SimplePolytope, char: CharFunction) -> List[int]:
    """b_i(Y; Q) as the sum over the mod-2 row space of reduced b_(i-1) of full subcomplexes."""
    if char.ring is not Ring.F2:
        raise WrongRing("small-cover Betti numbers need a mod-2 characteristic function")
    numbers = [0] * (P.dim + 1)
    for omega in product((0, 1), repeat=char.rank):
        support = [f for f in P.facets if sum(w * x for w, x in zip(omega, char.vector(f))) % 2]
        for d, b in enumerate(_reduced_betti(P, support)):
            if b and d < len(numbers):
                numbers[d] += b
    logger.debug("rational Betti numbers of the small cover: %s", numbers)
    return numbers


def rational_betti(space: Space, twisted: bool = False, prime: Optional[int] = None) -> BettiNumbers:
    """Betti numbers with Q coefficients (or Z_p, p an odd prime: the same numbers).

    ``twisted`` applies to toric fibres only and lets the involution act
    on H^2i(X; Q) by (-1)^i.
    """
    if prime is not None and (prime == 2 or not sympy.isprime(prime)):
        raise ParseError(f"coefficients Z_{prime} need an odd prime")
    label = f"Z_{prime}" if prime is not None else "Q"
    spheres = [(m, m + 1) for m in space.m]
    top = space.dim

    if space.family is Family.PPS:
        factors = spheres + [(n, n - p + 1) for n, p in space.pairs]
        degrees = [d for d, w in _signed_products(factors) if w % 2 == 0]
        return BettiNumbers(label, tuple(_accumulate(top, degrees)))

    if space.family is Family.PS:
        degrees = [d for d, w in _signed_products(spheres) if w % 2 == 0]
        if space.projective is not None:
            for n in space.projective:
                degrees = degrees + [d + n for d in degrees] if n % 2 else degrees
            return BettiNumbers(label, tuple(_accumulate(top, degrees)))
        P, char = space.fibre
        numbers = [0] * (top + 1)
        for degree in degrees:
            for t, b in enumerate(small_cover_betti(P, char)):
                numbers[degree + t] += b
        return BettiNumbers(label, tuple(numbers))

    ranks = _fibre_ranks(space)
    numbers = [0] * (top + 1)
    for degree, weight in _signed_products(spheres):
        for t, rank in enumerate(ranks):
            if not rank:
                continue
            sign = weight + (t // 2 if twisted else 0)
            if sign % 2 == 0:
                numbers[degree + t] += rank
    logger.debug("%s Betti numbers of %s: %s", label, space.label(), numbers)
    return BettiNumbers(label, tuple(numbers))
