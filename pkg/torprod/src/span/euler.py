# /src/span/euler.py

__all__ = ["euler_characteristic", "fibre_euler", "radon_hurwitz", "radon_hurwitz_span"]

import logging
from math import prod

from src.polytope import default_ordering, h_vector
from src.spaces import Family, Space
from src.utils.errors import ParseError

logger = logging.getLogger(__name__)


def fibre_euler(space: Space) -> int:
    """chi(X): |V(Q)| for a toric manifold, sum (-1)^i h_i for a small cover."""
    if space.family is Family.PPS:
        return prod(1 + (-1) ** n for n, _ in space.pairs)
    if space.projective is not None:
        if space.family is Family.PT:
            return prod(n + 1 for n in space.projective)
        return prod(1 if n % 2 == 0 else 0 for n in space.projective)
    P, _ = space.fibre
    if space.family is Family.PT:
        return len(P.vertices)
    h = h_vector(P, default_ordering(P)).h
    return sum((-1) ** i * x for i, x in enumerate(h))


def euler_characteristic(space: Space) -> int:
    """chi(P(M, N)) = chi(M) chi(N) / 2."""
    sphere_part = prod(1 + (-1) ** m for m in space.m)
    value = sphere_part * fibre_euler(space) // 2
    logger.debug("chi(%s) = %d", space.label(), value)
    return value


def radon_hurwitz(n: int) -> int:
    """rho(n) = 8a + 2^b for n = 2^(4a+b) * odd, 0 <= b <= 3."""
    if n < 1:
        raise ParseError(f"the Radon-Hurwitz number needs n >= 1, got {n}")
    power = 0
    while n % 2 == 0:
        n //= 2
        power += 1
    a, b = divmod(power, 4)
    return 8 * a + 2 ** b


def radon_hurwitz_span(n: int) -> int:
    """sp(S^n) = rho(n + 1) - 1."""
    if n < 0:
        raise ParseError(f"sphere dimension must be non-negative, got {n}")
    return radon_hurwitz(n + 1) - 1
