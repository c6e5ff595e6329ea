# /src/fields/families.py

"""Explicit Z_2-equivariant vector fields on products of spheres.

A point of S^d1 x ... x S^dq is a tuple of coordinate vectors, one per
factor; a field maps a point to a tuple of tangent vectors of the same
shape. Every involution used here is linear, so its derivative is the
involution itself.
"""

__all__ = [
    "Vector", "Point", "Involution", "FieldFamily",
    "sp_constructed", "linear_sphere_fields", "sphere_product_fields",
    "extend_by_sphere_fibre", "extend_by_cp1_fibre", "extend_trivially",
    "sphere_fibre_fields", "cp1_fibre_fields",
]

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Optional, Sequence, Tuple

from src.utils.errors import BadP, EmptyBase, ParseError

from .numbers import left_multiply

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
Point = Tuple[Vector, ...]
Field = Callable[[Point], Point]


@dataclass(frozen=True)
class Involution:
    """Per factor, the number of fixed leading coordinates; 0 is the antipodal map."""
    fixed: Tuple[int, ...]

    def apply(self, point: Point) -> Point:
        return tuple(tuple(x if i < p else -x for i, x in enumerate(v)) for v, p in zip(point, self.fixed))

    derivative = apply

    def label(self) -> str:
        return " x ".join("antipodal" if p == 0 else f"sigma_{p}" for p in self.fixed)


@dataclass(frozen=True)
class FieldFamily:
    factors: Tuple[int, ...]
    fields: Tuple[Field, ...]
    involution: Involution
    name: str
    provenance: str = ""

    @property
    def count(self) -> int:
        return len(self.fields)

    def evaluate(self, point: Point) -> Tuple[Point, ...]:
        return tuple(field(point) for field in self.fields)


def sp_constructed(m: int) -> int:
    """How many linear fields ``linear_sphere_fields`` builds on S^m."""
    if m % 2 == 0:
        return 0
    if (m + 1) % 8 == 0:
        return 7
    if (m + 1) % 4 == 0:
        return 3
    return 1


def _block_field(point: Point, factor: int, unit: int, block: int, shape: Tuple[int, ...]) -> Point:
    x = point[factor]
    image = []
    for start in range(0, len(x), block):
        image.extend(left_multiply(unit, x[start:start + block]))
    return tuple(tuple(image) if f == factor else tuple(Fraction(0) for _ in range(d + 1))
                 for f, d in enumerate(shape))


def _sphere_fields(m: int, factor: int, shape: Tuple[int, ...]) -> Tuple[Field, ...]:
    r = sp_constructed(m)
    block = {0: 0, 1: 2, 3: 4, 7: 8}[r]
    return tuple(partial(_block_field, factor=factor, unit=u, block=block, shape=shape) for u in range(1, r + 1))


def linear_sphere_fields(m: int) -> FieldFamily:
    """1, 3 or 7 fields on S^m from left multiplication in C, H or O blockwise; none for m even."""
    if m < 0:
        raise ParseError(f"sphere dimension must be non-negative, got {m}")
    shape = (m,)
    return FieldFamily(shape, _sphere_fields(m, 0, shape), Involution((0,)), f"linear(S^{m})",
                       "linear fields on odd sphere factors")


def sphere_product_fields(ms: Sequence[int]) -> FieldFamily:
    """Linear fields of each odd sphere, placed on its own factor of S^m1 x ... x S^mk."""
    shape = tuple(int(m) for m in ms)
    fields = ()
    for factor, m in enumerate(shape):
        fields += _sphere_fields(m, factor, shape)
    name = "linear(" + " x ".join(f"S^{m}" for m in shape) + ")"
    return FieldFamily(shape, fields, Involution((0,) * len(shape)), name,
                       "linear fields on odd sphere factors")


# --- sphere-fibre extension ------------------------------------------------

def _lift(point: Point, base_field: Field) -> Point:
    return base_field(point[:-1]) + (tuple(Fraction(0) for _ in point[-1]),)


def _mixed_field(point: Point, last: Field, j: int, corrupted: bool) -> Point:
    y = point[-1]
    scaled = tuple(tuple(y[j] * c for c in v) for v in last(point[:-1]))
    tail = tuple(y[i] * y[j] - (1 if i == j and not corrupted else 0) for i in range(len(y)))
    return scaled + (tail,)


def extend_by_sphere_fibre(m: int, n: int, p: int, base: Optional[FieldFamily] = None,
                           corrupted: bool = False) -> FieldFamily:
    """r + p - 1 fields on M x S^n from r equivariant fields v_1..v_r on M.

    w_i = (v_i, 0) for i < r and, for j = 1..p,
    w_(r+j-1) = (y_j v_r(x), (y_1 y_j, ..., y_j^2 - 1, ..., y_(n+1) y_j)).
    S^n carries sigma_p, fixing the first p coordinates. ``corrupted``
    drops the -1 and exists for regression tests.
    """
    base = base if base is not None else linear_sphere_fields(m)
    if base.count < 1:
        raise EmptyBase(f"{base.name} carries no equivariant field to extend")
    if not 1 <= p <= n:
        raise BadP(f"need 1 <= p <= n, got n = {n}, p = {p}")
    *head, last = base.fields
    fields = tuple(partial(_lift, base_field=v) for v in head)
    fields += tuple(partial(_mixed_field, last=last, j=j, corrupted=corrupted) for j in range(p))
    logger.debug("extending %s by S^%d with sigma_%d: %d fields", base.name, n, p, len(fields))
    return FieldFamily(base.factors + (n,), fields, Involution(base.involution.fixed + (p,)),
                       f"{base.name} x S^{n}[p={p}]", "sphere-fibre extension")


def extend_by_cp1_fibre(base: FieldFamily) -> FieldFamily:
    """k + 1 fields on M x CP^1 from k fields on M, with CP^1 = S^2 and conjugation a reflection."""
    if base.count < 1:
        raise EmptyBase(f"{base.name} carries no equivariant field to extend")
    family = extend_by_sphere_fibre(0, 2, 2, base=base)
    return FieldFamily(family.factors, family.fields, family.involution,
                       f"{base.name} x CP^1", "CP1-fibre extension")


def extend_trivially(base: FieldFamily, n: int, p: int = 0) -> FieldFamily:
    """The same fields on M x S^n, zero along the new factor."""
    fields = tuple(partial(_lift, base_field=v) for v in base.fields)
    return FieldFamily(base.factors + (n,), fields, Involution(base.involution.fixed + (p,)),
                       f"{base.name} x S^{n}", base.provenance)


def sphere_fibre_fields(ms: Sequence[int], pairs: Sequence[Tuple[int, int]]) -> FieldFamily:
    """Iterates the sphere-fibre extension over every pair with p_j >= 1."""
    family = sphere_product_fields(ms)
    steps = 0
    for n, p in pairs:
        if p >= 1 and family.count >= 1:
            family = extend_by_sphere_fibre(0, n, p, base=family)
            steps += 1
        else:
            family = extend_trivially(family, n, p)
    if steps > 1:
        family = FieldFamily(family.factors, family.fields, family.involution, family.name,
                             "sphere-fibre extension (iterated)")
    return family


def cp1_fibre_fields(ms: Sequence[int], cp: Sequence[int]) -> FieldFamily:
    """Iterates the CP^1-fibre extension over the CP^1 factors of a product of projective spaces."""
    family = sphere_product_fields(ms)
    steps = 0
    for n in cp:
        if n == 1 and family.count >= 1:
            family = extend_by_cp1_fibre(family)
            steps += 1
    if steps > 1:
        family = FieldFamily(family.factors, family.fields, family.involution, family.name,
                             "CP1-fibre extension (iterated)")
    return family
