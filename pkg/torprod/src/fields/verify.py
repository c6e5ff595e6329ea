# /src/fields/verify.py

"""Exact checks of tangency, independence and equivariance at rational sphere points."""

__all__ = [
    "Counterexample", "VerificationReport", "sphere_point", "random_point",
    "field_matrix", "check_point", "verify_family",
]

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.utils.linalg import rank_over_q

from .families import FieldFamily, Involution, Point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    trial: int
    check: str
    point: str
    field: Optional[int] = None

    def describe(self) -> str:
        which = f" field {self.field + 1}" if self.field is not None else ""
        return f"trial {self.trial}: {self.check} failed{which} at {self.point}"


@dataclass
class VerificationReport:
    family: str
    count: int
    involution: str
    trials: int
    seed: int
    checked: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "fields": self.count,
            "involution": self.involution,
            "trials": self.trials,
            "seed": self.seed,
            "checked_points": self.checked,
            "ok": self.ok,
            "counterexamples": [c.describe() for c in self.counterexamples],
        }


def sphere_point(a: Sequence[int]) -> Tuple[Fraction, ...]:
    """Inverse stereographic projection of an integer vector: a point of the unit sphere S^len(a)."""
    norm = sum(int(x) * int(x) for x in a)
    scale = Fraction(1, norm + 1)
    return tuple(2 * int(x) * scale for x in a) + (Fraction(norm - 1, norm + 1),)


def random_point(factors: Sequence[int], rng: np.random.Generator, bound: int = 9) -> Point:
    return tuple(sphere_point(rng.integers(-bound, bound + 1, size=d)) for d in factors)


def _format_point(point: Point) -> str:
    return "(" + "; ".join(",".join(str(x) for x in v) for v in point) + ")"


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def field_matrix(family: FieldFamily, point: Point) -> List[List[Fraction]]:
    """One row per field: its value at the point, flattened over the factors."""
    return [[c for v in value for c in v] for value in family.evaluate(point)]


def check_point(family: FieldFamily, point: Point, trial: int,
                involution: Optional[Involution] = None) -> List[Counterexample]:
    involution = involution or family.involution
    label = _format_point(point)
    found = []
    if any(_dot(x, x) != 1 for x in point):
        return [Counterexample(trial, "unit sphere", label)]
    values = family.evaluate(point)
    for i, value in enumerate(values):
        if any(_dot(u, x) != 0 for u, x in zip(value, point)):
            found.append(Counterexample(trial, "tangency", label, i))
    if values:
        rank = rank_over_q(field_matrix(family, point))
        if rank != family.count:
            found.append(Counterexample(trial, "independence", label))
    mirrored = family.evaluate(involution.apply(point))
    for i, (value, image) in enumerate(zip(values, mirrored)):
        if image != involution.derivative(value):
            found.append(Counterexample(trial, "equivariance", label, i))
    return found


def verify_family(family: FieldFamily, involution: Optional[Involution] = None, trials: int = 100,
                  seed: int = 0, points: Sequence[Point] = (), workers: int = 1) -> VerificationReport:
    """Checks the family at ``trials`` seeded random points plus any explicit ``points``.

    Points are drawn up front, so the report does not depend on ``workers``.
    """
    involution = involution or family.involution
    rng = np.random.default_rng(seed)
    samples = [tuple(tuple(Fraction(c) for c in v) for v in p) for p in points]
    samples += [random_point(family.factors, rng) for _ in range(trials)]
    logger.info("verifying %s (%d fields) at %d points, seed %d, %d workers",
                family.name, family.count, len(samples), seed, workers)
    report = VerificationReport(family.name, family.count, involution.label(), trials, seed)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda args: check_point(family, args[1], args[0], involution),
                                        enumerate(samples)))
    else:
        results = [check_point(family, p, i, involution) for i, p in enumerate(samples)]
    for found in results:
        report.counterexamples.extend(found)
    report.checked = len(samples)
    if not report.ok:
        logger.warning("%s: %d counterexamples", family.name, len(report.counterexamples))
    return report
