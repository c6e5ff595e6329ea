# /src/span/span.py

"""Span bounds and stable-parallelizability verdicts for the three families."""

__all__ = ["Bound", "Verdict", "StableVerdict", "SpanReport", "span_bounds", "stable_parallelizability"]

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.fields import cp1_fibre_fields, sphere_fibre_fields, sphere_product_fields
from src.projprod import pps_total_sw, smallcover_total_sw, toric_total_sw
from src.rings import first_pontryagin, total_stiefel_whitney
from src.spaces import Family, Space
from src.utils.errors import HypothesisViolation

from .euler import euler_characteristic, radon_hurwitz_span

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    NO = "No"
    UNKNOWN = "Unknown"
    YES_CANDIDATE = "YesCandidate"


@dataclass(frozen=True)
class Bound:
    value: int
    provenance: str


@dataclass(frozen=True)
class StableVerdict:
    verdict: Verdict
    reason: str = ""

    def format(self) -> str:
        return f"{self.verdict.value} ({self.reason})" if self.reason else self.verdict.value


@dataclass
class SpanReport:
    space: str
    dim: int
    euler: int
    span_lower: int
    span_upper: int
    span_cited: int
    lower_bounds: List[Bound] = field(default_factory=list)
    stasp_equals_span: bool = False
    stasp_note: str = ""
    stably_parallelizable: Optional[StableVerdict] = None

    @property
    def provenance(self) -> str:
        best = [b.provenance for b in self.lower_bounds if b.value == self.span_lower]
        return best[-1] if best else ""


# --- lower bounds ----------------------------------------------------------

def _constructed_bounds(space: Space) -> List[Bound]:
    base = sphere_product_fields(space.m)
    bounds = [Bound(base.count, base.provenance)]
    if space.family is Family.PPS:
        family = sphere_fibre_fields(space.m, space.pairs)
    elif space.family is Family.PT and space.projective is not None:
        family = cp1_fibre_fields(space.m, space.projective)
    else:
        return bounds
    if family.provenance != base.provenance:
        bounds.append(Bound(family.count, family.provenance))
    return bounds


def _cited_bound(space: Space) -> int:
    r = sum(radon_hurwitz_span(m) for m in space.m)
    if r < 1:
        return 0
    if space.family is Family.PPS:
        return r + sum(p - 1 for _, p in space.pairs if p >= 1)
    if space.family is Family.PT and space.projective is not None:
        return r + sum(1 for n in space.projective if n == 1)
    return r


def _stasp(space: Space) -> Tuple[bool, str]:
    if space.family is not Family.PPS:
        return False, "parity criterion covers sphere-product fibres only"
    odd = any(m % 2 for m in space.m) or any(n % 2 for n, _ in space.pairs)
    if space.dim % 2 == 0 and odd:
        return True, "even dimension with an odd sphere factor"
    return False, "parity criterion does not apply"


def span_bounds(space: Space, with_verdict: bool = True) -> SpanReport:
    chi = euler_characteristic(space)
    upper = 0 if chi != 0 else space.dim
    bounds = _constructed_bounds(space)
    lower = max(b.value for b in bounds)
    cited = _cited_bound(space) if chi == 0 else 0
    flag, note = _stasp(space)
    report = SpanReport(space.label(), space.dim, chi, lower, upper, cited, bounds, flag, note)
    if with_verdict:
        report.stably_parallelizable = stable_parallelizability(space)
    logger.info("%s: %d <= span <= %d", space.label(), lower, upper)
    return report


# --- stable parallelizability ----------------------------------------------

def _fibre_obstruction(space: Space) -> Optional[str]:
    P, char = space.fibre
    if space.family is Family.PT:
        p1 = first_pontryagin(P, char, variable=space.variable)
        if not p1.is_zero:
            return f"p1 of the fibre is {p1.value.format()}, non-zero"
    w = total_stiefel_whitney(P, char, variable=space.variable)
    if not w.is_one:
        return f"w of the fibre is {w.format()}, not 1"
    return None


def _family_obstruction(space: Space) -> Optional[str]:
    try:
        if space.family is Family.PPS:
            w = pps_total_sw(space.m, space.pairs, splitting="thom")
        elif space.projective is None:
            return None
        elif space.family is Family.PT:
            w = toric_total_sw(space)
        else:
            w = smallcover_total_sw(space)
    except HypothesisViolation as e:
        logger.debug("no family Stiefel-Whitney class for %s: %s", space.label(), e.detail)
        return None
    if not w.is_one:
        return f"w = {w.format()}, not 1"
    return None


def _certified(space: Space) -> bool:
    # P(S^m, CP^1 x CP^1) for m = 1, 3, 7
    return (space.family is Family.PT and space.projective is not None
            and tuple(space.projective) == (1, 1) and space.k == 1 and space.m[0] in (1, 3, 7))


def stable_parallelizability(space: Space) -> StableVerdict:
    if space.family is Family.PT and space.projective is not None:
        big = [n for n in space.projective if n >= 2]
        if big:
            return StableVerdict(Verdict.NO, f"fibre factor CP^{big[0]} with n >= 2")
    if space.family is not Family.PPS:
        reason = _fibre_obstruction(space)
        if reason:
            return StableVerdict(Verdict.NO, reason)
    reason = _family_obstruction(space)
    if reason:
        return StableVerdict(Verdict.NO, reason)
    if _certified(space):
        return StableVerdict(Verdict.YES_CANDIDATE, "no obstruction; listed as stably parallelizable")
    return StableVerdict(Verdict.UNKNOWN, "no obstruction found")
