# /src/commands/classes.py

import logging
from typing import List, Optional, Tuple

import click

from src.models import ClassReport, CohomologyReport
from src.projprod import (
    pps_algebra, pps_total_sw, rational_betti, smallcover_total_sw, tensor_cohomology, toric_total_sw,
)
from src.rings import first_pontryagin, present_cohomology, total_stiefel_whitney
from src.spaces import Family, Space
from src.utils import poincare_polynomial
from src.utils.errors import ParseError, UnsupportedFamily

from .common import emit, json_option, resolve_space, space_options

logger = logging.getLogger(__name__)


def _cohomology_lines(report: CohomologyReport) -> List[str]:
    lines = [
        f"H*({report.space}; {report.ring})",
        f"poincare: {poincare_polynomial(report.poincare)}",
        f"total: {report.total}",
    ]
    lines += [f"relation: {r}" for r in report.relations]
    for degree, names in (report.basis or {}).items():
        lines.append(f"H^{degree}: " + " ".join(names))
    if not report.base_ring_certified:
        lines.append("base ring: outside the ring hypotheses (additive structure only)")
    return lines


def mod2_cohomology(space: Space, basis: bool = False) -> CohomologyReport:
    if space.family is Family.PPS:
        algebra = pps_algebra(space.m, space.pairs)
        certified, relations = True, algebra.relations()
        poincare = algebra.poincare()
        names = {str(d): [algebra.label(e) for e in algebra.basis(d)]
                 for d in range(len(poincare)) if poincare[d]} if basis else None
    else:
        algebra = tensor_cohomology(space)
        certified, relations = algebra.base_ring_certified, algebra.relations()
        poincare = algebra.poincare()
        names = {str(d): [algebra.label(t) for t in algebra.basis(d)]
                 for d in range(len(poincare)) if poincare[d]} if basis else None
    return CohomologyReport(space=space.label(), ring="F2", poincare=poincare, total=sum(poincare),
                            relations=relations, basis=names, base_ring_certified=certified)


def rational_cohomology(space: Space, twisted: bool = False, prime: Optional[int] = None) -> CohomologyReport:
    betti = rational_betti(space, twisted=twisted, prime=prime)
    return CohomologyReport(space=space.label(), ring=betti.coefficients, poincare=list(betti.numbers),
                            total=sum(betti.numbers))


def fibre_cohomology(space: Space, basis: bool = False) -> CohomologyReport:
    P, char = space.fibre
    presentation = present_cohomology(P, char, variable=space.variable)
    ranks = presentation.ranks()
    names = {str(d): presentation.basis(d) for d in range(len(ranks)) if ranks[d]} if basis else None
    label = space.name or space.label()
    return CohomologyReport(space=f"fibre of {label}", ring=presentation.ring.value, poincare=ranks,
                            total=sum(ranks), basis=names)


def cohomology_report(space: Space, ring: str = "F2", prime: Optional[int] = None, basis: bool = False,
                      twisted: bool = False, fibre: bool = False) -> Tuple[List[str], CohomologyReport]:
    if fibre:
        report = fibre_cohomology(space, basis)
    elif ring == "F2":
        if prime is not None:
            raise ParseError("--prime applies to rational coefficients only")
        report = mod2_cohomology(space, basis)
    else:
        report = rational_cohomology(space, twisted, prime)
    return _cohomology_lines(report), report


def sw_report(space: Space, splitting: str = "stated", fibre: bool = False) -> Tuple[List[str], ClassReport]:
    if fibre:
        P, char = space.fibre
        w = total_stiefel_whitney(P, char, variable=space.variable)
        components = {str(c.degree): c.format() for c in w.components if not c.is_zero}
        report = ClassReport(space=space.label(), kind="w(fibre)", value=w.format(), components=components,
                             trivial=w.is_one)
    else:
        if space.family is Family.PPS:
            w = pps_total_sw(space.m, space.pairs, splitting=splitting)
        elif space.family is Family.PT:
            w = toric_total_sw(space)
        else:
            w = smallcover_total_sw(space)
        report = ClassReport(space=space.label(), kind="w", value=w.format(), components=w.as_dict(),
                             trivial=w.is_one)
    return [f"{report.kind} = {report.value}"], report


def pontryagin_report(space: Space) -> Tuple[List[str], ClassReport]:
    if space.family is not Family.PT:
        raise UnsupportedFamily("the first Pontryagin class is computed for toric fibres")
    P, char = space.fibre
    p1 = first_pontryagin(P, char, variable=space.variable)
    report = ClassReport(space=space.label(), kind="p1(fibre)", value=p1.value.format(),
                         components={"4": p1.value.format()}, trivial=p1.is_zero)
    return [p1.format()], report


@click.command("cohomology")
@space_options
@click.option("--ring", "ring", type=click.Choice(["F2", "Q"], case_sensitive=False), default="F2",
              show_default=True)
@click.option("--prime", type=int, help="Odd prime p: Betti numbers with Z_p coefficients.")
@click.option("--twisted", is_flag=True, help="Rational coefficients with the twisted fibre action.")
@click.option("--basis", is_flag=True, help="List an additive basis in every degree.")
@click.option("--fibre", is_flag=True, help="Present the cohomology of the fibre instead.")
@json_option
def cohomology_command(ring, prime, twisted, basis, fibre, json_path, **options):
    """Cohomology ring (mod 2) or Betti numbers (Q, Z_p) of the space."""
    space = resolve_space(**options)
    ring = ring.upper()
    if prime is not None:
        ring = "Q"
    lines, report = cohomology_report(space, ring, prime, basis, twisted, fibre)
    emit(lines, report, json_path)


@click.command("sw-class")
@space_options
@click.option("--splitting", type=click.Choice(["stated", "thom"]), default="stated", show_default=True,
              help="Line-bundle count per sphere fibre for PPS.")
@click.option("--fibre", is_flag=True, help="Total Stiefel-Whitney class of the fibre instead.")
@json_option
def sw_class(splitting, fibre, json_path, **options):
    """Total Stiefel-Whitney class."""
    space = resolve_space(**options)
    lines, report = sw_report(space, splitting, fibre)
    emit(lines, report, json_path)


@click.command("pontryagin")
@space_options
@json_option
def pontryagin(json_path, **options):
    """First Pontryagin class of the toric fibre."""
    space = resolve_space(**options)
    lines, report = pontryagin_report(space)
    emit(lines, report, json_path)
