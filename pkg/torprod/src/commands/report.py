# /src/commands/report.py

import json
import logging
from typing import Callable, Dict, List, Optional, Tuple

import click

from src.cellular import build_complex
from src.config import Settings
from src.models import (
    BoundModel, ClassReport, CohomologyReport, EulerReport, FullReport, HVectorReport, HomologyReport,
    SpaceDescriptor, SpanReportModel, VerificationModel,
)
from src.polytope import default_ordering
from src.projprod import rational_betti
from src.repositories import FixtureRepository
from src.spaces import Family, Space
from src.span import SpanReport, euler_characteristic, span_bounds
from src.utils.errors import InputError, UnsupportedFamily

from .classes import cohomology_report, pontryagin_report, sw_report
from .common import emit, json_option, resolve_space, space_options
from .fields import fields_for_space, verification_report
from .topology import cellular_input, homology_report, hvector_report

logger = logging.getLogger(__name__)

REPORT_MODELS = {
    "SpaceDescriptor": SpaceDescriptor,
    "HVectorReport": HVectorReport,
    "CohomologyReport": CohomologyReport,
    "HomologyReport": HomologyReport,
    "ClassReport": ClassReport,
    "EulerReport": EulerReport,
    "SpanReportModel": SpanReportModel,
    "VerificationModel": VerificationModel,
    "FullReport": FullReport,
}


def euler_report(space: Space) -> Tuple[List[str], EulerReport]:
    chi = euler_characteristic(space)
    report = EulerReport(space=space.label(), euler=chi)
    try:
        report.betti_euler = rational_betti(space).euler()
    except InputError as e:
        logger.info("no Betti cross-check for %s: %s", space.label(), e.detail)
    try:
        m, P = cellular_input(space)
        report.cellular_euler = build_complex(m, P, default_ordering(P)).euler()
    except InputError as e:
        logger.info("no cellular cross-check for %s: %s", space.label(), e.detail)
    return [str(chi)], report


def span_model(report: SpanReport) -> SpanReportModel:
    verdict = report.stably_parallelizable
    return SpanReportModel(
        space=report.space, dim=report.dim, euler=report.euler,
        span_lower=report.span_lower, span_upper=report.span_upper, span_cited=report.span_cited,
        provenance=report.provenance,
        lower_bounds=[BoundModel(value=b.value, provenance=b.provenance) for b in report.lower_bounds],
        stasp_equals_span=report.stasp_equals_span, stasp_note=report.stasp_note,
        stably_parallelizable=verdict.verdict.value if verdict else "",
        reason=verdict.reason if verdict else "",
    )


def span_report(space: Space) -> Tuple[List[str], SpanReportModel]:
    model = span_model(span_bounds(space))
    lines = [
        f"dim: {model.dim}",
        f"euler: {model.euler}",
        f"span: {model.span_lower} <= span <= {model.span_upper}",
        f"lower bound from: {model.provenance}",
    ]
    if model.span_cited:
        lines.append(f"cited lower bound: {model.span_cited} (Radon-Hurwitz)")
    lines.append(f"stable span = span: {'yes' if model.stasp_equals_span else 'no'} ({model.stasp_note})")
    lines.append(f"stably parallelizable: {model.stably_parallelizable} ({model.reason})")
    return lines, model


def full_report(space: Space, settings: Settings) -> Tuple[List[str], FullReport]:
    """Every computation that applies to the space; the rest are listed as skipped."""
    report = FullReport(space=space.label())
    lines = [f"# {space.label()}"]

    def hvector():
        if space.family is Family.PPS:
            raise UnsupportedFamily("a sphere-product fibre has no polytope")
        P = space.fibre[0]
        return hvector_report(P, space.name or space.label(), default_ordering(P))

    sections: Dict[str, Callable[[], Tuple[List[str], object]]] = {
        "hvector": hvector,
        "cohomology F2": lambda: cohomology_report(space, "F2"),
        "cohomology Q": lambda: cohomology_report(space, "Q"),
        "homology": lambda: homology_report(space),
        "sw-class": lambda: sw_report(space),
        "pontryagin": lambda: pontryagin_report(space),
        "euler": lambda: euler_report(space),
        "span": lambda: span_report(space),
        "verify-fields": lambda: verification_report(fields_for_space(space), settings.trials, settings.seed,
                                                     settings.workers),
    }
    for name, compute in sections.items():
        lines.append(f"== {name} ==")
        try:
            section_lines, model = compute()
        except InputError as e:
            report.skipped[name] = e.detail
            lines.append(f"skipped: {e.detail}")
            continue
        lines += section_lines
        if name == "hvector":
            report.hvector = model
        elif name.startswith("cohomology"):
            report.cohomology.append(model)
        elif name == "homology":
            report.homology = model
        elif name in ("sw-class", "pontryagin"):
            report.classes.append(model)
        elif name == "euler":
            report.euler = model
        elif name == "span":
            report.span = model
        else:
            report.fields = model
    return lines, report


@click.command("euler")
@space_options
@json_option
def euler(json_path, **options):
    """Euler characteristic chi(M) chi(N) / 2."""
    lines, report = euler_report(resolve_space(**options))
    emit(lines, report, json_path)


@click.command("span")
@space_options
@json_option
def span(json_path, **options):
    """Span bounds and the stable-parallelizability verdict."""
    lines, report = span_report(resolve_space(**options))
    emit(lines, report, json_path)


@click.command("all")
@space_options
@json_option
@click.pass_obj
def all_command(settings: Settings, json_path, **options):
    """Run every applicable computation on one space."""
    lines, report = full_report(resolve_space(**options), settings or Settings())
    emit(lines, report, json_path)


@click.command("fixtures")
@click.option("--export", "export_name", help="Write this fixture's descriptor as JSON.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Target file for --export.")
def fixtures(export_name: Optional[str], out_path: Optional[str]):
    """List the built-in fixtures and the named polytopes and functions."""
    repository = FixtureRepository()
    if export_name:
        repository.ExportFixture(export_name, out_path or f"{export_name}.json")
        return
    for name, description in repository.ListAllFixtures():
        click.echo(f"{name:20} {description}")
    click.echo(f"{'polytopes':20} {', '.join(repository.polytopes.ListAllPolytopes())}")
    click.echo(f"{'char functions':20} {', '.join(repository.polytopes.ListAllCharFunctions())}")


@click.command("schema")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Write the schemas to a file.")
def schema(out_path: Optional[str]):
    """JSON schema of the descriptor and of every report."""
    text = json.dumps({name: model.model_json_schema() for name, model in REPORT_MODELS.items()}, indent=2)
    if out_path:
        with open(out_path, "w") as f:
            f.write(text + "\n")
    else:
        click.echo(text)
