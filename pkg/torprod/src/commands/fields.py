# /src/commands/fields.py

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import click

from src.config import Settings
from src.fields import (
    FieldFamily, Point, extend_by_sphere_fibre, extend_by_cp1_fibre, cp1_fibre_fields, linear_sphere_fields,
    sphere_fibre_fields, sphere_product_fields, verify_family,
)
from src.models import VerificationModel
from src.spaces import Family, Space
from src.utils.errors import ParseError

from .common import emit, json_option, parse_ints, resolve_space, space_options

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ["linear", "sphere-fibre", "cp1-fibre", "space"]


def fields_for_space(space: Space) -> FieldFamily:
    if space.family is Family.PPS:
        return sphere_fibre_fields(space.m, space.pairs)
    if space.family is Family.PT and space.projective is not None:
        return cp1_fibre_fields(space.m, space.projective)
    return sphere_product_fields(space.m)


def build_construction(construction: str, m: Optional[int], n: Optional[int] = None, p: Optional[int] = None,
                       corrupted: bool = False) -> FieldFamily:
    if m is None:
        raise ParseError(f"--construction {construction} needs --m")
    if construction == "linear":
        return linear_sphere_fields(m)
    if construction == "sphere-fibre":
        if n is None or p is None:
            raise ParseError("--construction sphere-fibre needs --n and --p")
        return extend_by_sphere_fibre(m, n, p, corrupted=corrupted)
    if construction == "cp1-fibre":
        return extend_by_cp1_fibre(linear_sphere_fields(m))
    raise ParseError(f"unknown construction {construction!r}")


def parse_point(text: str, factors: Sequence[int]) -> Point:
    """'1,0,0,0;0,0,1' gives one coordinate vector per sphere factor."""
    try:
        point = tuple(tuple(Fraction(x) for x in block.split(",")) for block in text.split(";"))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"--point expects rational coordinates, got {text!r}")
    if tuple(len(v) - 1 for v in point) != tuple(factors):
        raise ParseError(f"--point {text!r} does not lie in a product of spheres of dimensions {tuple(factors)}")
    return point


def verification_report(family: FieldFamily, trials: int, seed: int, workers: int = 1,
                        points: Sequence[Point] = ()) -> Tuple[List[str], VerificationModel]:
    report = verify_family(family, trials=trials, seed=seed, points=points, workers=workers)
    model = VerificationModel(**report.as_dict())
    lines = [
        f"family: {family.name}",
        f"provenance: {family.provenance}",
        f"fields: {family.count}",
        f"involution: {model.involution}",
        f"checked: {model.checked_points} points (seed {seed})",
        "result: " + ("ok" if model.ok else f"{len(model.counterexamples)} failures"),
    ]
    lines += model.counterexamples
    return lines, model


@click.command("verify-fields")
@space_options
@click.option("--construction", type=click.Choice(CONSTRUCTIONS), default="space", show_default=True,
              help="Which field family to check; 'space' uses the descriptor.")
@click.option("--n", type=int, help="Fibre sphere dimension for sphere-fibre.")
@click.option("--p", type=int, help="Fixed coordinates of sigma on the fibre sphere.")
@click.option("--corrupted", is_flag=True, help="Drop the -1 in the mixed fields (regression check).")
@click.option("--point", "point_texts", multiple=True, help="Extra sample point, factors separated by ';'.")
@click.option("--trials", type=click.IntRange(min=0), help="Random sample points [env TORPROD_TRIALS].")
@click.option("--seed", type=int, help="Random seed [env TORPROD_SEED].")
@click.option("--workers", type=click.IntRange(min=1), help="Threads for the trials [env TORPROD_WORKERS].")
@json_option
@click.pass_obj
def verify_fields(settings: Settings, construction, n, p, corrupted, point_texts, trials, seed, workers,
                  json_path, **options):
    """Exact check of tangency, independence and equivariance of explicit vector fields."""
    settings = settings or Settings()
    if construction == "space":
        family = fields_for_space(resolve_space(**options))
    else:
        m = parse_ints(options.get("m_text"), "--m")
        if m is not None and len(m) != 1:
            raise ParseError(f"--construction {construction} takes a single sphere dimension")
        family = build_construction(construction, m[0] if m else None, n, p, corrupted)
    points = [parse_point(t, family.factors) for t in point_texts]
    lines, model = verification_report(
        family,
        trials=settings.trials if trials is None else trials,
        seed=settings.seed if seed is None else seed,
        workers=settings.workers if workers is None else workers,
        points=points,
    )
    emit(lines, model, json_path)
