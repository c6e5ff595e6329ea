# /src/commands/common.py

"""Options and helpers shared by every command."""

import logging
from pathlib import Path
from typing import List, Optional, Tuple

import click
from pydantic import BaseModel

from src.models import SpaceDescriptor, parse_descriptor
from src.repositories import FixtureRepository
from src.spaces import Family, Space
from src.utils.errors import ParseError

logger = logging.getLogger(__name__)


def parse_ints(text: Optional[str], what: str) -> Optional[List[int]]:
    if text is None:
        return None
    if text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated list of integers, got {text!r}")


def parse_pair(text: str) -> Tuple[int, int]:
    try:
        n, p = text.split(":")
        return int(n), int(p)
    except ValueError:
        raise ParseError(f"--pair expects n:p, got {text!r}")


def space_options(command):
    """Descriptor flags: --fixture, --descriptor, or the inline --family/--m/... set."""
    options = [
        click.option("--fixture", help="Built-in fixture name (see 'torprod fixtures')."),
        click.option("--descriptor", "descriptor_path", type=click.Path(dir_okay=False),
                     help="JSON space descriptor."),
        click.option("--family", type=click.Choice([f.value for f in Family], case_sensitive=False)),
        click.option("--m", "m_text", help="Sphere dimensions, e.g. 2,4."),
        click.option("--pair", "pair_texts", multiple=True, help="PPS fibre sphere n:p (repeatable)."),
        click.option("--cp", "cp_text", help="Toric fibre CP^n1 x ... as n1,n2,..."),
        click.option("--rp", "rp_text", help="Small-cover fibre RP^n1 x ... as n1,n2,..."),
        click.option("--polytope", help="Polytope name or JSON path."),
        click.option("--char", "char_name", help="Characteristic function name or JSON path."),
        click.option("--r", "r", type=int, help="Twist r for the hirzebruch function."),
        click.option("--var", "variable", default=None, help="Generator prefix for printed classes."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def json_option(command):
    return click.option("--json", "json_path", type=click.Path(dir_okay=False),
                        help="Also write the report as JSON.")(command)


def resolve_descriptor(fixture=None, descriptor_path=None, family=None, m_text=None, pair_texts=(),
                       cp_text=None, rp_text=None, polytope=None, char_name=None, r=None,
                       variable=None, **_) -> SpaceDescriptor:
    fixtures = FixtureRepository()
    if fixture:
        descriptor = fixtures.GetDescriptorByName(fixture, r)
    elif descriptor_path:
        try:
            text = Path(descriptor_path).read_text()
        except OSError as e:
            raise ParseError(f"cannot read {descriptor_path}: {e.strerror}") from e
        descriptor = parse_descriptor(text)
    else:
        if family is None or m_text is None:
            raise ParseError("give --fixture, --descriptor, or at least --family and --m")
        fields = {
            "family": Family(family.upper()),
            "m": parse_ints(m_text, "--m"),
            "pairs": [parse_pair(t) for t in pair_texts],
            "cp": parse_ints(cp_text, "--cp"),
            "rp": parse_ints(rp_text, "--rp"),
            "polytope": polytope,
            "char": char_name,
            "r": r,
        }
        try:
            descriptor = SpaceDescriptor(**fields)
        except ValueError as e:
            raise ParseError(str(e)) from e
    if variable:
        descriptor = descriptor.model_copy(update={"variable": variable})
    return descriptor


def resolve_space(**options) -> Space:
    return FixtureRepository().ResolveDescriptor(resolve_descriptor(**options))


def emit(lines: List[str], report: Optional[BaseModel], json_path: Optional[str]) -> None:
    for line in lines:
        click.echo(line)
    if json_path and report is not None:
        Path(json_path).write_text(report.model_dump_json(indent=2) + "\n")
        logger.info("wrote %s", json_path)

