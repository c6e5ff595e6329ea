# /src/commands/topology.py

import logging
from typing import List, Optional, Tuple

import click

from src.cellular import build_complex, closed_form_check, cohomology, dump_matrices
from src.models import HVectorReport, HomologyReport
from src.polytope import (
    SimplePolytope, VertexOrdering, default_ordering, h_vector, orient_edges, order_vertices,
    point, vertex_indices,
)
from src.repositories import PolytopeRepository
from src.spaces import Family, Space
from src.utils.errors import ParseError, UnsupportedFamily

from .common import emit, json_option, parse_ints, resolve_space, space_options

logger = logging.getLogger(__name__)


def choose_ordering(P: SimplePolytope, order: Optional[str] = None,
                    functional: Optional[str] = None) -> VertexOrdering:
    if order and functional:
        raise ParseError("give either --order or --functional, not both")
    if order:
        return order_vertices(P, [v.strip() for v in order.split(",")])
    if functional:
        return orient_edges(P, [x.strip() for x in functional.split(",")])
    return default_ordering(P)


def hvector_report(P: SimplePolytope, name: str, ordering: VertexOrdering) -> Tuple[List[str], HVectorReport]:
    h = h_vector(P, ordering)
    report = HVectorReport(polytope=name, order=list(ordering.order),
                           indices=vertex_indices(P, ordering), h=list(h.h))
    return [str(h)], report


def cellular_input(space: Space) -> Tuple[int, SimplePolytope]:
    if space.k == 1 and space.family is Family.PT:
        return space.m[0], space.fibre[0]
    if space.k == 1 and space.family is Family.PPS and not space.pairs:
        return space.m[0], point()
    raise UnsupportedFamily("cellular homology covers P(S^m, X) with a single sphere and a toric fibre")


def homology_report(space: Space, twisted: bool = False, dump: bool = False,
                    ordering: Optional[VertexOrdering] = None) -> Tuple[List[str], HomologyReport]:
    m, P = cellular_input(space)
    ordering = ordering or default_ordering(P)
    complex_ = build_complex(m, P, ordering, twisted=twisted)
    comparison = closed_form_check(m, P, ordering, twisted=twisted)
    groups = [str(g) for g in comparison.computed]
    dual = [str(g) for g in cohomology(complex_)]
    dual += ["0"] * (len(groups) - len(dual))
    lines = [f"H_{d} = {g}" for d, g in enumerate(groups)]
    lines.append("closed form: " + ("agrees" if comparison.agree else
                                    "differs in degrees " + ", ".join(map(str, comparison.mismatches))))
    matrices = None
    if dump:
        matrices = {str(d): entries for d, entries in dump_matrices(complex_).items()}
        for d, entries in matrices.items():
            lines.append(f"d_{d}: " + (" ".join(f"({r},{c},{v})" for r, c, v in entries) or "0"))
    report = HomologyReport(
        space=space.label(), twisted=twisted, homology=groups, cohomology=dual, euler=complex_.euler(),
        prediction_agrees=comparison.agree,
        mismatches=[f"H_{d}: predicted {comparison.predicted[d]}, computed {comparison.computed[d]}"
                    for d in comparison.mismatches],
        matrices=matrices,
    )
    return lines, report


@click.command("hvector")
@click.option("--polytope", "polytope_name", help="Polytope name or JSON path.")
@click.option("--fixture", help="Use the fibre polytope of a fixture.")
@click.option("--order", help="Abstract vertex order v1,v2,...")
@click.option("--functional", help="Linear functional c1,c2,... on the vertex coordinates.")
@json_option
def hvector(polytope_name, fixture, order, functional, json_path):
    """h-vector of a simple polytope under a generic vertex order."""
    if polytope_name:
        P, name = PolytopeRepository().GetPolytopeByName(polytope_name), polytope_name
    elif fixture:
        space = resolve_space(fixture=fixture)
        if space.family is Family.PPS:
            raise UnsupportedFamily("a PPS fixture has no fibre polytope")
        P, name = space.fibre[0], space.label()
    else:
        raise ParseError("give --polytope or --fixture")
    lines, report = hvector_report(P, name, choose_ordering(P, order, functional))
    emit(lines, report, json_path)


@click.command("homology")
@space_options
@click.option("--twisted", is_flag=True, help="Let conjugation act on the cell of v by (-1)^index(v).")
@click.option("--dump-matrices", "dump", is_flag=True, help="Print boundary matrices as sparse triples.")
@click.option("--order", help="Abstract vertex order of the fibre polytope.")
@json_option
def homology_command(twisted, dump, order, json_path, **options):
    """Integral homology of P(S^m, X) from its cell structure."""
    space = resolve_space(**options)
    _, P = cellular_input(space)
    lines, report = homology_report(space, twisted, dump, choose_ordering(P, order) if order else None)
    emit(lines, report, json_path)
