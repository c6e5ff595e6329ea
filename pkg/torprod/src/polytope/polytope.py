# /src/polytope/polytope.py

"""Combinatorics of simple polytopes.

A polytope is stored as its facet-vertex incidence: every vertex is
identified with the n facets through it. Edges, faces, vertex orders,
indices and the h-vector are derived from that table alone; vertex
coordinates, when present, only serve to evaluate linear functionals.
"""

__all__ = [
    "SimplePolytope", "VertexOrdering", "HVector",
    "build_polytope", "orient_edges", "order_vertices", "default_ordering",
    "vertex_indices", "h_vector", "faces_of_dim",
]

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.utils.errors import (
    DegenerateFunctional, DimensionMismatch, Disconnected, DuplicateVertex,
    InvalidOrdering, NotSimple,
)

logger = logging.getLogger(__name__)

Face = FrozenSet[str]


@dataclass(frozen=True)
class SimplePolytope:
    dim: int
    facets: Tuple[str, ...]
    vertices: Tuple[str, ...]
    incidence: Mapping[str, Face] = field(compare=False)
    edges: Tuple[Tuple[str, str], ...] = ()
    coordinates: Optional[Mapping[str, Tuple[Fraction, ...]]] = field(default=None, compare=False)

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def neighbours(self, vertex: str) -> List[str]:
        return [b if a == vertex else a for a, b in self.edges if vertex in (a, b)]

    def facet_position(self, facet: str) -> int:
        return self.facets.index(facet)

    def sort_facets(self, facets: Iterable[str]) -> Tuple[str, ...]:
        return tuple(sorted(facets, key=self.facet_position))

    def is_face(self, facets: Iterable[str]) -> bool:
        """A facet set is a (non-empty) face iff some vertex lies on all of them."""
        wanted = frozenset(facets)
        return any(wanted <= incident for incident in self.incidence.values())

    def vertices_of(self, face: Iterable[str]) -> List[str]:
        face = frozenset(face)
        return [v for v in self.vertices if face <= self.incidence[v]]


def build_polytope(incidence_table: Mapping[str, Iterable[str]], n: int,
                   facets: Optional[Sequence[str]] = None,
                   coordinates: Optional[Mapping[str, Sequence]] = None) -> SimplePolytope:
    """Validates an incidence table and constructs the edge graph."""
    if n < 0:
        raise DimensionMismatch(f"dimension must be non-negative, got {n}")
    if not incidence_table:
        raise NotSimple("incidence table is empty")

    vertices = tuple(incidence_table)
    incidence: Dict[str, Face] = {}
    seen: Dict[Face, str] = {}
    for v in vertices:
        incident = frozenset(incidence_table[v])
        if len(incident) != n:
            raise NotSimple(f"vertex {v} lies on {len(incident)} facets, expected {n}")
        if incident in seen:
            raise DuplicateVertex(f"vertices {seen[incident]} and {v} share the facet set {sorted(incident)}")
        seen[incident] = v
        incidence[v] = incident

    used = set().union(*incidence.values())
    if facets is None:
        ordered: List[str] = []
        for v in vertices:
            for f in incidence_table[v]:
                if f not in ordered:
                    ordered.append(f)
        facets = ordered
    facets = tuple(facets)
    if len(set(facets)) != len(facets):
        raise NotSimple("facet list contains duplicates")
    missing = used - set(facets)
    if missing:
        raise NotSimple(f"vertices reference undeclared facets {sorted(missing)}")
    unused = set(facets) - used
    if unused:
        raise NotSimple(f"facets {sorted(unused)} contain no vertex")
    if n >= 1 and len(facets) < n + 1:
        raise NotSimple(f"{len(facets)} facets cannot bound a {n}-polytope")

    edges = tuple(
        (a, b) for a, b in combinations(vertices, 2)
        if len(incidence[a] & incidence[b]) == n - 1
    ) if n >= 1 else ()

    degree = {v: 0 for v in vertices}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    for v, d in degree.items():
        if d != n:
            raise NotSimple(f"vertex {v} has {d} neighbours in the edge graph, expected {n}")

    _check_connected(vertices, edges)

    coords = None
    if coordinates is not None:
        coords = {}
        for v in vertices:
            if v not in coordinates:
                raise DimensionMismatch(f"no coordinates for vertex {v}")
            point = tuple(Fraction(x) for x in coordinates[v])
            if len(point) != n:
                raise DimensionMismatch(f"vertex {v} has {len(point)} coordinates, expected {n}")
            coords[v] = point

    logger.debug("built %d-polytope: %d facets, %d vertices, %d edges",
                 n, len(facets), len(vertices), len(edges))
    return SimplePolytope(n, facets, vertices, incidence, edges, coords)


def _check_connected(vertices: Sequence[str], edges: Sequence[Tuple[str, str]]) -> None:
    adjacency: Dict[str, List[str]] = {v: [] for v in vertices}
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    reached = {vertices[0]}
    queue = deque([vertices[0]])
    while queue:
        for w in adjacency[queue.popleft()]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != len(vertices):
        raise Disconnected(f"edge graph reaches {len(reached)} of {len(vertices)} vertices")


# --- orderings -------------------------------------------------------------

@dataclass(frozen=True)
class VertexOrdering:
    functional: Optional[Tuple[Fraction, ...]]
    order: Tuple[str, ...]
    orientation: Tuple[Tuple[str, str], ...]


def _orient(P: SimplePolytope, order: Sequence[str]) -> Tuple[Tuple[str, str], ...]:
    rank = {v: i for i, v in enumerate(order)}
    return tuple((a, b) if rank[a] < rank[b] else (b, a) for a, b in P.edges)


def orient_edges(P: SimplePolytope, functional: Sequence) -> VertexOrdering:
    """Orders vertices by an exact linear functional on the vertex coordinates."""
    if P.coordinates is None:
        raise DegenerateFunctional("polytope carries no coordinates; supply an abstract order instead")
    functional = tuple(Fraction(x) for x in functional)
    if len(functional) != P.dim:
        raise DimensionMismatch(f"functional has {len(functional)} entries, expected {P.dim}")

    value = {v: sum((f * x for f, x in zip(functional, P.coordinates[v])), Fraction(0))
             for v in P.vertices}
    for a, b in P.edges:
        if value[a] == value[b]:
            raise DegenerateFunctional(f"adjacent vertices {a} and {b} tie at {value[a]}")
    # non-adjacent ties do not affect any index; break them by listing order
    order = tuple(sorted(P.vertices, key=lambda v: (value[v], P.vertices.index(v))))
    return VertexOrdering(functional, order, _orient(P, order))


def order_vertices(P: SimplePolytope, order: Sequence[str]) -> VertexOrdering:
    """Accepts an abstract total order; every face must have a unique lowest vertex."""
    order = tuple(order)
    if sorted(order) != sorted(P.vertices):
        raise InvalidOrdering("order must list every vertex exactly once")
    rank = {v: i for i, v in enumerate(order)}
    for face in _all_faces(P):
        members = set(P.vertices_of(face))
        minima = [v for v in members
                  if not any(w in members and rank[w] < rank[v] for w in P.neighbours(v))]
        if len(minima) != 1:
            raise InvalidOrdering(
                f"face {sorted(face)} has {len(minima)} local minima {sorted(minima)} under this order")
    return VertexOrdering(None, order, _orient(P, order))


def default_ordering(P: SimplePolytope) -> VertexOrdering:
    """Tries a few generic functionals on the coordinates, then the listing order."""
    if P.coordinates is not None:
        for base in (2, 3, 7, 31):
            try:
                return orient_edges(P, [base ** i for i in range(P.dim)])
            except DegenerateFunctional:
                logger.debug("functional with base %d is degenerate", base)
    return order_vertices(P, P.vertices)


def vertex_indices(P: SimplePolytope, ordering: VertexOrdering) -> Dict[str, int]:
    """index(v) = number of edges pointing into v."""
    index = {v: 0 for v in P.vertices}
    for _, head in ordering.orientation:
        index[head] += 1
    return index


# --- h-vector and faces ----------------------------------------------------

@dataclass(frozen=True)
class HVector:
    h: Tuple[int, ...]

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.h)


def h_vector(P: SimplePolytope, ordering: VertexOrdering) -> HVector:
    h = [0] * (P.dim + 1)
    for i in vertex_indices(P, ordering).values():
        h[i] += 1
    if h != h[::-1]:
        raise InvalidOrdering(f"h-vector {h} violates Dehn-Sommerville; the ordering is not generic")
    return HVector(tuple(h))


def _all_faces(P: SimplePolytope) -> List[Face]:
    faces = set()
    for incident in P.incidence.values():
        for size in range(len(incident)):
            for subset in combinations(sorted(incident), size):
                faces.add(frozenset(subset))
    return sorted(faces, key=lambda f: (len(f), P.sort_facets(f)))


def faces_of_dim(P: SimplePolytope, d: int) -> List[Face]:
    """Faces of dimension d, each given by the facets containing it."""
    if not 0 <= d <= P.dim:
        raise DimensionMismatch(f"face dimension {d} outside 0..{P.dim}")
    size = P.dim - d
    found = set()
    for incident in P.incidence.values():
        for subset in combinations(incident, size):
            found.add(frozenset(subset))
    return sorted(found, key=P.sort_facets)
