# /src/polytope/generators.py

"""Built-in simple polytopes with rational vertex coordinates."""

from itertools import product as cartesian
from typing import Dict, List

from src.polytope.polytope import SimplePolytope, build_polytope
from src.utils.errors import DimensionMismatch


def point() -> SimplePolytope:
    return build_polytope({"v0": []}, 0, facets=[], coordinates={"v0": ()})


def simplex(n: int) -> SimplePolytope:
    """Facets F1..Fn are x_i = 0, F{n+1} is x_1 + ... + x_n = 1; v0 is the origin, vi = e_i."""
    if n < 0:
        raise DimensionMismatch(f"simplex dimension must be non-negative, got {n}")
    if n == 0:
        return point()
    facets = [f"F{i}" for i in range(1, n + 2)]
    table: Dict[str, List[str]] = {"v0": facets[:n]}
    coordinates = {"v0": [0] * n}
    for i in range(1, n + 1):
        table[f"v{i}"] = [f for k, f in enumerate(facets, start=1) if k != i]
        coordinates[f"v{i}"] = [1 if k == i else 0 for k in range(1, n + 1)]
    return build_polytope(table, n, facets=facets, coordinates=coordinates)


def cube(n: int) -> SimplePolytope:
    """Facet F{2i-1} is x_i = 0 and F{2i} is x_i = 1; vertices are named by their bit strings."""
    if n < 1:
        raise DimensionMismatch(f"cube dimension must be positive, got {n}")
    facets = [f"F{k}" for k in range(1, 2 * n + 1)]
    table, coordinates = {}, {}
    for bits in cartesian((0, 1), repeat=n):
        name = "v" + "".join(str(b) for b in bits)
        table[name] = [f"F{2 * i + 1 + b}" for i, b in enumerate(bits)]
        coordinates[name] = list(bits)
    return build_polytope(table, n, facets=facets, coordinates=coordinates)


def square() -> SimplePolytope:
    # F1 bottom, F2 right, F3 top, F4 left
    table = {
        "v00": ["F1", "F4"],
        "v10": ["F1", "F2"],
        "v11": ["F2", "F3"],
        "v01": ["F3", "F4"],
    }
    coordinates = {"v00": [0, 0], "v10": [1, 0], "v11": [1, 1], "v01": [0, 1]}
    return build_polytope(table, 2, facets=["F1", "F2", "F3", "F4"], coordinates=coordinates)


def prism() -> SimplePolytope:
    """Triangle x, y >= 0, x + y <= 1 times the interval 0 <= z <= 1.

    F1: y = 0, F2: x + y = 1, F3: x = 0 are the square sides;
    F4: z = 0 and F5: z = 1 are the triangles.
    """
    table = {
        "v0": ["F1", "F3", "F4"],
        "v1": ["F1", "F2", "F4"],
        "v2": ["F1", "F3", "F5"],
        "v3": ["F2", "F3", "F4"],
        "v4": ["F1", "F2", "F5"],
        "v5": ["F2", "F3", "F5"],
    }
    coordinates = {
        "v0": [0, 0, 0], "v1": [1, 0, 0], "v3": [0, 1, 0],
        "v2": [0, 0, 1], "v4": [1, 0, 1], "v5": [0, 1, 1],
    }
    return build_polytope(table, 3, facets=[f"F{i}" for i in range(1, 6)], coordinates=coordinates)


def product(*factors: SimplePolytope) -> SimplePolytope:
    """Cartesian product; facet F of the k-th factor becomes ``F_k``, vertices join with commas."""
    if not factors:
        return point()
    n = sum(P.dim for P in factors)
    facets = [f"{f}_{k}" for k, P in enumerate(factors, start=1) for f in P.facets]
    table, coordinates = {}, {}
    with_coordinates = all(P.coordinates is not None for P in factors)
    for combo in cartesian(*(P.vertices for P in factors)):
        name = ",".join(combo)
        table[name] = [f"{f}_{k}" for k, (P, v) in enumerate(zip(factors, combo), start=1)
                       for f in P.facets if f in P.incidence[v]]
        if with_coordinates:
            coordinates[name] = [x for P, v in zip(factors, combo) for x in P.coordinates[v]]
    return build_polytope(table, n, facets=facets, coordinates=coordinates if with_coordinates else None)
