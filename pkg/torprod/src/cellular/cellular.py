# /src/cellular/cellular.py

"""The cell complex of P(S^m, X) and its integral homology.

Cells are products B_i x U_v of the i-cell of the antipodal sphere
decomposition with the open cell of X attached to vertex v. A cell has
dimension i + 2 index(v); its boundary is a multiple of the cell
below it in the same vertex column.
"""

__all__ = [
    "Cell", "ChainComplexZ", "AbelianGroup", "ComparisonReport",
    "build_complex", "homology", "cohomology", "rp_homology",
    "closed_form_check", "dump_matrices",
]

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from src.polytope import SimplePolytope, VertexOrdering, vertex_indices
from src.utils.errors import BoundaryNotSquareZero, DimensionMismatch
from src.utils.linalg import integer_matrix, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cell:
    i: int
    vertex: str
    index: int

    @property
    def dim(self) -> int:
        return self.i + 2 * self.index

    def label(self) -> str:
        return f"b^{self.i} u[{self.vertex}]"


@dataclass
class ChainComplexZ:
    m: int
    cells: Dict[int, List[Cell]]
    boundaries: Dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return max(self.cells) if self.cells else 0

    def count(self, d: int) -> int:
        return len(self.cells.get(d, []))

    def boundary(self, d: int) -> np.ndarray:
        """The matrix of C_d -> C_{d-1}, columns indexed by d-cells."""
        if d in self.boundaries:
            return self.boundaries[d]
        return np.zeros((self.count(d - 1), self.count(d)), dtype=object)

    def euler(self) -> int:
        return sum((-1) ** d * len(cells) for d, cells in self.cells.items())

    def check_square_zero(self) -> None:
        for d in range(1, self.top + 1):
            lower, upper = self.boundary(d), self.boundary(d + 1)
            if 0 in lower.shape or 0 in upper.shape:
                continue
            product = lower.dot(upper)
            if np.any(product != 0):
                raise BoundaryNotSquareZero(f"boundary composite C_{d + 1} -> C_{d - 1} is non-zero")


def build_complex(m: int, P: SimplePolytope, ordering: VertexOrdering, twisted: bool = False) -> ChainComplexZ:
    """Cells (B_i, U_v) with d(B_i, U_v) = (1 + (-1)^(i + e)) (B_{i-1}, U_v).

    e is 2 index(v) by default; ``twisted`` uses index(v), the sign with
    which conjugation acts on the cell of v.
    """
    if m < 0:
        raise DimensionMismatch(f"sphere dimension must be non-negative, got {m}")
    index = vertex_indices(P, ordering)
    position = {v: k for k, v in enumerate(ordering.order)}
    cells: Dict[int, List[Cell]] = {}
    for v in ordering.order:
        for i in range(m + 1):
            cell = Cell(i, v, index[v])
            cells.setdefault(cell.dim, []).append(cell)
    for d in cells:
        cells[d].sort(key=lambda c: (position[c.vertex], c.i))

    complex_ = ChainComplexZ(m, cells)
    for d, column_cells in cells.items():
        rows = cells.get(d - 1, [])
        where = {(c.i, c.vertex): r for r, c in enumerate(rows)}
        matrix = np.zeros((len(rows), len(column_cells)), dtype=object)
        for col, c in enumerate(column_cells):
            if c.i == 0:
                continue
            exponent = c.i + (c.index if twisted else 2 * c.index)
            coefficient = 1 + (-1) ** exponent
            if coefficient:
                matrix[where[(c.i - 1, c.vertex)], col] = coefficient
        complex_.boundaries[d] = matrix
    complex_.check_square_zero()
    logger.debug("complex for m=%d: cells per degree %s", m, {d: len(c) for d, c in sorted(cells.items())})
    return complex_


@dataclass(frozen=True)
class AbelianGroup:
    free: int = 0
    torsion: Tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free == 1:
            parts.append("Z")
        elif self.free > 1:
            parts.append(f"Z^{self.free}")
        for t, count in sorted(Counter(self.torsion).items()):
            parts.append(f"Z/{t}" if count == 1 else f"(Z/{t})^{count}")
        return " + ".join(parts) or "0"

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.free + other.free, tuple(sorted(self.torsion + other.torsion)))


def homology(C: ChainComplexZ) -> List[AbelianGroup]:
    C.check_square_zero()
    ranks = {}
    factors = {}
    for d in range(C.top + 2):
        snf = smith_normal_form(C.boundary(d))
        ranks[d] = snf.rank
        factors[d] = [x for x in snf.invariant_factors if x > 1]
    groups = []
    for d in range(C.top + 1):
        free = C.count(d) - ranks[d] - ranks[d + 1]
        groups.append(AbelianGroup(free, tuple(sorted(factors[d + 1]))))
    return groups


def cohomology(C: ChainComplexZ) -> List[AbelianGroup]:
    """Universal coefficients: H^d = free part of H_d plus torsion of H_{d-1}."""
    groups = homology(C)
    return [AbelianGroup(g.free, groups[d - 1].torsion if d else ()) for d, g in enumerate(groups)]


def rp_homology(m: int, twisted: bool = False) -> List[AbelianGroup]:
    """H_*(RP^m; Z), or with the orientation-twisted integer coefficients."""
    out = []
    for i in range(m + 1):
        if not twisted:
            if i == 0 or (i == m and m % 2 == 1):
                out.append(AbelianGroup(1))
            elif i % 2 == 1:
                out.append(AbelianGroup(0, (2,)))
            else:
                out.append(AbelianGroup())
        else:
            if i == m and m % 2 == 0:
                out.append(AbelianGroup(1))
            elif i % 2 == 0:
                out.append(AbelianGroup(0, (2,)))
            else:
                out.append(AbelianGroup())
    return out


@dataclass(frozen=True)
class ComparisonReport:
    predicted: Tuple[AbelianGroup, ...]
    computed: Tuple[AbelianGroup, ...]
    mismatches: Tuple[int, ...]

    @property
    def agree(self) -> bool:
        return not self.mismatches


def closed_form_check(m: int, P: SimplePolytope, ordering: VertexOrdering, twisted: bool = False) -> ComparisonReport:
    """Compares SNF homology with the sum over vertices of shifted RP^m homology."""
    index = vertex_indices(P, ordering)
    top = m + 2 * P.dim
    predicted = [AbelianGroup() for _ in range(top + 1)]
    for v in ordering.order:
        shift = 2 * index[v]
        pattern = rp_homology(m, twisted=twisted and index[v] % 2 == 1)
        for i, group in enumerate(pattern):
            predicted[i + shift] = predicted[i + shift] + group
    computed = homology(build_complex(m, P, ordering, twisted=twisted))
    computed += [AbelianGroup()] * (top + 1 - len(computed))
    mismatches = tuple(d for d in range(top + 1) if predicted[d] != computed[d])
    if mismatches:
        logger.warning("closed form disagrees with SNF in degrees %s", mismatches)
    return ComparisonReport(tuple(predicted), tuple(computed), mismatches)


def dump_matrices(C: ChainComplexZ) -> Dict[int, List[Tuple[int, int, int]]]:
    """Boundary matrices as sparse (row, col, value) triples per degree."""
    out = {}
    for d in sorted(C.boundaries):
        matrix = C.boundaries[d]
        out[d] = [(int(r), int(c), int(matrix[r, c])) for r, c in zip(*np.nonzero(matrix != 0))]
    return out
