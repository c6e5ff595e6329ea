# /src/utils/linalg.py

"""Exact linear algebra over Z, GF(p) and Q.

Integer matrices are numpy arrays with ``dtype=object`` holding Python
ints, so entries never overflow. Rational rank and determinants go
through sympy.
"""

__all__ = [
    "integer_matrix", "identity", "SNFResult", "smith_normal_form",
    "unimodular_inverse", "determinant", "rank_over_q",
    "LatticeQuotient", "quotient_by_rows",
]

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from src.utils.errors import TorsionDetected

logger = logging.getLogger(__name__)


def integer_matrix(rows: Iterable[Iterable[int]], shape: Optional[Tuple[int, int]] = None) -> np.ndarray:
    """Builds an object-dtype integer matrix; ``shape`` is required for empty input."""
    rows = [list(r) for r in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    out = np.zeros(shape, dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = int(value)
    return out


def identity(size: int) -> np.ndarray:
    out = np.zeros((size, size), dtype=object)
    for i in range(size):
        out[i, i] = 1
    return out


# --- Smith normal form -----------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with D diagonal, d_i | d_{i+1}, U and V unimodular."""
    D: np.ndarray
    U: np.ndarray
    V: np.ndarray

    @property
    def diagonal(self) -> List[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> List[int]:
        return [d for d in self.diagonal if d != 0]


def _min_nonzero(A: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    best = None
    rows, cols = A.shape
    for i in range(t, rows):
        for j in range(t, cols):
            value = A[i, j]
            if value != 0 and (best is None or abs(value) < abs(A[best])):
                best = (i, j)
    return best


def _non_divisible(A: np.ndarray, t: int) -> Optional[int]:
    pivot = A[t, t]
    rows, cols = A.shape
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if A[i, j] % pivot != 0:
                return i
    return None


def smith_normal_form(matrix) -> SNFResult:
    A = np.array(matrix, dtype=object, copy=True)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    rows, cols = A.shape
    U = identity(rows)
    V = identity(cols)

    for t in range(min(rows, cols)):
        while True:
            pivot = _min_nonzero(A, t)
            if pivot is None:
                return SNFResult(A, U, V)
            i, j = pivot
            if i != t:
                A[[t, i]] = A[[i, t]]
                U[[t, i]] = U[[i, t]]
            if j != t:
                A[:, [t, j]] = A[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]

            clean = True
            for i in range(t + 1, rows):
                q = A[i, t] // A[t, t]
                if q:
                    A[i, :] -= q * A[t, :]
                    U[i, :] -= q * U[t, :]
                if A[i, t] != 0:
                    clean = False
            for j in range(t + 1, cols):
                q = A[t, j] // A[t, t]
                if q:
                    A[:, j] -= q * A[:, t]
                    V[:, j] -= q * V[:, t]
                if A[t, j] != 0:
                    clean = False
            if not clean:
                continue

            bad = _non_divisible(A, t)
            if bad is None:
                break
            A[t, :] += A[bad, :]
            U[t, :] += U[bad, :]

        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            U[t, :] = -U[t, :]
    return SNFResult(A, U, V)


def unimodular_inverse(M: np.ndarray) -> np.ndarray:
    if M.shape[0] == 0:
        return np.zeros((0, 0), dtype=object)
    inverse = sympy.Matrix(M.tolist()).inv()
    return integer_matrix(inverse.tolist())


def determinant(rows: Sequence[Sequence[int]]) -> int:
    if len(rows) == 0:
        return 1
    return int(sympy.Matrix([list(r) for r in rows]).det())


def rank_over_q(rows: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in row] for row in rows]).rank()


# --- quotients of free modules -----------------------------------------------

class _NonUnitPivot(Exception):
    pass


def _mod(row: List[int], modulus: Optional[int]) -> List[int]:
    return [v % modulus for v in row] if modulus else row


@dataclass
class LatticeQuotient:
    """The quotient Z^width (or GF(p)^width) by the span of a set of rows.

    ``basis`` lists representative vectors of a basis of the quotient;
    ``coordinates`` maps any vector to its coordinates in that basis.
    When every pivot could be taken as a unit the basis consists of
    unit vectors (``monomial_basis`` is True).
    """
    width: int
    modulus: Optional[int]
    basis: List[Tuple[int, ...]]
    monomial_basis: bool
    _pivots: Dict[int, List[int]] = field(default_factory=dict, repr=False)
    _free: Tuple[int, ...] = ()
    _transform: Optional[np.ndarray] = field(default=None, repr=False)
    _rank: int = 0

    @property
    def free_columns(self) -> Tuple[int, ...]:
        return self._free

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        v = [int(x) for x in vector]
        if self._transform is not None:
            image = np.array(v, dtype=object).dot(self._transform) if self.width else []
            return tuple(int(x) for x in list(image)[self._rank:])
        for column, row in self._pivots.items():
            coef = v[column]
            if coef:
                v = [a - coef * b for a, b in zip(v, row)]
        v = _mod(v, self.modulus)
        return tuple(v[j] for j in self._free)


def _unit_pivot_echelon(rows: List[List[int]], order: Sequence[int], modulus: Optional[int]):
    work = [_mod(list(r), modulus) for r in rows]
    pivot_rows: Dict[int, int] = {}

    def active(column):
        used = set(pivot_rows.values())
        return [i for i, r in enumerate(work) if i not in used and r[column] != 0]

    def eliminate(column, source):
        for i, r in enumerate(work):
            if i != source and r[column] != 0:
                coef = r[column]
                work[i] = _mod([a - coef * b for a, b in zip(r, work[source])], modulus)

    def attempt(column) -> Optional[bool]:
        candidates = active(column)
        if not candidates:
            return None
        if modulus:
            source = candidates[0]
            inverse = pow(work[source][column], -1, modulus)
            work[source] = _mod([inverse * a for a in work[source]], modulus)
        else:
            g = 0
            for i in candidates:
                g = gcd(g, work[i][column])
            if g != 1:
                return False
            while len(candidates) > 1:
                source = min(candidates, key=lambda i: abs(work[i][column]))
                for i in candidates:
                    if i != source:
                        q = work[i][column] // work[source][column]
                        work[i] = [a - q * b for a, b in zip(work[i], work[source])]
                candidates = active(column)
            source = candidates[0]
            if work[source][column] < 0:
                work[source] = [-a for a in work[source]]
        eliminate(column, source)
        pivot_rows[column] = source
        return True

    deferred = []
    for column in order:
        if attempt(column) is False:
            deferred.append(column)
    progress = True
    while deferred and progress:
        progress = False
        for column in list(deferred):
            outcome = attempt(column)
            if outcome is not False:
                deferred.remove(column)
                progress = True
    if deferred:
        raise _NonUnitPivot(f"columns {deferred} admit no unit pivot")
    return {column: work[i] for column, i in pivot_rows.items()}


def quotient_by_rows(rows: Sequence[Sequence[int]], width: int,
                     order: Optional[Sequence[int]] = None,
                     modulus: Optional[int] = None) -> LatticeQuotient:
    """Quotient of the free module on ``width`` columns by ``rows``.

    Columns are tried as pivots in ``order`` (default: last column
    first), so columns late in ``order`` are the ones kept as basis.
    Over Z, if no unimodular choice of pivots exists the quotient falls
    back to a Smith normal form basis; torsion raises TorsionDetected.
    """
    rows = [list(r) for r in rows]
    if order is None:
        order = list(range(width - 1, -1, -1))
    try:
        pivots = _unit_pivot_echelon(rows, order, modulus)
    except _NonUnitPivot as exc:
        logger.info("unit pivots unavailable (%s), using Smith normal form", exc)
        return _snf_quotient(rows, width)
    free = tuple(j for j in range(width) if j not in pivots)
    basis = [tuple(1 if k == j else 0 for k in range(width)) for j in free]
    return LatticeQuotient(width, modulus, basis, True, pivots, free)


def _snf_quotient(rows: List[List[int]], width: int) -> LatticeQuotient:
    snf = smith_normal_form(integer_matrix(rows, (len(rows), width)))
    torsion = [d for d in snf.invariant_factors if d != 1]
    if torsion:
        raise TorsionDetected(f"relation lattice has invariant factors {torsion}")
    rank = snf.rank
    inverse = unimodular_inverse(snf.V)
    basis = [tuple(int(x) for x in inverse[i, :]) for i in range(rank, width)]
    return LatticeQuotient(width, None, basis, False, _transform=snf.V, _rank=rank)
