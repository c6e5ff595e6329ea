from .errors import *
from .linalg import (
    integer_matrix, identity, SNFResult, smith_normal_form,
    unimodular_inverse, determinant, rank_over_q,
    LatticeQuotient, quotient_by_rows,
)
from .formatting import monomial_label, format_polynomial, poincare_polynomial
