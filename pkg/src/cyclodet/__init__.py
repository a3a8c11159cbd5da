"""cyclodet: exact cyclotomic-field linear algebra and identity verification."""

__version__ = "0.1.0"

from .rationals import rational, rat_pow, parse_rational, format_rational
from .cyclotomic import (
    CycloContext,
    CycloElem,
    context_new,
    cyclotomic_polynomial,
    shared_context,
    zeta_pow,
)
from .polynomials import CPoly, prod_one_minus_x_zeta, partial_fraction_check, row_sum_x_check
from .linalg import CMatrix
from .combinatorics import (
    GuardrailExceeded,
    derangement_count,
    derangements,
    double_factorial,
    factorial,
    perm_sign,
    signed_derangement_sum,
)
from .identities import IdentityReport, MatrixKind, build_matrix

__all__ = [
    "CMatrix",
    "CPoly",
    "CycloContext",
    "CycloElem",
    "GuardrailExceeded",
    "IdentityReport",
    "MatrixKind",
    "build_matrix",
    "context_new",
    "cyclotomic_polynomial",
    "derangement_count",
    "derangements",
    "double_factorial",
    "factorial",
    "format_rational",
    "parse_rational",
    "perm_sign",
    "prod_one_minus_x_zeta",
    "partial_fraction_check",
    "rat_pow",
    "rational",
    "row_sum_x_check",
    "shared_context",
    "signed_derangement_sum",
    "zeta_pow",
]
