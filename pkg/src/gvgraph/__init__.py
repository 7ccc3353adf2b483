"""Exact-arithmetic toolkit for Gilbert graphs.

Computes the closed-form spectra of Gilbert graphs G_{q,n,d} and their
descent-level quotients, evaluates spectral bounds on the maximum code size
A_q(n, d) as exact rationals, and constructs [n, n-s, d]_q linear codes by
spectral descent, with exhaustive distance verification.
"""

from .bounds import (
    BoundReport,
    asymptotic_gv,
    build_bound_report,
    descent_bound,
    gv_bound,
    hoffman_bound,
    hoffman_paper_literal,
    sufficient_dimension,
    wilf_cor27_bound,
)
from .codes import (
    INFINITE_DISTANCE,
    LinearCode,
    codewords,
    format_pchk,
    gilbert_adjacency,
    is_independent_set,
    max_independent_set_oracle,
    min_distance,
    read_pchk,
    write_pchk,
)
from .combinat import GraphParams, ball_volume, binomial, entropy_q, is_prime, krawtchouk
from .descent import DescentTrace, LevelRecord, run_algorithm1, select_pivot, spectrum_descend
from .errors import DEFAULT_BUDGET, BudgetError, DivisibilityError, PchkFormatError
from .spectrum import (
    RealEigenvector,
    SpectrumTable,
    build_spectrum_level0,
    character_sum_oracle,
    eigenvalue_level0,
    min_eigenvalue,
    real_eigenvector,
)
from .vectors import FqVector, dot_product

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetError",
    "DEFAULT_BUDGET",
    "DescentTrace",
    "DivisibilityError",
    "FqVector",
    "GraphParams",
    "INFINITE_DISTANCE",
    "LevelRecord",
    "LinearCode",
    "PchkFormatError",
    "RealEigenvector",
    "SpectrumTable",
    "asymptotic_gv",
    "ball_volume",
    "binomial",
    "build_bound_report",
    "build_spectrum_level0",
    "character_sum_oracle",
    "codewords",
    "descent_bound",
    "dot_product",
    "eigenvalue_level0",
    "entropy_q",
    "format_pchk",
    "gilbert_adjacency",
    "gv_bound",
    "hoffman_bound",
    "hoffman_paper_literal",
    "is_independent_set",
    "is_prime",
    "krawtchouk",
    "max_independent_set_oracle",
    "min_distance",
    "min_eigenvalue",
    "read_pchk",
    "real_eigenvector",
    "run_algorithm1",
    "select_pivot",
    "spectrum_descend",
    "sufficient_dimension",
    "wilf_cor27_bound",
    "write_pchk",
]
