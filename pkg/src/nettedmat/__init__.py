"""Exact arithmetic for netted binomial matrices.

A matrix is "netted" when a single linear stencil ties each entry to its
west, north, and northwest neighbors, with matching constraints on the
border.  Binomial-coefficient matrices of several flavors are netted, their
powers are netted with explicitly computable stencils, and one family (the
generalized Fibonacci matrix) has powers, inverse, spectrum, and modular
behavior that this package constructs and verifies exactly, over Z or
symbolically over Z[m].
"""

from .binomials import binom
from .conjecture import conjectured_charpoly, verify_conjecture
from .fibmat import (
    build_T,
    build_T_inverse,
    build_w,
    closed_form_entry,
    verify_closed_forms,
    verify_corollary_identities,
    verify_inverse,
    verify_power_vector,
)
from .genfunc import (
    BiSeries,
    series_from_matrix,
    series_from_power,
    verify_genfunc,
    verify_genfunc_inversion,
)
from .matrices import Matrix, ShapeError, charpoly, nullspace, pow_mod, powers
from .modular import (
    order_mod_p,
    verify_entry_point_theorem,
    verify_order,
    verify_pair_period_lemma,
    verify_root_theorem,
    verify_up_theorems,
)
from .netted import (
    FAMILY_KINDS,
    CoeffQuad,
    NettedParams,
    Tableau,
    boundary_check,
    build_family,
    coeff_sequences,
    sample_tableau,
    scalar_recurrence_check,
    verify_power_netted,
    verify_sample,
)
from .polynomials import Poly, exact_div, indeterminate
from .reports import (
    BENIGN,
    DISCREPANCY_DOCUMENTED,
    FAIL,
    HYPOTHESIS_NOT_SATISFIED,
    PASS,
    Report,
    make_report,
    tally,
    witness,
)
from .sequences import entry_point, fibonacci, lucas, pair_period

__version__ = "0.1.0"

__all__ = [
    "BENIGN",
    "BiSeries",
    "CoeffQuad",
    "DISCREPANCY_DOCUMENTED",
    "FAIL",
    "FAMILY_KINDS",
    "HYPOTHESIS_NOT_SATISFIED",
    "Matrix",
    "NettedParams",
    "PASS",
    "Poly",
    "Report",
    "ShapeError",
    "Tableau",
    "binom",
    "boundary_check",
    "build_T",
    "build_T_inverse",
    "build_family",
    "build_w",
    "charpoly",
    "closed_form_entry",
    "coeff_sequences",
    "conjectured_charpoly",
    "entry_point",
    "exact_div",
    "fibonacci",
    "indeterminate",
    "lucas",
    "make_report",
    "nullspace",
    "order_mod_p",
    "pair_period",
    "pow_mod",
    "powers",
    "sample_tableau",
    "scalar_recurrence_check",
    "series_from_matrix",
    "series_from_power",
    "tally",
    "verify_closed_forms",
    "verify_conjecture",
    "verify_corollary_identities",
    "verify_entry_point_theorem",
    "verify_genfunc",
    "verify_genfunc_inversion",
    "verify_inverse",
    "verify_order",
    "verify_pair_period_lemma",
    "verify_power_netted",
    "verify_power_vector",
    "verify_root_theorem",
    "verify_sample",
    "verify_up_theorems",
    "witness",
    "__version__",
]
