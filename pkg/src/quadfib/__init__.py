"""Exact Fibonacci and Lucas sequences attached to real quadratic fields."""

from . import errors
from .genfun import (
    FixedPointDecimal,
    GFQuery,
    approx_sqrt,
    approx_unit,
    characteristic_check,
    gf_alt_closed,
    gf_fib_closed,
    gf_lucas_closed,
    gf_truncated,
    ratio_error,
)
from .identities import (
    CATALOG,
    TAGS,
    Counterexample,
    IdentityReport,
    verify,
    verify_all,
)
from .oeis import (
    CITED_SEQUENCES,
    MatchReport,
    OeisRef,
    oeis_fetch,
    oeis_match,
    parse_b_file,
    resolve_cache_dir,
)
from .quadfield import (
    MatrixRep,
    QuadElement,
    Rational,
    SquarefreeD,
    matrix_rep,
    power_coeffs_closed,
    validate_d,
)
from .sequences import (
    KFibMapping,
    SeqContext,
    SeqTerm,
    as_k_fibonacci,
    context,
    context_for_unit,
    context_with_unit,
    fib,
    fib_binet,
    fib_binomial,
    kfib_map,
    lucas,
    lucas_binet,
    lucas_binomial,
    slice_terms,
)
from .unitfinder import (
    CFExpansion,
    CFSeed,
    Unit,
    continued_fraction,
    fundamental_unit,
    unit_from_power,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CITED_SEQUENCES",
    "CFExpansion",
    "CFSeed",
    "Counterexample",
    "FixedPointDecimal",
    "GFQuery",
    "IdentityReport",
    "KFibMapping",
    "MatchReport",
    "MatrixRep",
    "OeisRef",
    "QuadElement",
    "Rational",
    "SeqContext",
    "SeqTerm",
    "SquarefreeD",
    "TAGS",
    "Unit",
    "approx_sqrt",
    "approx_unit",
    "as_k_fibonacci",
    "characteristic_check",
    "context",
    "context_for_unit",
    "context_with_unit",
    "continued_fraction",
    "errors",
    "fib",
    "fib_binet",
    "fib_binomial",
    "fundamental_unit",
    "gf_alt_closed",
    "gf_fib_closed",
    "gf_lucas_closed",
    "gf_truncated",
    "kfib_map",
    "lucas",
    "lucas_binet",
    "lucas_binomial",
    "matrix_rep",
    "oeis_fetch",
    "oeis_match",
    "parse_b_file",
    "power_coeffs_closed",
    "ratio_error",
    "resolve_cache_dir",
    "slice_terms",
    "unit_from_power",
    "validate_d",
    "verify",
    "verify_all",
]
