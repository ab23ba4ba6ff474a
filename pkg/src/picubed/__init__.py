"""picubed: high-precision evaluation and verification of pi^3 series.

The package computes pi^3 through every series in its catalog — including
the golden-ratio expansions with exact Q(sqrt(5)) coefficients — certifies
each value with a rigorous truncation bound, and verifies the related
identities against a dual-algorithm reference pi.
"""

from .errors import (
    AbscissaOutOfRange,
    BudgetExceeded,
    DegenerateAbscissa,
    DivisionByZeroField,
    DomainError,
    IndexBelowStart,
    PicubedError,
    PrecisionInsufficient,
    PrecisionOutOfRange,
    UnsupportedAbscissa,
)
from .goldfield import PHI, GoldNum, Rat, cotcsc2_squared, gold_to_real, golden_coefficient
from .numctx import PrecCtx, Real, cos, exp, mk_context, ref_pi, sin, sqrt
from .series import (
    CATALOG,
    DEFAULT_TERM_BUDGET,
    EvalResult,
    H2Cache,
    SeriesDef,
    SeriesId,
    bilateral_pair_exact,
    bilateral_partial,
    eval_pi3,
    euler_general,
    series_term,
    tail_bound_bilateral,
)
from .verify import (
    IdentityId,
    IdentityKind,
    Report,
    default_identity_suite,
    gupta_partial,
    plouffe_S,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "AbscissaOutOfRange",
    "BudgetExceeded",
    "CATALOG",
    "DEFAULT_TERM_BUDGET",
    "DegenerateAbscissa",
    "DivisionByZeroField",
    "DomainError",
    "EvalResult",
    "GoldNum",
    "H2Cache",
    "IdentityId",
    "IdentityKind",
    "IndexBelowStart",
    "PHI",
    "PicubedError",
    "PrecCtx",
    "PrecisionInsufficient",
    "PrecisionOutOfRange",
    "Rat",
    "Real",
    "Report",
    "SeriesDef",
    "SeriesId",
    "UnsupportedAbscissa",
    "bilateral_pair_exact",
    "bilateral_partial",
    "cos",
    "cotcsc2_squared",
    "default_identity_suite",
    "eval_pi3",
    "euler_general",
    "exp",
    "gold_to_real",
    "golden_coefficient",
    "gupta_partial",
    "mk_context",
    "plouffe_S",
    "ref_pi",
    "series_term",
    "sin",
    "sqrt",
    "tail_bound_bilateral",
    "verify_identity",
]
