"""Exact enumeration of 123-avoiding words with r occurrences of each letter.

The package counts such words four independent ways (exhaustive search, a
symmetric multiset recurrence, the power-series solution of an algebraic
equation scheme, and linear extension by a guessed recurrence), derives the
algebraic equation of the counting generating function by exact elimination,
and checks the (r+1)*2^r growth law numerically.
"""

__version__ = "0.1.0"

import sys as _sys

# terms like w_5(2000) have thousands of decimal digits and are rendered as
# strings in JSON and b-file output; the CPython conversion guard would
# reject them
if hasattr(_sys, "set_int_max_str_digits"):
    _sys.set_int_max_str_digits(max(_sys.get_int_max_str_digits(), 2_000_000))

from .words import (
    P123,
    P132,
    P231,
    contains_pattern,
    count_avoiders_bruteforce,
    count_avoiders_recurrence,
    avoidance_involution,
)
from .scheme import (
    AlgebraicScheme,
    CountSequence,
    SeriesSolution,
    build_scheme,
    solve_series,
    word_counts,
)
from .series import TruncatedSeries
from .polynomials import MultivariatePolynomial, resultant
from .bivariate import BivariatePolynomial
from .linalg import solve_linear_system
from .elimination import (
    compress_exponents,
    eliminate,
    match_equation,
    verify_annihilation,
)
from .guessing import (
    LinearRecurrence,
    extend_with_recurrence,
    guess_algebraic,
    guess_recurrence,
    verify_recurrence,
)
from .asymptotics import AsymptoticReport, conjecture_check, growth_ratio, fit_constant
from .fixtures import reference_equation, reference_recurrence, load_cached_recurrence

__all__ = [
    "P123",
    "P132",
    "P231",
    "contains_pattern",
    "count_avoiders_bruteforce",
    "count_avoiders_recurrence",
    "avoidance_involution",
    "AlgebraicScheme",
    "CountSequence",
    "SeriesSolution",
    "build_scheme",
    "solve_series",
    "word_counts",
    "TruncatedSeries",
    "MultivariatePolynomial",
    "BivariatePolynomial",
    "resultant",
    "solve_linear_system",
    "eliminate",
    "compress_exponents",
    "verify_annihilation",
    "match_equation",
    "LinearRecurrence",
    "guess_recurrence",
    "guess_algebraic",
    "verify_recurrence",
    "extend_with_recurrence",
    "AsymptoticReport",
    "conjecture_check",
    "growth_ratio",
    "fit_constant",
    "reference_equation",
    "reference_recurrence",
    "load_cached_recurrence",
    "__version__",
]
