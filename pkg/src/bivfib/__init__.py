"""Exact computer algebra for generalized bivariate Fibonacci polynomials."""

from .engine import (
    FIB,
    LUCAS,
    PRESETS,
    Matrix2,
    SeqParams,
    a_matrix_power,
    binet_numeric,
    binet_roots,
    c_matrix,
    ca_matrix_power,
    closed_form_fib,
    complex_rep_fib,
    complex_rep_fib_y1,
    fib,
    fib_doubling,
    h_from_fib,
    h_n,
    h_negative_closed,
    lucas,
    series_coeffs,
)
from .errors import (
    DivisionByZero,
    DomainError,
    EmptyGrid,
    NonInvertibleSubstitution,
    PolySyntaxError,
    UnboundVariable,
)
from .gaussian import GaussianInt, GaussianRational
from .identities import (
    CATALOG,
    IdentityId,
    IdentityReport,
    SweepConfig,
    check_numeric,
    check_symbolic,
    run_suite,
)
from .parsing import parse, render
from .poly import VARIABLES, MultiPoly

__version__ = "0.1.0"
