"""Solvers for nearly pentadiagonal linear systems.

A nearly pentadiagonal matrix has five bands plus corner entries at
(1, 4) and (n, n-3). This package stores such matrices in 5n-4 scalars
and provides:

  * an O(n) banded LU solve in float64 or exact rational arithmetic
    (solve_knpenta), with a compiled kernel for the float path and a
    pure Python fallback selected at import;
  * a symbolic fallback (solve_ksnpenta) that rescues vanishing pivots
    by continuing the elimination over rational functions and reading
    the answer off at zero;
  * a dense exact reference solver (dense_solve / dense_det);
  * generators for test matrices and a JSON-based CLI (`npenta`).
"""

from ._backend import HAVE_COMPILED, active as active_backend, set_active as set_backend
from .errors import (
    InputFormatError,
    InvalidSize,
    NearlyPentaError,
    NotNearlyPentadiagonal,
    PoleAtZero,
    SingularMatrix,
    TooSmall,
    ZeroDenominator,
    ZeroPivot,
)
from .scalars import (
    ExactRational,
    FLOAT,
    FloatField,
    RATIONAL,
    RationalField,
    ScalarField,
    format_rational,
    parse_rational,
)
from .polynomials import Polynomial, X, poly_gcd
from .ratfunc import (
    RATFUNC,
    RationalFunction,
    RationalFunctionField,
    SYMBOL,
    rf_eval_at_zero,
    rf_normalize,
)
from .matrix import (
    NearlyPentaMatrix,
    gen_laplacian,
    gen_random,
    load_system,
    save_system,
    system_from_json,
    to_json_dict,
)
from .factor import (
    Factorization,
    SolveReport,
    back_substitute,
    band_matvec,
    determinant,
    factorize,
    forward_substitute,
    solve_knpenta,
)
from .symbolic import ksnpenta_determinant, solve_auto, solve_ksnpenta
from .oracle import dense_det, dense_solve

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED",
    "active_backend",
    "set_backend",
    "NearlyPentaError",
    "TooSmall",
    "InvalidSize",
    "NotNearlyPentadiagonal",
    "InputFormatError",
    "ZeroPivot",
    "SingularMatrix",
    "ZeroDenominator",
    "PoleAtZero",
    "ExactRational",
    "ScalarField",
    "FloatField",
    "RationalField",
    "FLOAT",
    "RATIONAL",
    "parse_rational",
    "format_rational",
    "Polynomial",
    "X",
    "poly_gcd",
    "RationalFunction",
    "RationalFunctionField",
    "RATFUNC",
    "SYMBOL",
    "rf_normalize",
    "rf_eval_at_zero",
    "NearlyPentaMatrix",
    "gen_laplacian",
    "gen_random",
    "to_json_dict",
    "system_from_json",
    "load_system",
    "save_system",
    "Factorization",
    "SolveReport",
    "factorize",
    "determinant",
    "forward_substitute",
    "back_substitute",
    "band_matvec",
    "solve_knpenta",
    "solve_ksnpenta",
    "solve_auto",
    "ksnpenta_determinant",
    "dense_solve",
    "dense_det",
]
