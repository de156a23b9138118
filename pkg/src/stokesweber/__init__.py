"""Exponentially improved large-x asymptotics of the even and odd solutions of
w'' + x w' + (a + 1/2) w = 0.

The solutions are the Kummer functions

    w1(a, x) = M(a/2 + 1/4, 1/2, -x**2/2),   w2(a, x) = x M(a/2 + 3/4, 3/2, -x**2/2).

After optimal truncation of their algebraic expansion the remainder is
exponentially small; :func:`refined_exp_small` gives its expansion with the
coefficients A_j, B_j, and :func:`standard_expansion` the naive one, which is
off by a factor of two.
"""

from .asymptotics import (
    ExpansionReport,
    ExpansionValue,
    algebraic_sum,
    compare,
    kummer_to_weber_factor,
    refined_exp_small,
    refined_kummer,
    standard_expansion,
)
from .coefficients import (
    KummerParams,
    TruncationSpec,
    WeberParams,
    a_coefficients,
    b_coefficients,
    optimal_truncation,
    pochhammer,
    theta,
)
from .errors import (
    BadInputError,
    NotGeneratedError,
    PoleError,
    PrecisionExhaustedError,
    TruncationError,
    WeberError,
)
from .exact_series import (
    FormalSeries,
    GammaPolynomial,
    g_polynomials,
    ghat_eval,
    ghat_polynomial,
    invert_phase_map,
    verify_phase_identity,
)
from .oracle import (
    kummer_m,
    ode_residual,
    reciprocal_gamma,
    w_ref,
    w_residual,
)
from .precision import Kind, PrecisionContext

__version__ = "0.1.0"
