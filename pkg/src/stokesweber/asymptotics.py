"""Large-x expansions of w1 and w2.

Three families are provided:

* the dominant algebraic series, optimally truncated at m0 terms;
* the refined exponentially small remainders E1, E2, which keep only half of
  the naive subdominant coefficient and add a B_j correction series;
* the standard expansions, whose subdominant part is twice too large on the
  Stokes line.

All values are mpf numbers at ``ctx.mp()`` precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import (
    KummerParams,
    TruncationSpec,
    a_coefficients,
    b_coefficients,
    optimal_truncation,
    theta,
)
from .errors import BadInputError
from .oracle import reciprocal_gamma, w_ref
from .precision import Kind, PrecisionContext, affine, as_rational, to_mpf, trig_pi

__all__ = [
    "ExpansionValue",
    "ExpansionReport",
    "algebraic_sum",
    "refined_exp_small",
    "refined_kummer",
    "kummer_to_weber_factor",
    "standard_expansion",
    "compare",
]


@dataclass(frozen=True)
class ExpansionValue:
    """Partial sum of an asymptotic series.

    ``last_term`` is the magnitude of the final included term and
    ``error_estimate`` that of the first omitted one.
    """

    value: object
    terms_used: int
    last_term: object
    error_estimate: object


@dataclass(frozen=True)
class ExpansionReport:
    kind: Kind
    a: object
    x: object
    M: int
    trunc: TruncationSpec
    w_oracle: object
    algebraic: ExpansionValue
    residual_W: object
    refined_E: ExpansionValue
    standard_exp_small: ExpansionValue
    ratio_standard_over_W: object


def _prep(a, x, mpctx):
    qa, qx = as_rational(a), as_rational(x)
    am = to_mpf(a, mpctx)
    xm = to_mpf(x, mpctx)
    if not xm > 0:
        raise BadInputError("x must be positive")
    return (qa if qa is not None else am), am, xm


def _algebraic_prefactor(kind, a, am, xm, mpctx, ctx):
    if kind is Kind.EVEN:
        scale = mpctx.mpf(2) ** (am / 2 + mpctx.mpf(0.25))
        rg = reciprocal_gamma(affine(a, Fraction(-1, 2), Fraction(1, 4)), ctx)
    else:
        scale = mpctx.mpf(2) ** (am / 2 - mpctx.mpf(0.25))
        rg = reciprocal_gamma(affine(a, Fraction(-1, 2), Fraction(3, 4)), ctx)
    return scale * mpctx.sqrt(mpctx.pi) * mpctx.mpf(rg) * xm ** (-am - mpctx.mpf(0.5))


def _poch_ratio_terms(base, xm, n_terms, sign, mpctx):
    """Terms (base)_{2k} / (k! (2x^2)^k) * sign**k for k < n_terms."""
    u = 2 * xm * xm
    term = mpctx.mpf(1)
    out = []
    for k in range(n_terms):
        out.append(term)
        term = term * (base + 2 * k) * (base + 2 * k + 1) / ((k + 1) * u) * sign
    return out


def algebraic_sum(kind, a, x, m: int, ctx: PrecisionContext | None = None) -> ExpansionValue:
    """Prefactor * x**(-a-1/2) * sum_{k<m} (1/2+a)_{2k} / (k! (2x^2)^k)."""
    if m < 1:
        raise BadInputError("m must be >= 1")
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    mpctx = ctx.mp()
    a, am, xm = _prep(a, x, mpctx)
    pre = _algebraic_prefactor(kind, a, am, xm, mpctx, ctx)
    terms = _poch_ratio_terms(am + mpctx.mpf(0.5), xm, m + 1, 1, mpctx)
    if pre == 0:
        zero = mpctx.zero
        return ExpansionValue(zero, m, zero, zero)
    total = mpctx.fsum(terms[:m])
    return ExpansionValue(pre * total, m, abs(pre * terms[m - 1]), abs(pre * terms[m]))


def _exp_prefactor(kind, a, am, xm, mpctx, ctx):
    """sqrt(pi) 2^(+-1/4 - a/2) / Gamma(1/4 + a/2 or 3/4 + a/2) * x^(a-1/2) e^(-x^2/2)."""
    if kind is Kind.EVEN:
        scale = mpctx.mpf(2) ** (mpctx.mpf(0.25) - am / 2)
        rg = reciprocal_gamma(affine(a, Fraction(1, 2), Fraction(1, 4)), ctx)
    else:
        scale = mpctx.mpf(2) ** (-mpctx.mpf(0.25) - am / 2)
        rg = reciprocal_gamma(affine(a, Fraction(1, 2), Fraction(3, 4)), ctx)
    return (
        scale
        * mpctx.sqrt(mpctx.pi)
        * mpctx.mpf(rg)
        * xm ** (am - mpctx.mpf(0.5))
        * mpctx.exp(-xm * xm / 2)
    )


def refined_exp_small(
    kind,
    a,
    x,
    M: int,
    trunc: TruncationSpec | None = None,
    ctx: PrecisionContext | None = None,
) -> ExpansionValue:
    """Exponentially small remainder E_r(a, x) truncated at M terms per series.

    ``trunc`` defaults to :func:`optimal_truncation` at (a, x); its alpha
    enters the B_j coefficients.
    """
    if M < 1:
        raise BadInputError("M must be >= 1")
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    trunc = trunc or optimal_truncation(a, x)
    mpctx = ctx.mp()
    a, am, xm = _prep(a, x, mpctx)

    p = KummerParams.from_weber(Kind.EVEN, a)
    A = a_coefficients(p, M + 1, mpctx)
    B = b_coefficients(p, trunc, M + 1, mpctx)
    u = 2 / (xm * xm)
    a_terms, b_terms = [], []
    pw = mpctx.mpf(1)
    for j in range(M + 1):
        # (-)^j (1/2 - a)_{2j} / (j! (2x^2)^j) = (-)^j A_j 2^j / x^{2j}
        a_terms.append(pw * to_mpf(A[j], mpctx))
        b_terms.append(pw * to_mpf(B[j], mpctx) / xm)
        pw = -pw * u
    sa = mpctx.fsum(a_terms[:M])
    sb = mpctx.fsum(b_terms[:M])

    cos_t, sin_t = trig_pi(theta(a), mpctx)
    two_over_rtpi = 2 / mpctx.sqrt(mpctx.pi)
    if kind is Kind.EVEN:
        c_a, c_b = cos_t, -two_over_rtpi * sin_t
    else:
        c_a, c_b = sin_t, two_over_rtpi * cos_t
    pre = _exp_prefactor(kind, a, am, xm, mpctx, ctx)
    value = pre * (c_a * sa + c_b * sb)
    last = abs(pre) * (abs(c_a * a_terms[M - 1]) + abs(c_b * b_terms[M - 1]))
    # trig weights bounded by their maxima so a vanishing cos/sin cannot hide the tail
    err = abs(pre) * (abs(a_terms[M]) + two_over_rtpi * abs(b_terms[M]))
    return ExpansionValue(value, M, last, err)


def refined_kummer(
    p: KummerParams,
    M: int,
    trunc: TruncationSpec,
    ctx: PrecisionContext | None = None,
) -> ExpansionValue:
    """Exponentially small part of Gamma(a)/Gamma(b) M(a, b, -x) for generic (a, b, x).

    x**th e**-x { cos(pi th) sum (-)^j A_j x^-j - 2 sin(pi th)/sqrt(2 pi x) sum (-)^j B_j x^-j }
    with th = a - b.
    """
    if M < 1:
        raise BadInputError("M must be >= 1")
    ctx = ctx or PrecisionContext()
    mpctx = ctx.mp()
    xk = to_mpf(p.x_k, mpctx)
    th = p.theta_hat
    A = a_coefficients(p, M + 1, mpctx)
    B = b_coefficients(p, trunc, M + 1, mpctx)
    a_terms, b_terms = [], []
    pw = mpctx.mpf(1)
    for j in range(M + 1):
        a_terms.append(pw * to_mpf(A[j], mpctx))
        b_terms.append(pw * to_mpf(B[j], mpctx))
        pw = -pw / xk
    cos_t, sin_t = trig_pi(th, mpctx)
    c_b = -2 * sin_t / mpctx.sqrt(2 * mpctx.pi * xk)
    pre = xk ** to_mpf(th, mpctx) * mpctx.exp(-xk)
    value = pre * (cos_t * mpctx.fsum(a_terms[:M]) + c_b * mpctx.fsum(b_terms[:M]))
    last = abs(pre) * (abs(cos_t * a_terms[M - 1]) + abs(c_b * b_terms[M - 1]))
    bmax = 2 / mpctx.sqrt(2 * mpctx.pi * xk)
    err = abs(pre) * (abs(a_terms[M]) + bmax * abs(b_terms[M]))
    return ExpansionValue(value, M, last, err)


def kummer_to_weber_factor(kind, a, x, ctx: PrecisionContext | None = None):
    """Factor mapping :func:`refined_kummer` onto E_r: Gamma(b)/Gamma(a_k), times x if odd."""
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    mpctx = ctx.mp()
    p = KummerParams.from_weber(kind, a, x)
    factor = mpctx.gamma(to_mpf(p.b_k, mpctx)) * mpctx.mpf(reciprocal_gamma(p.a_k, ctx))
    if kind is Kind.ODD:
        factor *= to_mpf(x, mpctx)
    return factor


def standard_expansion(kind, a, x, K: int, ctx: PrecisionContext | None = None):
    """(algebraic part, exponentially small part), each truncated at K terms.

    The subdominant part carries 2 cos(pi theta) (even) or 2 sin(pi theta) (odd).
    """
    if K < 1:
        raise BadInputError("K must be >= 1")
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    mpctx = ctx.mp()
    alg = algebraic_sum(kind, a, x, K, ctx)
    a, am, xm = _prep(a, x, mpctx)
    cos_t, sin_t = trig_pi(theta(a), mpctx)
    trig = cos_t if kind is Kind.EVEN else sin_t
    pre = 2 * trig * _exp_prefactor(kind, a, am, xm, mpctx, ctx)
    terms = _poch_ratio_terms(mpctx.mpf(0.5) - am, xm, K + 1, -1, mpctx)
    if pre == 0:
        zero = mpctx.zero
        return alg, ExpansionValue(zero, K, zero, zero)
    exp_small = ExpansionValue(
        pre * mpctx.fsum(terms[:K]), K, abs(pre * terms[K - 1]), abs(pre * terms[K])
    )
    return alg, exp_small


def compare(kind, a, x, M: int, ctx: PrecisionContext | None = None) -> ExpansionReport:
    """Oracle value, optimally truncated algebraic sum, its remainder, and both
    subdominant approximations side by side."""
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    trunc = optimal_truncation(a, x)
    z = -to_mpf(x, ctx.mp()) ** 2 / 2
    wide = ctx.raised(ctx.guard(z))
    w = w_ref(kind, a, x, wide)
    alg = algebraic_sum(kind, a, x, trunc.m0, wide)
    resid = w - alg.value
    refined = refined_exp_small(kind, a, x, M, trunc, ctx)
    _, standard = standard_expansion(kind, a, x, M, ctx)
    mpctx = ctx.mp()
    ratio = standard.value / resid if resid != 0 else mpctx.nan
    return ExpansionReport(
        kind=kind,
        a=a,
        x=x,
        M=M,
        trunc=trunc,
        w_oracle=w,
        algebraic=alg,
        residual_W=resid,
        refined_E=refined,
        standard_exp_small=standard,
        ratio_standard_over_W=ratio,
    )
