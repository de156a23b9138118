"""Reference values of w1 and w2 from the defining Kummer power series.

    w1(a, x) = M(a/2 + 1/4, 1/2, -x**2/2)
    w2(a, x) = x M(a/2 + 3/4, 3/2, -x**2/2)

The series is alternating at negative argument, so the working precision is
raised by the cancellation guard of :class:`PrecisionContext`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleError, PrecisionExhaustedError
from .precision import Kind, PrecisionContext, affine, as_rational, to_mpf

__all__ = [
    "kummer_m",
    "kummer_args",
    "w_ref",
    "reciprocal_gamma",
    "ode_terms",
    "ode_residual",
    "w_residual",
]

MAX_TERMS = 200_000
# consecutive below-threshold terms required before stopping
_QUIET_RUN = 3


def _check_b(b) -> None:
    q = as_rational(b)
    if q is not None:
        if q.denominator == 1 and q <= 0:
            raise PoleError(f"M(a, b, z) has a pole at b = {q}")
    elif b <= 0 and b == int(b):
        raise PoleError(f"M(a, b, z) has a pole at b = {b}")


def _series_terms(a, b, z, mpctx):
    """Yield successive terms (a)_k/(b)_k z**k/k! of the Kummer series."""
    term = mpctx.mpf(1)
    k = 0
    while True:
        yield k, term
        term = term * (a + k) / (b + k) * z / (k + 1)
        k += 1


def kummer_m(a, b, z, ctx: PrecisionContext | None = None):
    """Confluent hypergeometric M(a, b, z) by direct summation.

    Summation stops after three consecutive terms fall below
    ``10**-eff`` times the largest term seen, ``eff`` being the effective
    precision.  The returned mpf carries the working (guarded) precision.
    """
    ctx = ctx or PrecisionContext()
    _check_b(b)
    mpctx = ctx.mp(z)
    a, b, z = to_mpf(a, mpctx), to_mpf(b, mpctx), to_mpf(z, mpctx)
    tol = mpctx.mpf(10) ** (-mpctx.dps)
    total = mpctx.mpf(0)
    biggest = mpctx.mpf(0)
    quiet = 0
    for k, term in _series_terms(a, b, z, mpctx):
        total += term
        mag = abs(term)
        if mag > biggest:
            biggest = mag
        quiet = quiet + 1 if mag <= tol * biggest else 0
        if quiet >= _QUIET_RUN:
            return total
        if k > MAX_TERMS:
            raise PrecisionExhaustedError("Kummer series did not settle")


def kummer_args(kind, a):
    """Kummer (a_k, b_k) for the even or odd solution with Weber parameter a."""
    kind = Kind.parse(kind)
    if kind is Kind.EVEN:
        return affine(a, Fraction(1, 2), Fraction(1, 4)), Fraction(1, 2)
    return affine(a, Fraction(1, 2), Fraction(3, 4)), Fraction(3, 2)


def _half_x2(x):
    q = as_rational(x)
    return -(q * q) / 2 if q is not None else -(x * x) / 2


def w_ref(kind, a, x, ctx: PrecisionContext | None = None):
    """w1 (even) or w2 (odd) at real x; any sign of x is accepted."""
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    ak, bk = kummer_args(kind, a)
    z = _half_x2(x)
    m = kummer_m(ak, bk, z, ctx)
    if kind is Kind.EVEN:
        return m
    return to_mpf(x, ctx.mp(z)) * m


def reciprocal_gamma(x, ctx: PrecisionContext | None = None):
    """1/Gamma(x); exactly zero at the poles 0, -1, -2, ..."""
    ctx = ctx or PrecisionContext()
    mpctx = ctx.mp()
    q = as_rational(x)
    if q is not None and q.denominator == 1 and q <= 0:
        return mpctx.zero
    return mpctx.rgamma(to_mpf(x, mpctx))


def ode_terms(kind, a, x, ctx: PrecisionContext | None = None):
    """(w, w', w'') from the termwise-differentiated power series in x."""
    ctx = ctx or PrecisionContext()
    kind = Kind.parse(kind)
    ak, bk = kummer_args(kind, a)
    z = _half_x2(x)
    _check_b(bk)
    mpctx = ctx.mp(z)
    xm = to_mpf(x, mpctx)
    ak, bk = to_mpf(ak, mpctx), to_mpf(bk, mpctx)
    shift = 0 if kind is Kind.EVEN else 1
    tol = mpctx.mpf(10) ** (-mpctx.dps)
    # coefficient of x**(2k + shift) is (ak)_k/(bk)_k (-1/2)**k / k!
    coef = mpctx.mpf(1)
    w = dw = d2w = mpctx.mpf(0)
    biggest = mpctx.mpf(0)
    quiet = 0
    k = 0
    while True:
        n = 2 * k + shift
        t0 = coef * xm**n
        t1 = n * coef * xm ** (n - 1) if n >= 1 else mpctx.zero
        t2 = n * (n - 1) * coef * xm ** (n - 2) if n >= 2 else mpctx.zero
        w += t0
        dw += t1
        d2w += t2
        mag = max(abs(t0), abs(t1), abs(t2))
        biggest = max(biggest, mag)
        quiet = quiet + 1 if mag <= tol * biggest else 0
        if quiet >= _QUIET_RUN:
            return w, dw, d2w
        coef = coef * (ak + k) / (bk + k) / (-2 * (k + 1))
        k += 1
        if k > MAX_TERMS:
            raise PrecisionExhaustedError("differentiated series did not settle")


def ode_residual(kind, a, x, ctx: PrecisionContext | None = None):
    """w'' + x w' + (a + 1/2) w for the series solution; zero up to rounding."""
    ctx = ctx or PrecisionContext()
    w, dw, d2w = ode_terms(kind, a, x, ctx)
    mpctx = ctx.mp(_half_x2(x))
    xm = to_mpf(x, mpctx)
    am = to_mpf(a, mpctx)
    return d2w + xm * dw + (am + mpctx.mpf(0.5)) * w


def w_residual(kind, a, x, ctx: PrecisionContext | None = None):
    """w_r minus its optimally truncated algebraic expansion.

    The difference is about ``exp(-x**2/2)`` times w itself, so the oracle is
    evaluated with the digits that subtraction will cancel added on top.
    """
    from .asymptotics import algebraic_sum
    from .coefficients import optimal_truncation

    ctx = ctx or PrecisionContext()
    trunc = optimal_truncation(a, x)
    z = _half_x2(x)
    wide = ctx.raised(ctx.guard(z))
    w = w_ref(kind, a, x, wide)
    alg = algebraic_sum(kind, a, x, trunc.m0, wide)
    return w - alg.value
