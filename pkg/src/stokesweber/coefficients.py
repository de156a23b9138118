"""Coefficients of the exponentially small expansion.

Given Kummer parameters (a, b) the two coefficient families are

    A_j = (1 - a)_j (b - a)_j / j!
    B_j = sum_{k=0}^{j} (-2)**k (1/2)_k A_{j-k} G_{2k}(alpha - (j - k))

where alpha is the offset of the optimal truncation index.  When every input
is rational the coefficients are computed exactly as Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadInputError, TruncationError
from .exact_series import g_polynomials
from .precision import Kind, PrecisionContext, affine, as_rational, to_mpf

__all__ = [
    "M_MAX",
    "TruncationSpec",
    "WeberParams",
    "KummerParams",
    "pochhammer",
    "theta",
    "optimal_truncation",
    "a_coefficients",
    "b_coefficients",
]

#: Default cap on the exponential-series truncation M.
M_MAX = 16


@dataclass(frozen=True)
class TruncationSpec:
    """Optimal truncation index m0 = x**2/2 - a + alpha."""

    m0: int
    alpha: object

    def __post_init__(self):
        if self.m0 < 1:
            raise TruncationError(f"m0 must be positive, got {self.m0}")
        if not abs(self.alpha) < 1:
            raise BadInputError(f"|alpha| must be < 1, got {self.alpha}")


@dataclass(frozen=True)
class WeberParams:
    a: object
    x: object
    M: int = 6

    def __post_init__(self):
        if not self.x > 0:
            raise BadInputError("x must be positive")
        if self.M < 1:
            raise BadInputError("M must be >= 1")

    @property
    def theta(self):
        return theta(self.a)


@dataclass(frozen=True)
class KummerParams:
    """Parameters of M(a_k, b_k, -x_k)."""

    a_k: object
    b_k: object
    x_k: object

    def __post_init__(self):
        if not self.x_k > 0:
            raise BadInputError("x_k must be positive")

    @classmethod
    def from_weber(cls, kind, a, x=1) -> "KummerParams":
        kind = Kind.parse(kind)
        qa, qx = as_rational(a), as_rational(x)
        a = qa if qa is not None else a
        x = qx if qx is not None else x
        xk = x * x / 2
        if kind is Kind.EVEN:
            return cls(affine(a, Fraction(1, 2), Fraction(1, 4)), Fraction(1, 2), xk)
        return cls(affine(a, Fraction(1, 2), Fraction(3, 4)), Fraction(3, 2), xk)

    @property
    def theta_hat(self):
        qa, qb = as_rational(self.a_k), as_rational(self.b_k)
        if qa is not None and qb is not None:
            return qa - qb
        mpctx = PrecisionContext().mp()
        return to_mpf(self.a_k, mpctx) - to_mpf(self.b_k, mpctx)


def pochhammer(base, k: int):
    """Rising factorial base (base+1) ... (base+k-1); 1 when k = 0."""
    if k < 0:
        raise BadInputError("k must be non-negative")
    out = 1
    for i in range(k):
        out = out * (base + i)
    return out


def theta(a):
    return affine(a, Fraction(1, 2), Fraction(-1, 4))


def optimal_truncation(a, x) -> TruncationSpec:
    """Nearest-integer truncation of the algebraic series; ties go to the larger m0."""
    qa, qx = as_rational(a), as_rational(x)
    if qa is not None and qx is not None:
        s = qx * qx / 2 - qa
        if s < 1:
            raise TruncationError(f"x too small: x^2/2 - a = {s} < 1")
        m0 = math.floor(s + Fraction(1, 2))
        return TruncationSpec(m0, m0 - s)
    ctx = PrecisionContext().mp()
    s = to_mpf(x, ctx) ** 2 / 2 - to_mpf(a, ctx)
    if s < 1:
        raise TruncationError(f"x too small: x^2/2 - a = {s} < 1")
    m0 = int(ctx.floor(s + ctx.mpf(0.5)))
    return TruncationSpec(m0, m0 - s)


def _exact_or_mp(values, mpctx):
    qs = [as_rational(v) for v in values]
    if all(q is not None for q in qs):
        return qs, True
    if mpctx is None:
        mpctx = PrecisionContext().mp()
    return [to_mpf(v, mpctx) for v in values], False


def a_coefficients(p: KummerParams, count: int, mpctx=None) -> list:
    """A_0 ... A_{count-1}; exact Fractions when a_k and b_k are rational."""
    if count < 1:
        raise BadInputError("count must be >= 1")
    (ak, bk), _ = _exact_or_mp([p.a_k, p.b_k], mpctx)
    out = [ak * 0 + 1]
    for j in range(1, count):
        out.append(out[-1] * (j - ak) * (bk - ak + j - 1) / j)
    return out


def b_coefficients(p: KummerParams, trunc: TruncationSpec, count: int, mpctx=None) -> list:
    """B_0 ... B_{count-1}, with G_{2k} evaluated at gamma = alpha - (j - k)."""
    if count < 1:
        raise BadInputError("count must be >= 1")
    if not abs(trunc.alpha) < 1:
        raise BadInputError("|alpha| must be < 1")
    g = g_polynomials(2 * (count - 1))
    (ak, bk, alpha), exact = _exact_or_mp([p.a_k, p.b_k, trunc.alpha], mpctx)
    a_list = a_coefficients(KummerParams(ak, bk, p.x_k), count, mpctx)
    if exact:
        geval = lambda poly, gam: poly(gam)  # noqa: E731
    else:
        mp = alpha.context
        geval = lambda poly, gam: poly.eval_mp(gam, mp)  # noqa: E731
    out = []
    for j in range(count):
        acc = 0
        weight = 1  # (-2)^k (1/2)_k
        for k in range(j + 1):
            acc = acc + weight * a_list[j - k] * geval(g[2 * k], alpha - (j - k))
            weight = -weight * (2 * k + 1)
        out.append(acc)
    return out
