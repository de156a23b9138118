"""Exact generation of the saddle-point coefficients G_k(gamma).

The phase map ``w**2 / 2 = t - log(t) - 1`` is inverted near the saddle
``t = 1`` on the branch ``w ~ t - 1``, and the expansion

    t**(gamma - 1) / (1 - t) * dt/dw + 1/w = sum_k G_k(gamma) w**k

is carried out with ``gamma`` kept symbolic.  All arithmetic is exact over
:class:`fractions.Fraction`; the results are polynomials in ``gamma``
(:class:`GammaPolynomial`).
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import BadInputError, NotGeneratedError

__all__ = [
    "GammaPolynomial",
    "FormalSeries",
    "invert_phase_map",
    "verify_phase_identity",
    "g_generating_series",
    "g_polynomials",
    "g_polynomial",
    "ghat_polynomial",
    "ghat_eval",
    "dump_g_json",
    "G_CEILING",
]

#: Highest index k for which G_k may be generated (B_j needs G_{2j}).
G_CEILING = 32

Scalar = Union[int, Fraction]


class GammaPolynomial:
    """Polynomial in gamma with exact rational coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "GammaPolynomial":
        return cls((c,))

    @classmethod
    def gamma(cls) -> "GammaPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "GammaPolynomial":
        if isinstance(other, GammaPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return GammaPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return GammaPolynomial(
            [x + b[i] if i < len(b) else x for i, x in enumerate(a)]
        )

    __radd__ = __add__

    def __neg__(self) -> "GammaPolynomial":
        return GammaPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return GammaPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, GammaPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return GammaPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return GammaPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return GammaPolynomial(c / other for c in self.coeffs)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, gamma):
        """Horner evaluation; exact for rational gamma, any numeric type otherwise."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * gamma + c
        return acc

    def eval_mp(self, gamma, mpctx):
        acc = mpctx.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * gamma + mpctx.mpf(c.numerator) / c.denominator
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "GammaPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*g^{i}")
        return "GammaPolynomial(" + " + ".join(terms) + ")"


class FormalSeries:
    """Truncated Laurent series ``sum_{n=lowest}^{order} c_n w**n``.

    Coefficients may be Fractions or GammaPolynomials; anything closed under
    ``+``, ``*`` and division by an integer works.
    """

    __slots__ = ("coeffs", "lowest_power")

    def __init__(self, coeffs: Sequence, lowest_power: int = 0):
        if not coeffs:
            raise BadInputError("a formal series needs at least one coefficient")
        self.coeffs = tuple(coeffs)
        self.lowest_power = lowest_power

    @property
    def order(self) -> int:
        return self.lowest_power + len(self.coeffs) - 1

    def __getitem__(self, n: int):
        i = n - self.lowest_power
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if n < self.lowest_power:
            return 0 * self.coeffs[0]
        raise IndexError(f"coefficient w^{n} is beyond the series order {self.order}")

    def truncate(self, order: int) -> "FormalSeries":
        if order < self.lowest_power:
            raise BadInputError("truncation below the lowest power")
        return FormalSeries(self.coeffs[: order - self.lowest_power + 1], self.lowest_power)

    def _zero(self):
        return 0 * self.coeffs[0]

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            # a scalar is exact to all orders
            if self.lowest_power > 0 or self.order < 0:
                raise BadInputError("scalar lies outside the series' retained powers")
            out = list(self.coeffs)
            out[-self.lowest_power] = out[-self.lowest_power] + other
            return FormalSeries(out, self.lowest_power)
        lo = min(self.lowest_power, other.lowest_power)
        hi = min(self.order, other.order)
        zero = self._zero()
        out = []
        for n in range(lo, hi + 1):
            x = self[n] if n >= self.lowest_power else zero
            y = other[n] if n >= other.lowest_power else zero
            out.append(x + y)
        return FormalSeries(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs], self.lowest_power)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "FormalSeries":
        return FormalSeries([factor * c for c in self.coeffs], self.lowest_power)

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return self.scale(other)
        lo = self.lowest_power + other.lowest_power
        # Truncation order of a product is limited by the relative precision of each factor.
        hi = min(self.order + other.lowest_power, other.order + self.lowest_power)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(hi - lo + 1):
            acc = None
            for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
                term = a[i] * b[n - i]
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else self._zero())
        return FormalSeries(out, lo)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, k: int) -> "FormalSeries":
        """Multiply by w**k."""
        return FormalSeries(self.coeffs, self.lowest_power + k)

    def derivative(self) -> "FormalSeries":
        out = [n * self[n] for n in range(self.lowest_power, self.order + 1)]
        if self.lowest_power == 0:
            if len(out) == 1:
                return FormalSeries([self._zero()], 0)
            return FormalSeries(out[1:], 0)
        return FormalSeries(out, self.lowest_power - 1)

    def integral(self) -> "FormalSeries":
        if self.lowest_power < 0 and self[-1] != 0:
            raise BadInputError("cannot integrate a series with a w^-1 term")
        start = max(self.lowest_power, 0)
        out = [self._zero()] + [self[n] / (n + 1) for n in range(start, self.order + 1)]
        if start > 0:
            out = [self._zero()] * start + out
        return FormalSeries(out, 0)

    def reciprocal(self) -> "FormalSeries":
        """1/s for s with invertible leading (lowest-power) coefficient."""
        c0 = self.coeffs[0]
        if isinstance(c0, GammaPolynomial):
            if c0.degree != 0:
                raise BadInputError("leading coefficient is not an invertible constant")
            c0 = c0.coeffs[0]
        if c0 == 0:
            raise BadInputError("leading coefficient vanishes")
        inv0 = 1 / Fraction(c0)
        n_terms = len(self.coeffs)
        out = [inv0 * (1 + 0 * self.coeffs[0])]
        for n in range(1, n_terms):
            acc = None
            for k in range(1, n + 1):
                term = self.coeffs[k] * out[n - k]
                acc = term if acc is None else acc + term
            out.append(-(acc * inv0))
        return FormalSeries(out, -self.lowest_power)

    def log(self) -> "FormalSeries":
        """log(s) for s = 1 + O(w), via the integral of s'/s."""
        if self.lowest_power != 0 or self.coeffs[0] != 1:
            raise BadInputError("formal log needs a series with constant term 1")
        if len(self.coeffs) == 1:
            return FormalSeries([self._zero()])
        return (self.derivative() * self.truncate(self.order - 1).reciprocal()).integral()

    def exp(self) -> "FormalSeries":
        """exp(s) for s = O(w); uses n e_n = sum_k k s_k e_{n-k}."""
        if self.lowest_power != 0 or self.coeffs[0] != 0:
            raise BadInputError("formal exp needs a series with zero constant term")
        s = self.coeffs
        one = 1 + self._zero()
        out = [one]
        for n in range(1, len(s)):
            acc = None
            for k in range(1, n + 1):
                term = s[k] * out[n - k] * k
                acc = term if acc is None else acc + term
            out.append(acc / n)
        return FormalSeries(out)

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """self(inner(w)) for a power series self and inner = O(w)."""
        if self.lowest_power < 0:
            raise BadInputError("outer series of a composition must be a power series")
        if inner.lowest_power != 0 or inner.coeffs[0] != 0:
            raise BadInputError("inner series must have zero constant term")
        order = min(inner.order, self.order)
        inner = inner.truncate(order)
        result = FormalSeries([self[0]] + [0 * self[0]] * order)
        power = None
        for n in range(1, order + 1):
            power = inner if power is None else (power * inner).truncate(order)
            if self[n] != 0:
                result = result + power.scale(self[n])
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        lo = min(self.lowest_power, other.lowest_power)
        hi = max(self.order, other.order)
        if self.order != other.order:
            return False
        return all(self[n] == other[n] for n in range(lo, hi + 1))

    def __repr__(self) -> str:
        return f"FormalSeries({list(self.coeffs)!r}, lowest_power={self.lowest_power})"


def _log1p_series(order: int) -> FormalSeries:
    return FormalSeries(
        [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]
    )


def invert_phase_map(order: int) -> FormalSeries:
    """Return t(w) through w**order with t - log t - 1 = w**2/2 and t ~ 1 + w.

    Writing t = 1 + u, the map reads w = u*f(u) with
    f(u)**2 = 2(u - log(1+u))/u**2, and Lagrange inversion gives
    [w^n] u = (1/n) [u^(n-1)] f(u)**(-n).
    """
    if order < 1:
        raise BadInputError("order must be >= 1")
    # q(u) = 2 (u - log(1+u)) / u^2 = sum 2 (-1)^n u^n / (n + 2)
    q = FormalSeries([Fraction(2 * (-1) ** n, n + 2) for n in range(order)])
    log_q = q.log()
    coeffs = [Fraction(1), Fraction(1)]
    for n in range(2, order + 1):
        g_pow = log_q.scale(Fraction(-n, 2)).exp()
        coeffs.append(g_pow[n - 1] / n)
    return FormalSeries(coeffs)


def verify_phase_identity(series: FormalSeries) -> bool:
    """True iff t - log t - 1 - w**2/2 vanishes through ``series.order``.

    log t is formed by composing log(1+v) with v = t - 1, which is independent
    of the Lagrange route in :func:`invert_phase_map`.
    """
    if series.lowest_power != 0 or series[0] != 1:
        raise BadInputError("phase identity needs a series with constant term 1")
    order = series.order
    v = series - 1
    log_t = _log1p_series(order).compose(v)
    diff = series - log_t - 1
    return all(
        diff[n] == (Fraction(1, 2) if n == 2 else 0) for n in range(order + 1)
    )


def g_generating_series(max_index: int) -> FormalSeries:
    """Laurent series of t**(gamma-1)/(1-t) * dt/dw through w**max_index.

    Its w**-1 coefficient is exactly -1; adding 1/w leaves sum G_k w**k.
    """
    order = max_index + 2
    t = invert_phase_map(order)
    gamma_minus_1 = GammaPolynomial((-1, 1))
    t_pow = FormalSeries([gamma_minus_1 * c for c in t.log().coeffs]).exp()
    # (t - 1)/w = 1 + c2 w + c3 w^2 + ...; 1/(1 - t) = -w^-1 * that^-1
    h_inv = FormalSeries(t.coeffs[1:]).reciprocal()
    p = t_pow.truncate(order - 1) * t.derivative() * h_inv
    return (-p).shift(-1)


def _generate(max_index: int) -> tuple[GammaPolynomial, ...]:
    series = g_generating_series(max_index)
    if series[-1] != -1:
        raise AssertionError("pole of the G-generating function does not cancel")
    return tuple(series[k] for k in range(max_index + 1))


_cache: tuple[GammaPolynomial, ...] = ()
_cache_lock = threading.Lock()


def g_polynomials(max_index: int) -> list[GammaPolynomial]:
    """G_0 ... G_{max_index} as exact polynomials in gamma (odd indices included)."""
    global _cache
    if max_index < 0:
        raise BadInputError("max_index must be >= 0")
    if max_index > G_CEILING:
        raise NotGeneratedError(
            f"G_{max_index} is beyond the generation ceiling G_{G_CEILING}"
        )
    cached = _cache
    if len(cached) <= max_index:
        with _cache_lock:
            if len(_cache) <= max_index:
                # round up so repeated small requests do not regenerate
                _cache = _generate(max(max_index, min(2 * len(_cache) + 8, G_CEILING)))
            cached = _cache
    return list(cached[: max_index + 1])


def g_polynomial(index: int) -> GammaPolynomial:
    return g_polynomials(index)[index]


def ghat_polynomial(k: int) -> GammaPolynomial:
    """Scaled even coefficient 6**(2k) * G_{2k}."""
    if k < 0:
        raise BadInputError("k must be >= 0")
    if 2 * k > G_CEILING:
        raise NotGeneratedError(f"Ghat_{2 * k} is not generated (ceiling G_{G_CEILING})")
    return g_polynomial(2 * k) * 36**k


def ghat_eval(k: int, gamma) -> Fraction:
    return ghat_polynomial(k)(Fraction(gamma))


def dump_g_json(max_index: int, scaled: bool = False) -> str:
    """JSON array of ``{"index": k, "gamma_coeffs": ["num/den", ...]}``.

    With ``scaled`` only even indices are emitted, as 6**k * G_k.
    """
    rows = []
    for k, poly in enumerate(g_polynomials(max_index)):
        if scaled:
            if k % 2:
                continue
            poly = poly * 6**k
        rows.append(
            {
                "index": k,
                "gamma_coeffs": [f"{c.numerator}/{c.denominator}" for c in poly.coeffs],
            }
        )
    return json.dumps(rows, indent=1)
