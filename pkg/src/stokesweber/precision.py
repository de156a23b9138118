"""Working-precision policy and number coercion helpers.

Every evaluation runs in a private :class:`mpmath.MPContext` so that no
global rounding state is shared between callers.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Rational

import mpmath

from .errors import BadInputError, PrecisionExhaustedError

LOG10_E = math.log10(math.e)


class Kind(enum.Enum):
    """Even solution w1 or odd solution w2."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise BadInputError(f"kind must be 'even' or 'odd', got {value!r}") from None


_contexts: dict[int, mpmath.ctx_mp.MPContext] = {}
_contexts_lock = threading.Lock()


def mp_context(dps: int) -> mpmath.ctx_mp.MPContext:
    """A shared, never-mutated mpmath context working at ``dps`` decimal digits."""
    ctx = _contexts.get(dps)
    if ctx is None:
        with _contexts_lock:
            ctx = _contexts.get(dps)
            if ctx is None:
                ctx = mpmath.MPContext()
                ctx.dps = dps
                _contexts[dps] = ctx
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Decimal working precision plus the cancellation guard policy.

    ``guard(z)`` is the number of extra digits spent on an alternating Kummer
    series at negative argument ``z``: the terms peak near ``e**|z|`` times
    the result, so ``ceil(|z| log10 e)`` digits cancel.
    """

    digits: int = 50
    guard_extra: int = 10
    max_digits: int = 5000

    def __post_init__(self):
        if self.digits < 30:
            raise BadInputError("digits must be >= 30")

    def guard(self, z=0) -> int:
        z = float(z)
        if z >= 0:
            return self.guard_extra
        return math.ceil(-z * LOG10_E) + self.guard_extra

    def effective(self, z=0) -> int:
        eff = self.digits + self.guard(z)
        if eff > self.max_digits:
            raise PrecisionExhaustedError(
                f"cancellation guard needs {eff} digits, ceiling is {self.max_digits}"
            )
        return eff

    def mp(self, z=0) -> mpmath.ctx_mp.MPContext:
        return mp_context(self.effective(z))

    def raised(self, extra: int) -> "PrecisionContext":
        return PrecisionContext(self.digits + extra, self.guard_extra, self.max_digits)


def as_rational(value):
    """Exact Fraction for ints, Fractions, decimal or ``p/q`` strings; else None."""
    if isinstance(value, bool):
        raise BadInputError("booleans are not numbers here")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise BadInputError(f"non-finite input {value!r}")
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            try:
                return Fraction(Decimal(value.strip()))
            except (InvalidOperation, ValueError):
                raise BadInputError(f"cannot parse number {value!r}") from None
    return None


def to_mpf(value, mpctx):
    """Convert to an mpf of ``mpctx``; rationals are divided at full precision."""
    q = as_rational(value)
    if q is not None:
        return mpctx.mpf(q.numerator) / q.denominator
    return mpctx.mpf(value)


def exact_trig_pi(theta):
    """(cos(pi*theta), sin(pi*theta)) with exact 0/+-1 at multiples of 1/2.

    Returns None when theta is not a rational multiple of 1/2.
    """
    q = as_rational(theta)
    if q is None or (2 * q).denominator != 1:
        return None
    n = int(2 * q) % 4
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][n]


def trig_pi(theta, mpctx):
    exact = exact_trig_pi(theta)
    if exact is not None:
        return mpctx.mpf(exact[0]), mpctx.mpf(exact[1])
    t = to_mpf(theta, mpctx)
    return mpctx.cospi(t), mpctx.sinpi(t)


def affine(value, scale, offset):
    """scale*value + offset, exact for rational value, mpf otherwise."""
    q = as_rational(value)
    if q is not None:
        return Fraction(scale) * q + Fraction(offset)
    ctx = value.context
    return to_mpf(scale, ctx) * value + to_mpf(offset, ctx)
