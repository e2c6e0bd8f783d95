"""Precision-context real arithmetic and the special functions used everywhere else.

A :class:`PrecisionContext` fixes the number of decimal significant digits for
all real arithmetic derived from it.  Values are mpmath floats bound to the
context that produced them; contexts are independent objects, so two different
precisions never interfere and nothing global is mutated.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from mpmath.ctx_mp import MPContext

from .errors import DomainError, PrecisionError

MIN_DIGITS = 30

# extra working digits used inside composite operations before rounding back
_GUARD_DIGITS = 10


class PrecisionContext:
    """Working precision (decimal significant digits) for real arithmetic.

    Settings below ``MIN_DIGITS`` are rejected: the toolkit refuses to run in a
    regime where its own guard margins are larger than the precision itself.
    Two contexts with equal ``digits`` are interchangeable.
    """

    __slots__ = ("digits", "_mp")

    def __init__(self, digits: int):
        if not isinstance(digits, int) or digits < MIN_DIGITS:
            raise DomainError(f"digits must be an integer >= {MIN_DIGITS}, got {digits!r}")
        object.__setattr__(self, "digits", digits)
        mp = MPContext()
        mp.dps = digits
        object.__setattr__(self, "_mp", mp)

    def __setattr__(self, name, value):
        raise AttributeError("PrecisionContext is immutable")

    def __eq__(self, other):
        return isinstance(other, PrecisionContext) and other.digits == self.digits

    def __hash__(self):
        return hash(("PrecisionContext", self.digits))

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits})"

    @property
    def mp(self) -> MPContext:
        """The underlying mpmath context (dps == digits)."""
        return self._mp

    def real(self, value):
        """Convert ``value`` to a Real at this precision.

        Accepts int, Fraction, decimal string, float, and mpmath floats from
        any context.  Decimal strings and Fractions are converted exactly and
        then rounded once, so e.g. "3.474" means exactly 3474/1000.
        """
        mp = self._mp
        if isinstance(value, Fraction):
            return mp.mpf(value.numerator) / value.denominator
        if isinstance(value, str):
            return self.real(Fraction(value))
        if isinstance(value, (int, float)):
            return mp.mpf(value)
        raw = getattr(value, "_mpf_", None)
        if raw is not None:
            return mp.mpf(raw)
        raise DomainError(f"cannot interpret {value!r} as a real number")

    def is_finite(self, x) -> bool:
        return self._mp.isfinite(x)


@functools.lru_cache(maxsize=None)
def context(digits: int) -> PrecisionContext:
    """Shared context instance per digit count (used by internal caches)."""
    return PrecisionContext(digits)


def _check_finite(ctx: PrecisionContext, x, what: str):
    if not ctx.mp.isfinite(x):
        raise DomainError(f"{what} produced a non-finite value")
    return x


def const_pi(ctx: PrecisionContext):
    """pi, correct to context precision."""
    return ctx.mp.pi


def sqrt_real(x, ctx: PrecisionContext):
    x = ctx.real(x)
    if x < 0:
        raise DomainError(f"sqrt of negative value {x}")
    return _check_finite(ctx, ctx.mp.sqrt(x), "sqrt")


def exp_real(x, ctx: PrecisionContext):
    return _check_finite(ctx, ctx.mp.exp(ctx.real(x)), "exp")


def sinh_real(x, ctx: PrecisionContext):
    return _check_finite(ctx, ctx.mp.sinh(ctx.real(x)), "sinh")


def cosh_real(x, ctx: PrecisionContext):
    return _check_finite(ctx, ctx.mp.cosh(ctx.real(x)), "cosh")


def ulp(x, ctx: PrecisionContext):
    """One unit in the last place of ``x`` at context precision (of 1 if x == 0)."""
    mp = ctx.mp
    x = ctx.real(x)
    if x == 0:
        return mp.mpf(10) ** (1 - ctx.digits)
    return mp.mpf(2) ** (mp.mag(x) - mp.prec)


def lambert_w_minus1(x, ctx: PrecisionContext):
    """Branch -1 of the Lambert W function: the solution w <= -1 of w*e^w = x.

    Defined for -1/e <= x < 0.  Seeds with the series at the branch point or
    the log-log asymptote elsewhere, then refines by Halley iteration at twice
    the working precision, so the returned value is correctly rounded.
    """
    hi = context(2 * ctx.digits + _GUARD_DIGITS).mp
    x = hi.mpf(ctx.real(x)._mpf_)
    if x >= 0:
        raise DomainError(f"lambert_w_minus1 requires x < 0, got {x}")
    t = 1 + hi.e * x  # distance above the branch point -1/e
    if abs(t) <= hi.mpf(10) ** (-ctx.digits):
        # x is the branch point up to representation noise at ctx precision
        return ctx.real(-1)
    if t < 0:
        raise DomainError(f"lambert_w_minus1 requires x >= -1/e, got {x}")
    if t < hi.mpf("0.05"):
        w = -1 - hi.sqrt(2 * t)
        if hi.sqrt(2 * t) < hi.mpf(10) ** (-ctx.digits - 2):
            return ctx.real(w)
    else:
        log_neg_x = hi.log(-x)
        w = log_neg_x - hi.log(-log_neg_x)
    tol = hi.mpf(10) ** (-2 * ctx.digits - 2)
    for _ in range(300):
        ew = hi.exp(w)
        f = w * ew - x
        wp1 = w + 1
        dw = f / (ew * wp1 - (w + 2) * f / (2 * wp1))
        w -= dw
        if abs(dw) <= abs(w) * tol:
            return ctx.real(w)
    raise PrecisionError(f"lambert_w_minus1 did not converge for x={x}")


@functools.lru_cache(maxsize=None)
def pi_enclosure(digits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure lo < pi < hi with hi - lo < 10^-digits.

    Machin's identity pi = 16*arctan(1/5) - 4*arctan(1/239), with each arctan
    bracketed by consecutive partial sums of its alternating series.  Entirely
    Fraction arithmetic, so the enclosure is independent of any float library.
    """

    def arctan_inv_bounds(q: int) -> tuple[Fraction, Fraction]:
        # partial sums of sum_k (-1)^k / ((2k+1) q^(2k+1)) alternate around the limit
        target = Fraction(1, 10 ** (digits + 4))
        s = Fraction(0)
        k = 0
        power = Fraction(1, q)
        while True:
            term = power / (2 * k + 1)
            if term < target and k % 2 == 0:
                # the pending term is positive, so s undershoots and s + term overshoots
                return s, s + term
            s += term if k % 2 == 0 else -term
            power /= q * q
            k += 1

    a_lo, a_hi = arctan_inv_bounds(5)
    b_lo, b_hi = arctan_inv_bounds(239)
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo
