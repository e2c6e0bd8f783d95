"""Truncated formal power series, enough to rebuild the coefficient generator.

Only the operations the generating-function check needs: coefficientwise sum,
Cauchy product, exp of a series with zero constant term, and real powers of a
series with unit constant term.  Everything is dense, index 0..order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import coeff_c
from .errors import DomainError
from .precision import PrecisionContext


@dataclass(frozen=True)
class PowerSeries:
    """Maclaurin coefficients 0..order at a fixed precision context."""

    coeffs: tuple
    order: int
    context: PrecisionContext


def power_series(values, ctx: PrecisionContext, order: int | None = None) -> PowerSeries:
    """Series from a coefficient list, zero-padded or truncated to ``order``."""
    converted = [ctx.real(v) for v in values]
    if order is None:
        order = len(converted) - 1
    if order < 0:
        raise DomainError("order must be nonnegative")
    zero = ctx.mp.mpf(0)
    converted = (converted + [zero] * (order + 1))[: order + 1]
    return PowerSeries(coeffs=tuple(converted), order=order, context=ctx)


def _common_order(a: PowerSeries, b: PowerSeries) -> int:
    if a.context != b.context:
        raise DomainError("series have different precision contexts")
    return min(a.order, b.order)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = _common_order(a, b)
    coeffs = tuple(a.coeffs[i] + b.coeffs[i] for i in range(order + 1))
    return PowerSeries(coeffs=coeffs, order=order, context=a.context)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at min(a.order, b.order)."""
    order = _common_order(a, b)
    mp = a.context.mp
    out = [mp.mpf(0)] * (order + 1)
    for i in range(order + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return PowerSeries(coeffs=tuple(out), order=order, context=a.context)


def _scale(a: PowerSeries, factor) -> PowerSeries:
    factor = a.context.real(factor)
    return PowerSeries(
        coeffs=tuple(c * factor for c in a.coeffs), order=a.order, context=a.context
    )


def _shift(a: PowerSeries) -> PowerSeries:
    """Multiply by z (drops the top coefficient to keep the order)."""
    mp = a.context.mp
    coeffs = (mp.mpf(0),) + a.coeffs[: a.order]
    return PowerSeries(coeffs=coeffs, order=a.order, context=a.context)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term, via (exp a)' = a' * exp a."""
    if a.coeffs[0] != 0:
        raise DomainError("series_exp needs a zero constant term")
    mp = a.context.mp
    out = [mp.mpf(1)] + [mp.mpf(0)] * a.order
    for k in range(1, a.order + 1):
        acc = mp.mpf(0)
        for i in range(1, k + 1):
            acc += i * a.coeffs[i] * out[k - i]
        out[k] = acc / k
    return PowerSeries(coeffs=tuple(out), order=a.order, context=a.context)


def series_binomial_power(base: PowerSeries, alpha) -> PowerSeries:
    """base^alpha for a series with unit constant term, via (f^a)' f = a f' f^a."""
    if base.coeffs[0] != 1:
        raise DomainError("series_binomial_power needs a unit constant term")
    ctx = base.context
    mp = ctx.mp
    alpha = ctx.real(alpha)
    out = [mp.mpf(1)] + [mp.mpf(0)] * base.order
    for k in range(1, base.order + 1):
        acc = mp.mpf(0)
        for i in range(1, k + 1):
            acc += ((alpha + 1) * i - k) * base.coeffs[i] * out[k - i]
        out[k] = acc / k
    return PowerSeries(coeffs=tuple(out), order=base.order, context=ctx)


def gf_coefficients(order: int, ctx: PrecisionContext) -> list:
    """Maclaurin coefficients of the coefficient generator, up to z^order.

    Assembles exp(-(pi/6) * z/(sqrt(1-z^2)+1)) * (1/(1-z^2)
    - (6/pi) * z/(1-z^2)^(3/2)) from the series primitives; coefficient m
    equals sqrt(24)^m * c_m, which is what :func:`coefficients.coeff_c`
    produces from the closed form, so comparing the two routes checks both.
    """
    if order < 0:
        raise DomainError("order must be nonnegative")
    mp = ctx.mp
    one_minus_z2 = power_series([1, 0, -1], ctx, order)
    root = series_binomial_power(one_minus_z2, mp.mpf(1) / 2)  # sqrt(1-z^2)
    # z / (sqrt(1-z^2) + 1): normalize the constant term to 1 before inverting
    half_root_plus_1 = _scale(series_add(root, power_series([1], ctx, order)), mp.mpf(1) / 2)
    inner = _shift(_scale(series_binomial_power(half_root_plus_1, -1), mp.mpf(1) / 2))
    exp_part = series_exp(_scale(inner, -mp.pi / 6))
    inv = series_binomial_power(one_minus_z2, -1)  # 1/(1-z^2)
    inv_32 = series_binomial_power(one_minus_z2, -mp.mpf(3) / 2)  # (1-z^2)^(-3/2)
    bracket = series_add(inv, _scale(_shift(inv_32), -6 / mp.pi))
    return list(series_mul(exp_part, bracket).coeffs)


def gf_reference(order: int, ctx: PrecisionContext) -> list:
    """The same coefficients from the closed form: sqrt(24)^m * c_m."""
    mp = ctx.mp
    root24 = mp.sqrt(24)
    return [root24**m * coeff_c(m, ctx) for m in range(order + 1)]
