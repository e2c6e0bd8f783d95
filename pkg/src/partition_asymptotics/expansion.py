"""Truncated expansion values and exact remainders.

Writing P(n) = 4*sqrt(3)*n*p(n)*exp(-pi*sqrt(2n/3)) for the normalized
partition number, the remainder after keeping N terms is

    R_N(n) = P(n) - sum_{m=0}^{N-1} c_m / n^(m/2),

computed here from the exact p(n) so that every bound under test is checked
against a value that does not depend on the bounds themselves.  The full
(convergent) series likewise gives the residual error

    r_hat(n) = P(n) - sum_{m=0}^{inf} c_m / n^(m/2)

and the tail mediant theta_N(n) = (full tail) / (first omitted term).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .coefficients import coeff_c
from .errors import PrecisionError, PrecisionWarning
from .partitions import PartitionTable
from .precision import PrecisionContext

# remainder values are trusted only down to this many digits above the noise
# floor; below it the subtraction has cancelled too much to report a result
_MIN_SIG_DIGITS = 10
_ERROR_MARGIN_DIGITS = 12


@dataclass(frozen=True)
class RemainderResult:
    """One evaluated truncation: p(n) = prefactor * (partial_sum + remainder)."""

    n: int
    N: int
    remainder: object
    partial_sum: object
    prefactor: object
    theta: Optional[object] = None


def mu(n: int, ctx: PrecisionContext):
    """(pi/6) * sqrt(24n - 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mp = ctx.mp
    return mp.pi / 6 * mp.sqrt(mp.mpf(24 * n - 1))


def prefactor(n: int, ctx: PrecisionContext):
    """exp(pi*sqrt(2n/3)) / (4*sqrt(3)*n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mp = ctx.mp
    return mp.exp(mp.pi * mp.sqrt(mp.mpf(2 * n) / 3)) / (4 * mp.sqrt(3) * n)


def partial_sum(n: int, N: int, ctx: PrecisionContext):
    """sum_{m=0}^{N-1} c_m / n^(m/2); zero when N == 0."""
    if n < 1 or N < 0:
        raise ValueError(f"need n >= 1 and N >= 0, got n={n}, N={N}")
    mp = ctx.mp
    root_n = mp.sqrt(mp.mpf(n))
    total = mp.mpf(0)
    for m in range(N):
        total += coeff_c(m, ctx) / root_n**m
    return total


def normalized_partition(n: int, table: PartitionTable, ctx: PrecisionContext):
    """4*sqrt(3)*n*p(n)*exp(-pi*sqrt(2n/3)), the quantity the series approximates."""
    mp = ctx.mp
    return 4 * mp.sqrt(3) * n * table.p(n) * mp.exp(-mp.pi * mp.sqrt(mp.mpf(2 * n) / 3))


def recommended_digits(n: int) -> int:
    """Digits needed so the exponential prefactor leaves ~30 digits of headroom."""
    return 30 + math.ceil(math.pi * math.sqrt(2 * n / 3) / math.log(10))


def _warn_if_low_precision(n: int, ctx: PrecisionContext) -> None:
    needed = recommended_digits(n)
    if ctx.digits < needed:
        warnings.warn(
            f"digits={ctx.digits} is below the recommended {needed} for n={n}; "
            "cancellation may leave few significant digits",
            PrecisionWarning,
            stacklevel=3,
        )


def _guard_cancellation(result, scale, ctx: PrecisionContext, what: str):
    """Reject results whose surviving significant digits fall below the floor."""
    if result == 0:
        raise PrecisionError(f"{what}: complete cancellation at digits={ctx.digits}")
    lost = float(ctx.mp.log10(scale / abs(result)))
    remaining = ctx.digits - _ERROR_MARGIN_DIGITS - lost
    if remaining < _MIN_SIG_DIGITS:
        raise PrecisionError(
            f"{what}: cancellation leaves ~{remaining:.1f} significant digits "
            f"at digits={ctx.digits}; raise the context precision"
        )
    return result


def remainder_exact(
    n: int,
    N: int,
    table: PartitionTable,
    ctx: PrecisionContext,
    include_theta: bool = False,
) -> RemainderResult:
    """Exact remainder after N retained terms, solved from the exact p(n).

    Raises PrecisionError when the subtraction cancels so much that fewer
    than 10 significant digits survive at the context precision.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    _warn_if_low_precision(n, ctx)
    mp = ctx.mp
    lhs = normalized_partition(n, table, ctx)
    partial = partial_sum(n, N, ctx)
    remainder = lhs - partial
    scale = max(abs(lhs), abs(partial), mp.mpf(1))
    _guard_cancellation(remainder, scale, ctx, f"remainder_exact(n={n}, N={N})")
    return RemainderResult(
        n=n,
        N=N,
        remainder=remainder,
        partial_sum=partial,
        prefactor=prefactor(n, ctx),
        theta=theta(n, N, ctx) if include_theta else None,
    )


def full_sum(n: int, ctx: PrecisionContext):
    """sum_{m=0}^{inf} c_m / n^(m/2), summed to context precision.

    |c_m| decays like sqrt(m)/sqrt(24)^m, so the terms fall geometrically for
    every n >= 1; summation stops after three consecutive terms below
    10^-(digits+5) relative to the running sum (three in a row, in case a
    single term is accidentally small).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mp = ctx.mp
    root_n = mp.sqrt(mp.mpf(n))
    cutoff = mp.mpf(10) ** (-(ctx.digits + 5))
    total = mp.mpf(0)
    consecutive_small = 0
    m = 0
    while consecutive_small < 3:
        term = coeff_c(m, ctx) / root_n**m
        total += term
        if abs(term) < cutoff * max(abs(total), mp.mpf(1)):
            consecutive_small += 1
        else:
            consecutive_small = 0
        m += 1
        if m > 10000:
            raise PrecisionError(f"full_sum(n={n}): tail did not fall below cutoff")
    return total


def theta(n: int, N: int, ctx: PrecisionContext):
    """Tail mediant: (sum_{m>=N} c_m/n^(m/2)) / (c_N/n^(N/2)); lies in (0, 1)."""
    if n < 1 or N < 0:
        raise ValueError(f"need n >= 1 and N >= 0, got n={n}, N={N}")
    mp = ctx.mp
    tail = full_sum(n, ctx) - partial_sum(n, N, ctx)
    first_omitted = coeff_c(N, ctx) / mp.sqrt(mp.mpf(n)) ** N
    return tail / first_omitted


def r_hat(n: int, table: PartitionTable, ctx: PrecisionContext):
    """Residual of the full convergent series against the normalized p(n)."""
    _warn_if_low_precision(n, ctx)
    mp = ctx.mp
    lhs = normalized_partition(n, table, ctx)
    series = full_sum(n, ctx)
    residual = lhs - series
    scale = max(abs(lhs), abs(series), mp.mpf(1))
    return _guard_cancellation(residual, scale, ctx, f"r_hat(n={n})")


def t_bound_full(n: int, ctx: PrecisionContext):
    """Five-term envelope for the residual source term, times e^(-mu/2).

    [ 1/sqrt(2) + (12*2^(1/3) - sqrt(2))/mu + (mu^2/2^(2/3) - 12*2^(1/3)) e^(-mu/2)
      + (1/sqrt(2) + (2 - 12*2^(1/3))/mu) e^(-mu) + (1 + 1/mu) e^(-3mu/2) ] * e^(-mu/2)
    """
    mp = ctx.mp
    m = mu(n, ctx)
    twelve_cbrt2 = 12 * mp.cbrt(2)
    inv_sqrt2 = 1 / mp.sqrt(2)
    bracket = (
        inv_sqrt2
        + (twelve_cbrt2 - mp.sqrt(2)) / m
        + (m**2 / mp.cbrt(4) - twelve_cbrt2) * mp.exp(-m / 2)
        + (inv_sqrt2 + (2 - twelve_cbrt2) / m) * mp.exp(-m)
        + (1 + 1 / m) * mp.exp(-3 * m / 2)
    )
    return bracket * mp.exp(-m / 2)


def t_bound_simple_bracket(n: int, ctx: PrecisionContext):
    """1/sqrt(2) + 14/mu + ((2/3) mu^2 - 13) e^(-mu/2); decreasing for n >= 8."""
    mp = ctx.mp
    m = mu(n, ctx)
    return 1 / mp.sqrt(2) + 14 / m + (mp.mpf(2) / 3 * m**2 - 13) * mp.exp(-m / 2)


def t_bound_simple(n: int, ctx: PrecisionContext):
    """Coarser envelope: t_bound_simple_bracket(n) * e^(-mu/2)."""
    return t_bound_simple_bracket(n, ctx) * ctx.mp.exp(-mu(n, ctx) / 2)


def exp_error_term(n: int, ctx: PrecisionContext):
    """exp(-(pi/2) * sqrt(2n/3)): the exponentially small part of every bound."""
    mp = ctx.mp
    return mp.exp(-(mp.pi / 2) * mp.sqrt(mp.mpf(2 * n) / 3))
