"""Enclosing bounds for the truncation remainder, and the validity threshold.

Three bound families, each an interval (lower, upper) guaranteed to contain
R_N(n) on its stated domain:

  T1  first-omitted-term bounds: from c_N itself plus the exponential term;
  T2  coefficient-free bounds: c_N replaced by its proven envelope;
  T3  purely algebraic bounds with a tunable constant C, valid once
      n >= nu_N(C), the threshold where the exponential term is absorbed.

The comparison family restates an earlier published result on the same
remainder ("Banerjee" tag); its validity threshold is not computable here, so
those reports always carry valid=False and exist for width comparisons only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coefficients import coeff_c
from .errors import DomainError
from .expansion import exp_error_term
from .precision import PrecisionContext, context, lambert_w_minus1


@dataclass(frozen=True)
class BoundsReport:
    """One (lower, upper) enclosure for R_N(n), tagged with its origin."""

    n: int
    N: int
    lower: object
    upper: object
    theorem: str
    valid: bool
    C: Optional[object] = None


def _require(n: int, N: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if N < 0:
        raise DomainError(f"N must be nonnegative, got {N}")


def thm1_bounds(n: int, N: int, ctx: PrecisionContext) -> BoundsReport:
    """First-omitted-term enclosure, valid for all n >= 1, N >= 0.

    Even N = 2j:  -E < R_N(n) < c_{2j}/n^j + E
    Odd  N = 2j+1: c_{2j+1}/n^(j+1/2) - E < R_N(n) < E
    with E = exp(-(pi/2) sqrt(2n/3)).
    """
    _require(n, N)
    mp = ctx.mp
    E = exp_error_term(n, ctx)
    first_omitted = coeff_c(N, ctx) / mp.sqrt(mp.mpf(n)) ** N
    if N % 2 == 0:
        lower, upper = -E, first_omitted + E
    else:
        lower, upper = first_omitted - E, E
    return BoundsReport(n=n, N=N, lower=lower, upper=upper, theorem="T1", valid=True)


def _envelope_factor(N: int, n: int, ctx: PrecisionContext):
    """Proven |c_N| envelope with n folded in: bound(N) / n^(N/2), split so the
    even/odd shape matches the bound formulas exactly."""
    mp = ctx.mp
    base = 6 * mp.sqrt(2) / mp.pi ** mp.mpf("1.5")
    root24n = mp.sqrt(mp.mpf(24 * n))
    if N % 2 == 0:
        j = N // 2
        return (
            base
            * mp.sinh(mp.pi / 6)
            * mp.sqrt(2 * j + 1)
            / root24n ** (2 * j)
            * mp.sqrt(1 + mp.mpf(1) / (4 * j + 1))
        )
    j = (N - 1) // 2
    return (
        base
        * mp.cosh(mp.pi / 6)
        * mp.sqrt(2 * j + 2)
        / root24n ** (2 * j + 1)
        * mp.sqrt(1 - mp.mpf(1) / (4 * j + 5))
    )


def thm2_bounds(n: int, N: int, ctx: PrecisionContext) -> BoundsReport:
    """Coefficient-free enclosure: T1 with c_N relaxed to its proven envelope."""
    _require(n, N)
    E = exp_error_term(n, ctx)
    envelope = _envelope_factor(N, n, ctx)
    if N % 2 == 0:
        lower, upper = -E, envelope + E
    else:
        lower, upper = -envelope - E, E
    return BoundsReport(n=n, N=N, lower=lower, upper=upper, theorem="T2", valid=True)


def _exact_constant(C, ctx: PrecisionContext):
    """Convert a bound constant exactly; strings mean exact decimals."""
    if isinstance(C, (Fraction, int, str)):
        return ctx.real(C if not isinstance(C, str) else Fraction(C))
    return ctx.real(C)


def nu(N: int, C, ctx: PrecisionContext) -> int:
    """Smallest n from which the T3 bounds with constant C hold:

        nu_N(C) = ceil( (3/2) * ( (2N/pi) * W_-1(-(pi/(12N)) (C sqrt(N+1))^(1/N)) )^2 )

    Raises DomainError when the W_-1 argument falls below -1/e (no threshold
    exists for that (N, C) pair).
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    work = context(2 * ctx.digits + 10)
    mp = work.mp
    c_val = _exact_constant(C, work)
    if not c_val > 0:
        raise DomainError(f"C must be positive, got {C!r}")
    argument = -(mp.pi / (12 * N)) * (c_val * mp.sqrt(N + 1)) ** (mp.mpf(1) / N)
    try:
        w = lambert_w_minus1(argument, work)
    except DomainError as exc:
        raise DomainError(f"nu(N={N}, C={C!r}): {exc}") from exc
    value = mp.mpf(3) / 2 * ((2 * N / mp.pi) * w) ** 2
    nearest = mp.nint(value)
    if abs(value - nearest) < mp.mpf(10) ** (-ctx.digits):
        return int(nearest)
    return int(mp.ceil(value))


def thm3_bounds(n: int, N: int, C, ctx: PrecisionContext) -> BoundsReport:
    """Purely algebraic enclosure with tunable constant C.

    Even N = 2j (j >= 1):
        -C sqrt(2j+1)/sqrt(24n)^(2j) < R_N(n)
          < (C + envelope_even(j)) sqrt(2j+1)/sqrt(24n)^(2j)
    Odd N = 2j+1 (j >= 0): mirrored with sqrt(2j+2) and the odd envelope.

    Holds once n >= nu_N(C); below the threshold the report is returned with
    valid=False rather than raising, so sweeps can cross the boundary.
    """
    _require(n, N)
    if N < 1:
        raise DomainError(f"T3 bounds need N >= 1, got N={N}")
    mp = ctx.mp
    c_val = _exact_constant(C, ctx)
    if not c_val > 0:
        raise DomainError(f"C must be positive, got {C!r}")
    base = 6 * mp.sqrt(2) / mp.pi ** mp.mpf("1.5")
    root24n = mp.sqrt(mp.mpf(24 * n))
    if N % 2 == 0:
        j = N // 2
        factor = mp.sqrt(2 * j + 1) / root24n ** (2 * j)
        widening = base * mp.sinh(mp.pi / 6) * mp.sqrt(1 + mp.mpf(1) / (4 * j + 1))
        lower, upper = -c_val * factor, (c_val + widening) * factor
    else:
        j = (N - 1) // 2
        factor = mp.sqrt(2 * j + 2) / root24n ** (2 * j + 1)
        widening = base * mp.cosh(mp.pi / 6) * mp.sqrt(1 - mp.mpf(1) / (4 * j + 5))
        lower, upper = -(c_val + widening) * factor, c_val * factor
    valid = n >= nu(N, C, ctx)
    return BoundsReport(n=n, N=N, lower=lower, upper=upper, theorem="T3", valid=valid, C=c_val)


def banerjee_bounds(n: int, N: int, ctx: PrecisionContext) -> BoundsReport:
    """Comparison enclosure from the earlier published result (N >= 2).

    Even N = 2j (j >= 1):
        -13 (6/pi)^(2j) sqrt(j+1)/sqrt(24n)^(2j) < R_N(n)
          < 16 (6/pi)^(2j) sqrt(j+1)/sqrt(24n)^(2j)
    Odd N = 2j+1 (j >= 1): constants (-21, 11) with sqrt(j+2).

    Its validity threshold is not computable from the inputs available here,
    so valid is always False; the report exists for width comparisons.
    """
    _require(n, N)
    if N < 2:
        raise DomainError(f"comparison bounds are stated for N >= 2, got N={N}")
    mp = ctx.mp
    six_over_pi = 6 / mp.pi
    root24n = mp.sqrt(mp.mpf(24 * n))
    if N % 2 == 0:
        j = N // 2
        factor = six_over_pi ** (2 * j) * mp.sqrt(j + 1) / root24n ** (2 * j)
        lower, upper = -13 * factor, 16 * factor
    else:
        j = (N - 1) // 2
        factor = six_over_pi ** (2 * j + 1) * mp.sqrt(j + 2) / root24n ** (2 * j + 1)
        lower, upper = -21 * factor, 11 * factor
    return BoundsReport(n=n, N=N, lower=lower, upper=upper, theorem="Banerjee", valid=False)
