"""Expansion coefficients: exact pi-polynomial form, numeric values, bounds.

The m-th coefficient of the expansion is

    c_m = (-1)^m / (4*sqrt(6))^m * sum_{k=0}^{floor((m+1)/2)}
          binom(m+1, k) * (m+1-k) / (m+1-2k)! * (pi/6)^(m-2k),

so (4*sqrt(6))^m * |c_m| is a finite sum of positive rationals times integer
powers of pi.  That exact form is kept alongside the rounded value: strict
inequalities between coefficients are decided on the exact form with a
certified pi enclosure, never on rounded floats.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from mpmath.ctx_iv import MPIntervalContext

from .errors import PrecisionError
from .precision import PrecisionContext, context


@dataclass(frozen=True)
class PiPolynomial:
    """Exact value of (4*sqrt(6))^m * |c_m| as sum of q_e * pi^e terms.

    ``terms`` maps the integer exponent e to its positive rational
    coefficient; ``scale_exponent`` is m.  The signed coefficient is
    (-1)^m * (sum of terms) / (4*sqrt(6))^m.
    """

    terms: dict
    scale_exponent: int

    def evaluate(self, ctx: PrecisionContext):
        """Numeric value of the term sum (without sign or scale) at ctx precision."""
        mp = ctx.mp
        pi = mp.pi
        total = mp.mpf(0)
        for e, q in sorted(self.terms.items()):
            total += mp.mpf(q.numerator) / q.denominator * pi**e
        return total


@dataclass(frozen=True)
class CoefficientSeq:
    """Coefficients c_0..c_m as Reals bound to one context."""

    entries: tuple
    context: PrecisionContext


@functools.lru_cache(maxsize=None)
def coeff_exact(m: int) -> PiPolynomial:
    """Exact pi-polynomial form of (4*sqrt(6))^m * |c_m|."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    terms = {}
    for k in range((m + 1) // 2 + 1):
        e = m - 2 * k
        q = Fraction(comb(m + 1, k) * (m + 1 - k), factorial(m + 1 - 2 * k))
        terms[e] = q * Fraction(1, 6) ** e
    return PiPolynomial(terms=terms, scale_exponent=m)


@functools.lru_cache(maxsize=None)
def _coeff_value(m: int, digits: int):
    work = context(digits + 10)
    mp = work.mp
    magnitude = coeff_exact(m).evaluate(work) / (4 * mp.sqrt(6)) ** m
    signed = -magnitude if m % 2 else magnitude
    return context(digits).real(signed)


def coeff_c(m: int, ctx: PrecisionContext):
    """c_m at context precision.  Memoized per (m, digits)."""
    return ctx.real(_coeff_value(m, ctx.digits))


def coeff_sequence(m_max: int, ctx: PrecisionContext) -> CoefficientSeq:
    return CoefficientSeq(entries=tuple(coeff_c(m, ctx) for m in range(m_max + 1)), context=ctx)


def _even_odd_prefactor(ctx: PrecisionContext):
    mp = ctx.mp
    base = 6 * mp.sqrt(2) / mp.pi ** mp.mpf("1.5")
    return base * mp.sinh(mp.pi / 6), base * mp.cosh(mp.pi / 6)


def coeff_bound(m: int, ctx: PrecisionContext):
    """Proven upper bound for |c_m|.

    Even m = 2j:  (6*sqrt(2)/pi^(3/2)) sinh(pi/6) sqrt(2j+1)/sqrt(24)^(2j) * sqrt(1 + 1/(4j+1))
    Odd  m = 2j+1: same with cosh, sqrt(2j+2)/sqrt(24)^(2j+1), sqrt(1 - 1/(4j+5)).
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    mp = ctx.mp
    even_pref, odd_pref = _even_odd_prefactor(ctx)
    root24 = mp.sqrt(24)
    if m % 2 == 0:
        j = m // 2
        return even_pref * mp.sqrt(2 * j + 1) / root24 ** (2 * j) * mp.sqrt(1 + mp.mpf(1) / (4 * j + 1))
    j = (m - 1) // 2
    return odd_pref * mp.sqrt(2 * j + 2) / root24 ** (2 * j + 1) * mp.sqrt(1 - mp.mpf(1) / (4 * j + 5))


def coeff_asymptotic(m: int, ctx: PrecisionContext):
    """Leading large-m approximation of c_m (signed): the bound without its
    sqrt(1 +- ...) correction factor."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    mp = ctx.mp
    even_pref, odd_pref = _even_odd_prefactor(ctx)
    root24 = mp.sqrt(24)
    if m % 2 == 0:
        j = m // 2
        return even_pref * mp.sqrt(2 * j + 1) / root24 ** (2 * j)
    j = (m - 1) // 2
    return -odd_pref * mp.sqrt(2 * j + 2) / root24 ** (2 * j + 1)


def darboux_approximant(m: int, ctx: PrecisionContext):
    """m-th Maclaurin coefficient of the dominant-singularity approximant,
    on the c_m scale.

    The approximant is (3/(sqrt(2)*pi)) * (e^(pi/6) (1+z)^(-3/2)
    - e^(-pi/6) (1-z)^(-3/2)); its m-th coefficient is
    (3/(sqrt(2)*pi)) * ((-1)^m e^(pi/6) - e^(-pi/6)) * binom(m+1/2, m),
    divided here by sqrt(24)^m.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    mp = ctx.mp
    half_binom = Fraction((2 * m + 1) * comb(2 * m, m), 4**m)  # binom(m+1/2, m)
    amplitude = 3 / (mp.sqrt(2) * mp.pi) * ((-1) ** m * mp.exp(mp.pi / 6) - mp.exp(-mp.pi / 6))
    return amplitude * mp.mpf(half_binom.numerator) / half_binom.denominator / mp.sqrt(24) ** m


_CERTIFY_START_DPS = 40
_CERTIFY_MAX_DPS = 20000


def _interval_value(poly: PiPolynomial, iv: MPIntervalContext):
    pi = iv.pi
    total = iv.mpf(0)
    for e, q in sorted(poly.terms.items()):
        total += iv.mpf(q.numerator) / iv.mpf(q.denominator) * pi**e
    return total


def certified_abs_less(m: int, other: int) -> bool:
    """Decide |c_m| < |c_other| exactly.

    The comparison reduces to comparing the two exact pi-polynomials rescaled
    onto a common power of 4*sqrt(6) = sqrt(96).  Both sides are evaluated in
    interval arithmetic (a certified pi enclosure), doubling the precision
    until the intervals separate, so rounding can never decide a near-tie the
    wrong way.
    """
    pm, po = coeff_exact(m), coeff_exact(other)
    shift = pm.scale_exponent - po.scale_exponent
    dps = _CERTIFY_START_DPS
    while dps <= _CERTIFY_MAX_DPS:
        iv = MPIntervalContext()
        iv.dps = dps
        lhs = _interval_value(pm, iv)
        rhs = _interval_value(po, iv) * iv.sqrt(96) ** shift
        if lhs.b < rhs.a:
            return True
        if lhs.a > rhs.b:
            return False
        dps *= 2
    raise PrecisionError(
        f"could not separate |c_{m}| and |c_{other}| below {_CERTIFY_MAX_DPS} digits"
    )
