"""Exact partition numbers, their asymptotic expansion, and certified error bounds."""

from .bounds import BoundsReport, banerjee_bounds, nu, thm1_bounds, thm2_bounds, thm3_bounds
from .coefficients import (
    CoefficientSeq,
    PiPolynomial,
    certified_abs_less,
    coeff_asymptotic,
    coeff_bound,
    coeff_c,
    coeff_exact,
    coeff_sequence,
    darboux_approximant,
)
from .errors import DomainError, PrecisionError, PrecisionWarning, ResourceError
from .expansion import (
    RemainderResult,
    exp_error_term,
    full_sum,
    mu,
    partial_sum,
    prefactor,
    r_hat,
    recommended_digits,
    remainder_exact,
    t_bound_full,
    t_bound_simple,
    t_bound_simple_bracket,
    theta,
)
from .partitions import (
    PartitionTable,
    load_table,
    partition_dp,
    partition_dp_row,
    partition_pentagonal,
    save_table,
)
from .precision import (
    MIN_DIGITS,
    PrecisionContext,
    const_pi,
    cosh_real,
    exp_real,
    lambert_w_minus1,
    pi_enclosure,
    sinh_real,
    sqrt_real,
    ulp,
)
from .series import (
    PowerSeries,
    gf_coefficients,
    gf_reference,
    power_series,
    series_add,
    series_binomial_power,
    series_exp,
    series_mul,
)
from .verify import SUITE_NAMES, VerifyResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CoefficientSeq",
    "DomainError",
    "MIN_DIGITS",
    "PartitionTable",
    "PiPolynomial",
    "PowerSeries",
    "PrecisionContext",
    "PrecisionError",
    "PrecisionWarning",
    "RemainderResult",
    "ResourceError",
    "SUITE_NAMES",
    "VerifyResult",
    "banerjee_bounds",
    "certified_abs_less",
    "coeff_asymptotic",
    "coeff_bound",
    "coeff_c",
    "coeff_exact",
    "coeff_sequence",
    "const_pi",
    "cosh_real",
    "darboux_approximant",
    "exp_error_term",
    "exp_real",
    "full_sum",
    "gf_coefficients",
    "gf_reference",
    "lambert_w_minus1",
    "load_table",
    "mu",
    "nu",
    "partial_sum",
    "partition_dp",
    "partition_dp_row",
    "partition_pentagonal",
    "pi_enclosure",
    "power_series",
    "prefactor",
    "r_hat",
    "recommended_digits",
    "remainder_exact",
    "run_suite",
    "save_table",
    "series_add",
    "series_binomial_power",
    "series_exp",
    "series_mul",
    "sinh_real",
    "sqrt_real",
    "t_bound_full",
    "t_bound_simple",
    "t_bound_simple_bracket",
    "theta",
    "thm1_bounds",
    "thm2_bounds",
    "thm3_bounds",
    "ulp",
]
