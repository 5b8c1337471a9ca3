"""Arithmetic of the hexagonal lattice Z[w], w = e^{i pi/3}: lattice
points on circles, exponential sums, prime-angle statistics, theta and
L-functions, and exact circle discrepancy."""

from .core import (
    EisensteinInt,
    OMEGA,
    ONE,
    UNITS,
    ZERO,
    canonical_associate,
    eis_arg,
    eis_conj,
    eis_mul,
    eis_norm,
    in_fundamental_sector,
)
from .factor import (
    CirclePointSet,
    EisFactorization,
    PrimeClass,
    PrimeSplitRecord,
    circle_points,
    classify_prime,
    factor_eisenstein,
    factor_int,
    is_prime,
    prime_record,
    primes_up_to,
    r_q,
    split_prime_generator,
)
from .expsum import (
    AverageDecayReport,
    ExpSumValue,
    avg_exp_sum,
    circle_sums,
    exp_sum,
    exp_sum_product,
    f_A,
)
from .angles import (
    BadCircle,
    CharacterSumValue,
    SectorQuery,
    bad_circle,
    chi_prime_sum,
    prime_ideals_up_to,
    sector_count,
    theta_equidistribution_stat,
)
from .analytic import (
    complex_gamma,
    functional_eq_residual,
    l_dirichlet,
    li,
    theta,
    theta_transform_residual,
    xi_integral,
)
from .discrepancy import (
    GAMMA_MAX,
    DiscrepancyResult,
    SurveyReport,
    b_q,
    discrepancy_exact,
    discrepancy_survey,
    erdos_turan_bound,
)

__version__ = "0.1.0"

__all__ = [
    "EisensteinInt", "OMEGA", "ONE", "UNITS", "ZERO",
    "canonical_associate", "eis_arg", "eis_conj", "eis_mul", "eis_norm",
    "in_fundamental_sector",
    "CirclePointSet", "EisFactorization", "PrimeClass", "PrimeSplitRecord",
    "circle_points", "classify_prime", "factor_eisenstein", "factor_int",
    "is_prime", "prime_record", "primes_up_to", "r_q", "split_prime_generator",
    "AverageDecayReport", "ExpSumValue", "avg_exp_sum", "circle_sums",
    "exp_sum", "exp_sum_product", "f_A",
    "BadCircle", "CharacterSumValue", "SectorQuery", "bad_circle",
    "chi_prime_sum", "prime_ideals_up_to", "sector_count",
    "theta_equidistribution_stat",
    "complex_gamma", "functional_eq_residual", "l_dirichlet", "li",
    "theta", "theta_transform_residual", "xi_integral",
    "GAMMA_MAX", "DiscrepancyResult", "SurveyReport", "b_q",
    "discrepancy_exact", "discrepancy_survey", "erdos_turan_bound",
    "__version__",
]
