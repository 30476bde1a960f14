"""Numerical checks of integral equalities equivalent to the Riemann hypothesis."""
from .argtrack import PhasePath, arg_zeta, arg_zeta_values, counting_n, counting_n_values, phase_path
from .criteria import (
    CriterionResult,
    CriterionSpec,
    HypotheticalZero,
    Kind,
    eq13_cross_check,
    eq14_lhs,
    eq14_rhs,
    full_equality,
    gamma_alpha,
    lhs_value,
    rhs_value,
    verify,
    volchkov_normalized,
    zero_contribution,
)
from .errors import *  # noqa: F401,F403
from .quadrature import (
    IntegrationResult,
    KernelSpec,
    TailBound,
    improper_tail_bound,
    integrate_adaptive,
    integrate_principal_value,
    integrate_semi_infinite,
)
from .zeros import (
    Source,
    ZeroOrdinate,
    ZeroTable,
    cached_zero_table,
    find_zeros_up_to,
    gram_points,
    load_zero_table,
    save_zero_table,
    verify_zero_count,
)
from .zeta import (
    CONSTANTS,
    EULER_GAMMA,
    ComplexPoint,
    EvalResult,
    MathConstants,
    hardy_z,
    log_abs_zeta,
    log_deriv_zeta,
    log_gamma,
    riemann_siegel_theta,
    zeta,
)

__version__ = "0.1.0"
