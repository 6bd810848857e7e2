"""Closed forms for integrals against the Bose, Fermi and csch kernels,
with a Hurwitz zeta toolkit and an independent quadrature oracle."""
from .closed_forms import (
    SPECIAL_VALUES,
    ClosedFormValue,
    FamilyId,
    I_closed,
    I_recursion_check,
    I_variant_closed,
    L1_closed,
    L_odd_closed,
    L_odd_variant_closed,
    T0_closed,
    T_even_closed,
    T_even_variant_closed,
    bernoulli_from_hurwitz_check,
    closed_form,
    intpoly_check,
    jplusk_residual,
    oracle,
    sinh_sq_closed,
    sinh_sq_integrals,
    small_q_limit,
    small_q_scaled,
    transform_kernel,
)
from .errors import AccuracyError, DomainError, NoClosedFormError, PoleError
from .expansions import (
    Basis,
    Parity,
    TrigPolynomial,
    binomial_collapse_identity,
    evaluation_sums,
    ode_residual,
    orthogonality_sum,
    taylor_coeff_cos,
    taylor_coeff_sin,
    to_one_plus_t2_basis,
    trig_poly_in_1pt2,
    trig_poly_in_t,
)
from .harness import SuiteConfig, SuiteReport, VerificationRecord, verify_suite
from .hurwitz import (
    HurwitzBackend,
    balanced_A,
    digamma_limit_check,
    hurwitz_zeta,
    hurwitz_zeta_prime,
    negapolygamma,
    negapolygamma_at_zero,
)
from .quadrature import (
    BACKEND,
    IntegrandSpec,
    KernelKind,
    QuadratureResult,
    integrate,
    moment_bose,
    moment_gamma_zeta,
)
from .special_core import (
    CONSTANTS,
    SpecialConstants,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    digamma,
    harmonic,
    log_gamma,
    pochhammer,
    polygamma,
    riemann_zeta,
    zeta_prime_neg,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BACKEND",
    "Basis",
    "CONSTANTS",
    "ClosedFormValue",
    "DomainError",
    "FamilyId",
    "HurwitzBackend",
    "I_closed",
    "I_recursion_check",
    "I_variant_closed",
    "IntegrandSpec",
    "KernelKind",
    "L1_closed",
    "L_odd_closed",
    "L_odd_variant_closed",
    "NoClosedFormError",
    "Parity",
    "PoleError",
    "QuadratureResult",
    "SPECIAL_VALUES",
    "SpecialConstants",
    "SuiteConfig",
    "SuiteReport",
    "T0_closed",
    "T_even_closed",
    "T_even_variant_closed",
    "TrigPolynomial",
    "VerificationRecord",
    "balanced_A",
    "bernoulli_from_hurwitz_check",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "binomial_collapse_identity",
    "closed_form",
    "digamma",
    "digamma_limit_check",
    "evaluation_sums",
    "harmonic",
    "hurwitz_zeta",
    "hurwitz_zeta_prime",
    "integrate",
    "intpoly_check",
    "jplusk_residual",
    "log_gamma",
    "moment_bose",
    "moment_gamma_zeta",
    "negapolygamma",
    "negapolygamma_at_zero",
    "ode_residual",
    "oracle",
    "orthogonality_sum",
    "pochhammer",
    "polygamma",
    "riemann_zeta",
    "sinh_sq_closed",
    "sinh_sq_integrals",
    "small_q_limit",
    "small_q_scaled",
    "taylor_coeff_cos",
    "taylor_coeff_sin",
    "to_one_plus_t2_basis",
    "transform_kernel",
    "trig_poly_in_1pt2",
    "trig_poly_in_t",
    "verify_suite",
    "zeta_prime_neg",
]
