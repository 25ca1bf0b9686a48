"""Generalized Stieltjes constants at rational arguments and log-log integrals."""

from ._backend import BACKEND
from .closed_forms import (
    MultiplicationQuery,
    SeriesSum,
    asymptotic_gamma_k,
    gamma1_rational,
    gamma2_fourier,
    gamma2_rational,
    gamma_k_at,
    hurwitz_derivs_at_zero,
    multiplication_digamma,
    multiplication_general,
    multiplication_stieltjes,
    residue_sum,
    zeta_deriv_zero_sums,
)
from .errors import BranchCutError, DomainError, PoleError, RangeError, StieltjesError
from .hurwitz import (
    EulerMaclaurinPlan,
    Method,
    RationalArg,
    StieltjesValue,
    euler_gamma,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    stieltjes_constant,
    stieltjes_oracle,
    stieltjes_shift,
)
from .loglog import (
    IntegralResult,
    Route,
    demonstration1_I2,
    hyp3f3_and_zx_integral,
    integral_family_I,
    integral_family_J,
    integral_I_omega,
    integral_I_pq,
    integral_pole,
    integral_pole_double,
    polylog_sderiv_at1,
)
from .policy import DEFAULT_POLICY, PrecisionPolicy, get_policy
from .quadrature import LogLogIntegrand, PowerSum, loglog_quadrature
from .specialfn import (
    digamma,
    log_gamma,
    polygamma,
    riemann_zeta_deriv,
    zero_power_sums,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
