"""Exact and numerical toolkit for three Dirichlet series built from
harmonic numbers:

    u(s) = sum (-1)^(n-1) H_n / n^s
    v(s) = sum (-1)^(n-1) H_n^- / n^s
    w(s) = sum H_n^- / n^s

Exact values and residues at non-positive integers live in Q + Q*log 2;
numeric continuation everywhere else comes from tail expansions in
Euler/Bernoulli polynomial values with periodic-kernel remainder
integrals, cross-checked by a Hankel-type integral identity and an exact
Bernoulli-convolution identity.
"""

from .closed_forms import (
    IdentityCheck,
    Log2Linear,
    PoleReport,
    c_coefficients,
    check_bridge,
    check_corollary1,
    eta_nonpositive,
    g_exact_neg_even,
    u_value,
    v_residue,
    v_value_even,
    w_pole,
    w_value,
    zeta_nonpositive,
)
from .errors import (
    DenominatorDegenerate,
    DomainError,
    EvaluationError,
    NonConvergence,
    PoleProximity,
    QuadratureFailure,
    UnsupportedRegion,
)
from .exact import (
    Rational,
    RationalPolynomial,
    bernoulli,
    bernoulli_modified,
    euler_eval,
    euler_polynomial,
    euler_zero,
    genocchi,
)
from .hankel import (
    ResidualReport,
    g_integrand,
    g_num,
    log_series_check,
    theorem4_residual,
)
from .numeric import (
    AccelConfig,
    ComplexValue,
    DEFAULT_CONFIG,
    TermCounter,
    ValueWithError,
    bernoulli_bar,
    counting_terms,
    digamma_num,
    direct_u,
    direct_v,
    direct_w,
    eta_num,
    eta_prime_num,
    euler_bar,
    gamma_num,
    harmonic,
    harmonic_alt,
    phi_minus,
    phi_plus,
    u_num,
    v_num,
    w_num,
    zeta_num,
)

__version__ = "0.1.0"
