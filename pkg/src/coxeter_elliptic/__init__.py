"""Coxeter-type integrals, the family I(lambda) and its elliptic closed form.

Numerics live in four layers: :mod:`quadrature` (adaptive Gauss-Kronrod and
tanh-sinh), :mod:`carlson` (symmetric elliptic integrals), :mod:`legendre`
(F and Pi, real or imaginary amplitude) and :mod:`coxeter` (the family and
its identities). :mod:`verify` collects the identity checks and :mod:`cli`
exposes them on the command line.
"""

from .carlson import CarlsonOptions, rc, rd, rf, rj
from .coxeter import (
    A_EXACT,
    A_MINUS_B,
    B_EXACT,
    C_EXACT,
    AsymptoticFit,
    IdentityReport,
    QuarticCoefficients,
    QuarticRoots,
    Representation,
    closed_form_terms,
    closed_form_valid,
    coxeter_A,
    coxeter_B,
    coxeter_C,
    coxeter_C_reflected,
    double_integral,
    double_integral_identity,
    endpoint_asymptotics,
    eval_I,
    integral_of_iprime,
    iprime,
    iprime_closed,
    iprime_quartic,
    iprime_trig,
    quartic_coeffs,
    quartic_discriminant,
    quartic_roots,
)
from .errors import (
    BranchError,
    ConvergenceError,
    DomainError,
    EvaluationError,
    PrincipalValueError,
)
from .legendre import (
    EllipticArgs,
    ellip_f,
    ellip_f_imag,
    ellip_f_imag_jacobi,
    ellip_pi,
    ellip_pi_imag,
    ellip_pi_imag_jacobi,
)
from .quadrature import (
    EndpointKind,
    EndpointSpec,
    QuadratureOptions,
    QuadratureResult,
    integrate_adaptive,
    integrate_improper,
    integrate_tanh_sinh,
)
from .verify import run_suite, suite_passed

__version__ = "0.1.0"
