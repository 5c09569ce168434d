import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coxeter_elliptic import coxeter as cx
from coxeter_elliptic import oracles
from coxeter_elliptic.errors import DomainError
from coxeter_elliptic.quadrature import QuadratureOptions

PI2 = math.pi ** 2

# I'(lambda) frozen from mpmath.quad (25 digits) of the trigonometric integral
IPRIME = {
    0.25: 0.77277496816943365792,
    0.5: 0.48810001405161822130,
    0.75: 0.34887107765042130177,
    1.0: 0.26559640763727581417,
    1.25: 0.21053604721413221946,
    1.5: 0.17176301228644664336,
    1.75: 0.14322218359656865292,
    2.0: 0.12150151871966061568,
}
# I(1) from the same source; a 12-digit regression anchor
I_AT_1 = 1.8773810542824744951


def test_arccos_arg_examples():
    assert cx.arccos_arg(0.0, 2.0) == pytest.approx(1 / 3, abs=1e-16)
    assert cx.arccos_arg(math.pi / 2, 0.7) == pytest.approx(0.0, abs=1e-16)
    assert cx.arccos_arg(0.0, 0.0) == 1.0


def test_arccos_arg_domain():
    with pytest.raises(DomainError):
        cx.arccos_arg(0.0, -0.5)
    with pytest.raises(DomainError):
        cx.arccos_arg(2.0, 1.0)
    with pytest.raises(DomainError):
        cx.arccos_arg(0.3, -1.0)


def test_family_integrand_is_theta_at_zero():
    theta = np.linspace(0, math.pi / 2, 101)
    assert np.max(np.abs(cx.family_integrand(theta, 0.0) - theta)) < 1e-15


@pytest.mark.parametrize("lam, expected", [
    (0.0, PI2 / 8),
    (2.0, 5 * PI2 / 24),
    (1.0, I_AT_1),
    (0.5, 1.6984054112439856017),
])
def test_eval_I(lam, expected):
    r = cx.eval_I(lam)
    assert r.converged
    assert r.value == pytest.approx(expected, abs=1e-12)


def test_eval_I_negative_lambda():
    with pytest.raises(DomainError):
        cx.eval_I(-0.5)


def test_iprime_trig_point_value_at_2():
    # cos 0 = 1: 1 / (3 sqrt(9 - 1))
    assert cx.iprime_trig_integrand(0.0, 2.0) == pytest.approx(1 / (3 * 2 * math.sqrt(2)), rel=1e-15)


def test_iprime_trig_point_value():
    theta = math.pi / 3
    expected = 0.25 / (1.5 * math.sqrt(2))
    assert cx.iprime_trig_integrand(theta, 1.0) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("lam", sorted(IPRIME))
def test_iprime_trig_values(lam):
    assert cx.iprime_trig(lam).value == pytest.approx(IPRIME[lam], abs=1e-12)


def test_iprime_trig_self_oracle():
    tight = oracles.iprime_trig_by_tanh_sinh(1.0)
    assert cx.iprime_trig(1.0).value == pytest.approx(tight.value, abs=1e-13)
    assert cx.iprime_quartic(1.0).value == pytest.approx(tight.value, abs=1e-12)


@pytest.mark.parametrize("lam", [0.0, -0.3, math.nan])
def test_iprime_rejects_nonpositive(lam):
    for fn in (cx.iprime_trig, cx.iprime_quartic):
        with pytest.raises(DomainError):
            fn(lam)


def test_iprime_at_2_is_finite():
    theta = np.linspace(0, math.pi / 2, 1001)
    c = np.cos(theta)
    assert np.all((1 + 2 * c) * np.sqrt((1 + 2 * c) ** 2 - c * c) >= 1)
    assert math.isfinite(cx.iprime_trig(2.0).value)


@pytest.mark.parametrize("lam, c0, c2, c4, a", [
    (2.0, 8, -4, 0, 3),
    (1.0, 3, 2, -1, 0),
    (0.0, 0, 4, 0, -1),
])
def test_quartic_coeffs(lam, c0, c2, c4, a):
    assert cx.quartic_coeffs(lam) == cx.QuarticCoefficients(c0, c2, c4, a)


@pytest.mark.parametrize("lam", [3.0, 0.0, 1.0])
def test_discriminant_examples(lam):
    assert cx.quartic_discriminant(cx.quartic_coeffs(lam)) == 16


@pytest.mark.parametrize("lam, up, um", [(3.0, 3.0, 5 / 3), (1.0, -1.0, 3.0), (4.0, 2.0, 1.5)])
def test_quartic_roots(lam, up, um):
    r = cx.quartic_roots(lam)
    assert r.u_plus == pytest.approx(up, rel=1e-15)
    assert r.u_minus == pytest.approx(um, rel=1e-15)


@pytest.mark.parametrize("lam", [0.0, 2.0])
def test_quartic_roots_degenerate(lam):
    with pytest.raises(DomainError):
        cx.quartic_roots(lam)


def test_quartic_integrand_at_lambda_1():
    assert cx.iprime_quartic_integrand(0.0, 1.0) == pytest.approx(1 / math.sqrt(3), rel=1e-15)


@pytest.mark.parametrize("lam", [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 3.0])
def test_quartic_matches_trig(lam):
    assert cx.iprime_quartic(lam).value == pytest.approx(cx.iprime_trig(lam).value, abs=1e-10)


@pytest.mark.parametrize("lam", [0.25, 0.5, 0.75, 1.25, 1.5, 1.75, 0.01, 1.99, 0.998, 1.002])
def test_closed_matches_trig(lam):
    assert cx.iprime_closed(lam) == pytest.approx(cx.iprime_trig(lam).value, abs=1e-8)


def test_closed_form_arguments_are_real_positive():
    # the Carlson arguments produced along the imaginary amplitude stay on the real axis
    for lam in (0.1, 0.7, 1.3, 1.9):
        f_args, pi1, pi2 = cx.closed_form_terms(lam)
        sh2 = math.sinh(f_args.phi.imag) ** 2
        assert 1 + f_args.m * sh2 == pytest.approx(2 / (lam + 2), rel=1e-13)
        assert 1 + pi1.n * sh2 == pytest.approx(2.0, rel=1e-13)
        assert 1 + pi2.n * sh2 == pytest.approx(2 / (lam + 1), rel=1e-13)


@pytest.mark.parametrize("lam", [0.0, 5e-4, 1.0, 1.0005, 1.9995, 2.0, 2.5])
def test_closed_form_window(lam):
    with pytest.raises(DomainError):
        cx.iprime_closed(lam)


def test_iprime_dispatch():
    for rep in cx.Representation:
        assert cx.iprime(0.5, rep) == pytest.approx(IPRIME[0.5], abs=1e-10)
    with pytest.raises(ValueError):
        cx.iprime(0.5, "spline")


def test_coxeter_A():
    assert cx.coxeter_A().value == pytest.approx(5 * PI2 / 24, abs=1e-12)


def test_coxeter_B_literal_integrand():
    # arccos(1/(1 + 2 cos t)) over [0, pi/2] integrates to pi^2/6, not pi^2/8
    r = cx.coxeter_B()
    assert r.converged
    assert r.value == pytest.approx(PI2 / 6, abs=1e-11)


def test_coxeter_C_integrand_points():
    assert cx.coxeter_C_integrand(0.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert cx.coxeter_C_integrand(math.acos(1 / 3)) == pytest.approx(0.0, abs=1e-7)
    assert cx.coxeter_C_integrand(1.4) == 0.0


def test_coxeter_C_clamped_and_partial():
    full = cx.coxeter_C()
    assert full.value == pytest.approx(PI2 / 6, abs=1e-10)
    assert cx.coxeter_C(upper=math.pi / 3).value == pytest.approx(11 * PI2 / 72, abs=1e-12)
    assert cx.coxeter_C_reflected().value == pytest.approx(full.value, abs=1e-12)


@pytest.mark.parametrize("rep", list(cx.Representation))
def test_integral_of_iprime_to_2(rep):
    r = cx.integral_of_iprime(2.0, rep)
    assert r.value == pytest.approx(PI2 / 12, abs=1e-10)


@pytest.mark.parametrize("lam", [0.5, 1.0, 1.5])
def test_fundamental_theorem(lam):
    lhs = cx.integral_of_iprime(lam).value
    assert lhs == pytest.approx(cx.eval_I(lam).value - PI2 / 8, abs=1e-10)


def test_integral_of_iprime_limits():
    with pytest.raises(DomainError):
        cx.integral_of_iprime(2.5)
    with pytest.raises(DomainError):
        cx.integral_of_iprime(0.0)


def test_double_integral_orders():
    report = cx.double_integral_identity()
    assert report.passed
    assert report.details["order_difference"] < 1e-9
    with pytest.raises(ValueError):
        cx.double_integral("diagonal")


def test_identity_report_status():
    ok = cx.IdentityReport("x", 1.0, 1.0, 0.0, 1e-9)
    bad = cx.IdentityReport("x", 1.0, 2.0, 1.0, 1e-9)
    soft = cx.IdentityReport("x", 1.0, 2.0, 1.0, 1e-9, conditional=True)
    assert (ok.status, bad.status, soft.status) == ("pass", "fail", "documented-discrepancy")
    assert bad.to_dict()["passed"] is False


@pytest.mark.parametrize("endpoint, model", [(0, "log_divergence"), (2, "bounded")])
def test_endpoint_asymptotics(endpoint, model):
    fit = cx.endpoint_asymptotics(endpoint)
    assert fit.model == model
    assert math.isfinite(fit.fit_residual)
    if endpoint == 0:
        # I'(lam) ~ (1/2) ln(1/lam) + const as lam -> 0+
        assert fit.coefficient == pytest.approx(0.5, abs=2e-3)
    else:
        assert fit.coefficient == pytest.approx(IPRIME[2.0], abs=1e-4)


def test_endpoint_asymptotics_bad_endpoint():
    with pytest.raises(DomainError):
        cx.endpoint_asymptotics(1)


theta_st = st.floats(0, math.pi / 2)
lam_st = st.floats(1e-6, 5)


def test_denominator_factorization_sampled():
    rng = np.random.default_rng(11)
    theta = rng.uniform(0, math.pi / 2, 200)
    lam = rng.uniform(0, 5, 200)
    c = np.cos(theta)
    direct = (1 + lam * c) ** 2 - c * c
    factored = (1 + (lam - 1) * c) * (1 + (lam + 1) * c)
    assert np.all(factored > 0)
    assert np.max(np.abs(direct - factored) / factored) < 1e-13


@settings(max_examples=200, deadline=None)
@given(theta=theta_st, lam=lam_st)
def test_denominator_factorization(theta, lam):
    c = math.cos(theta)
    direct = (1 + lam * c) ** 2 - c * c
    factored = (1 + (lam - 1) * c) * (1 + (lam + 1) * c)
    assert factored > 0
    # the expanded form cancels when lam and theta are both tiny
    rounding = 4 * 2.2e-16 * (1 + lam * c) ** 2
    assert abs(direct - factored) <= 1e-13 * factored + rounding


@settings(max_examples=200, deadline=None)
@given(theta=theta_st, lam=lam_st)
def test_weierstrass_consistency(theta, lam):
    t = math.tan(theta / 2)
    c = math.cos(theta)
    lhs = float(cx.quartic_value(cx.quartic_coeffs(lam), t)) / (1 + t * t) ** 2
    rhs = (1 + lam * c) ** 2 - c * c
    rounding = 8 * 2.2e-16 * (1 + lam * c) ** 2
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs) + rounding


@settings(max_examples=100, deadline=None)
@given(lam=st.floats(-0.9, 10))
def test_coefficient_sum_and_discriminant(lam):
    q = cx.quartic_coeffs(lam)
    assert abs(q.c0 + q.c2 + q.c4 - 4) <= 1e-10
    assert abs(cx.quartic_discriminant(q) - 16) <= 1e-9


@settings(max_examples=100, deadline=None)
@given(lam=st.floats(-0.9, 10).filter(lambda v: abs(v) > 1e-3 and abs(v - 2) > 1e-3))
def test_root_residual(lam):
    q = cx.quartic_coeffs(lam)
    r = cx.quartic_roots(lam)
    for u in (r.u_plus, r.u_minus):
        scale = abs(q.c4) * u * u + abs(q.c2 * u) + abs(q.c0)
        assert abs(q.c4 * u * u + q.c2 * u + q.c0) <= 1e-9 * scale


def test_monotone_and_positive():
    lams = np.linspace(0.05, 3.0, 12)
    assert all(cx.iprime_trig(v).value > 0 for v in lams)
    values = [cx.eval_I(v).value for v in lams]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_custom_options_are_used():
    loose = QuadratureOptions(abs_tol=1e-4, rel_tol=1e-4)
    assert cx.eval_I(1.0, loose).evaluations < cx.eval_I(1.0).evaluations
