"""Acceptance criteria, one test (and one printed PASS/FAIL line) each.

Run ``pytest tests/test_acceptance.py -v``; the lines appear in the
"acceptance criteria" section of the terminal summary.
"""

import math
import time

import numpy as np

from coxeter_elliptic import coxeter as cx
from coxeter_elliptic.verify import run_suite

PI2 = math.pi ** 2


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_1_A(criterion):
    r, dt = timed(cx.coxeter_A)
    err = abs(r.value - 5 * PI2 / 24)
    ok = criterion("1", err <= 1e-9 and dt < 1.0,
                   f"A = 5pi^2/24: |err| = {err:.2e} (tol 1e-9), {dt:.3f} s (limit 1 s)")
    assert ok


def test_2a_B(criterion):
    r = cx.coxeter_B()
    err = abs(r.value - PI2 / 8)
    ok = criterion("2a", err <= 1e-10,
                   f"B = pi^2/8: B = {r.value:.12f}, |err| = {err:.2e} (tol 1e-10); "
                   f"|B - pi^2/6| = {abs(r.value - PI2 / 6):.2e}")
    assert ok


def test_2b_I0(criterion):
    r = cx.eval_I(0.0)
    err = abs(r.value - PI2 / 8)
    ok = criterion("2b", err <= 1e-12, f"I(0) = pi^2/8: |err| = {err:.2e} (tol 1e-12)")
    assert ok


def test_3_I2_equals_A(criterion):
    err = abs(cx.eval_I(2.0).value - cx.coxeter_A().value)
    ok = criterion("3", err <= 2e-9, f"I(2) = A: |diff| = {err:.2e} (tol 2e-9)")
    assert ok


def test_4_integral_of_iprime(criterion):
    r, dt = timed(cx.integral_of_iprime, 2.0, cx.Representation.TRIG)
    err = abs(r.value - PI2 / 12)
    ok = criterion("4", err <= 1e-7 and dt < 5.0,
                   f"int_0^2 I' (trig) = pi^2/12: |err| = {err:.2e} (tol 1e-7), {dt:.3f} s (limit 5 s)")
    assert ok


def test_5_double_integral(criterion):
    theta_inner, dt1 = timed(cx.double_integral, "theta_inner")
    s_inner, dt2 = timed(cx.double_integral, "s_inner")
    e1, e2 = abs(theta_inner.value - PI2 / 12), abs(s_inner.value - PI2 / 12)
    dt = dt1 + dt2
    ok = criterion("5", max(e1, e2) <= 1e-6 and dt < 30.0,
                   f"double integral = pi^2/12: theta-inner {e1:.2e}, s-inner {e2:.2e} "
                   f"(tol 1e-6), {dt:.3f} s (limit 30 s)")
    assert ok


def test_6_representation_agreement(criterion):
    grid = (0.25, 0.5, 0.75, 1.25, 1.5, 1.75)
    trig = {v: cx.iprime_trig(v).value for v in grid}
    dq = max(abs(trig[v] - cx.iprime_quartic(v).value) for v in grid)
    dc = max(abs(trig[v] - cx.iprime_closed(v)) for v in grid)
    ok = criterion("6", dq <= 1e-9 and dc <= 1e-8,
                   f"representations: max|trig-quartic| = {dq:.2e} (tol 1e-9), "
                   f"max|trig-closed| = {dc:.2e} (tol 1e-8)")
    assert ok


def test_7_quartic_algebra(criterion):
    rng = np.random.default_rng(2024)
    lams = rng.uniform(-0.9, 10, 100)
    disc = max(abs(cx.quartic_discriminant(cx.quartic_coeffs(v)) - 16) for v in lams)

    roots_lams = [v for v in rng.uniform(-0.9, 10, 300) if abs(v) > 1e-3 and abs(v - 2) > 1e-3][:100]
    residual = 0.0
    for v in roots_lams:
        q, r = cx.quartic_coeffs(v), cx.quartic_roots(v)
        for u in (r.u_plus, r.u_minus):
            scale = abs(q.c4) * u * u + abs(q.c2 * u) + abs(q.c0)
            residual = max(residual, abs(q.c4 * u * u + q.c2 * u + q.c0) / scale)

    theta = rng.uniform(0, math.pi / 2, 200)
    lam = rng.uniform(0, 5, 200)
    t = np.tan(theta / 2)
    c = np.cos(theta)
    lhs = np.array([cx.quartic_value(cx.quartic_coeffs(v), tt) for v, tt in zip(lam, t)]) / (1 + t * t) ** 2
    rhs = (1 + lam * c) ** 2 - c * c
    weier = float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))

    ok = criterion("7", disc <= 1e-9 and residual <= 1e-9 and weier <= 1e-12,
                   f"quartic algebra: |disc-16| = {disc:.2e} (1e-9), root residual = {residual:.2e} "
                   f"(1e-9, scaled), Weierstrass rel = {weier:.2e} (1e-12)")
    assert ok


def test_8_elliptic_oracles(criterion):
    reports = {r.identity_id: r for r in run_suite(only=[
        "elliptic_f_oracle", "elliptic_pi_oracle", "carlson_homogeneity", "carlson_degeneracy"])}
    ef, ep = reports["elliptic_f_oracle"], reports["elliptic_pi_oracle"]
    ch, cd = reports["carlson_homogeneity"], reports["carlson_degeneracy"]
    ok = criterion("8", all(r.passed for r in reports.values())
                   and ef.tolerance == ep.tolerance == 1e-10
                   and ch.tolerance == cd.tolerance == 1e-13,
                   f"elliptic kernels: F rel {ef.abs_error:.2e}, Pi rel {ep.abs_error:.2e} "
                   f"(tol 1e-10, {ep.details['samples']} grid points); Carlson homogeneity "
                   f"{ch.abs_error:.2e}, degeneracy {cd.abs_error:.2e} (tol 1e-13)")
    assert ok


def test_9_C_conditional(criterion):
    (report,) = run_suite(only=["C_11pi2_over_72"])
    documented = (report.status == "documented-discrepancy"
                  and f"{report.lhs:.12g}" in report.note
                  and "convention" in report.note)
    ok = criterion("9", report.passed or documented,
                   f"C vs 11pi^2/72 (conditional): status {report.status}, "
                   f"C = {report.lhs:.12g}, |err| = {report.abs_error:.2e} (tol 1e-6); "
                   f"int_0^(pi/3) = {report.details['upper_pi_over_3']:.12g}")
    assert ok


def test_10_fundamental_theorem(criterion):
    errs = {v: abs(cx.integral_of_iprime(v).value - (cx.eval_I(v).value - PI2 / 8))
            for v in (0.5, 1.0, 1.5)}
    worst = max(errs.values())
    ok = criterion("10", worst <= 1e-8,
                   "fundamental theorem: " + ", ".join(f"lam={k}: {e:.2e}" for k, e in errs.items())
                   + " (tol 1e-8)")
    assert ok


def test_11_asymptotics(criterion):
    fits = {e: cx.endpoint_asymptotics(e) for e in (0, 2)}
    theta = np.linspace(0, math.pi / 2, 2001)
    c = np.cos(theta)
    denominator = (1 + 2 * c) * np.sqrt((1 + 2 * c) ** 2 - c * c)
    at_two = cx.iprime_trig(2.0).value
    ok = criterion("11", all(math.isfinite(f.fit_residual) for f in fits.values())
                   and math.isfinite(at_two) and float(denominator.min()) >= 1,
                   f"asymptotics: lam->0 {fits[0].model} (coef {fits[0].coefficient:.4f}, "
                   f"rms {fits[0].fit_residual:.1e}); lam->2 {fits[2].model} "
                   f"(coef {fits[2].coefficient:.5f}, rms {fits[2].fit_residual:.1e}); "
                   f"I'(2) = {at_two:.10f}, min denominator {denominator.min():.3f}")
    assert ok


def test_runtime_full_suite(criterion):
    _, dt = timed(run_suite)
    ok = criterion("all", dt < 60.0, f"desk scale: full identity suite in {dt:.2f} s (limit 60 s)")
    assert ok
