"""Elliptic integrals straight from their defining integrals.

Every function here integrates the textbook definition with tanh-sinh
quadrature and shares no code with the duplication algorithms in
:mod:`coxeter_elliptic.carlson` or the reductions in
:mod:`coxeter_elliptic.legendre`. They are slow and exist to check those
modules.

The Carlson integrals run over ``[0, inf)``; ``t = v/(1-v)`` maps them to
``[0, 1)``. For RF and RC the result has a ``(1-v)**-1/2`` endpoint
singularity, which is integrated in complement mode so that ``1 - v`` is
known exactly near ``v = 1``.
"""

from __future__ import annotations

import math

import numpy as np

from .quadrature import QuadratureOptions, integrate_tanh_sinh

__all__ = [
    "ORACLE_OPTIONS",
    "rf_by_quadrature",
    "rc_by_quadrature",
    "rd_by_quadrature",
    "rj_by_quadrature",
    "ellip_f_by_quadrature",
    "ellip_pi_by_quadrature",
    "ellip_f_imag_by_quadrature",
    "ellip_pi_imag_by_quadrature",
    "iprime_trig_by_tanh_sinh",
]

ORACLE_OPTIONS = QuadratureOptions(abs_tol=1e-300, rel_tol=1e-14, max_level=12)


def _one_minus(v, vc):
    # vc is v - 0 on the left half and v - 1 (< 0) on the right half
    return np.where(vc < 0, -vc, 1 - v)


def _value(result):
    return result.value


def rf_by_quadrature(x, y, z, opts=ORACLE_OPTIONS):
    def g(v, vc):
        w = _one_minus(v, vc)
        return 0.5 / np.sqrt(w * (v + x * w) * (v + y * w) * (v + z * w))
    return _value(integrate_tanh_sinh(g, 0.0, 1.0, opts, vectorized=True, complement=True))


def rc_by_quadrature(x, y, opts=ORACLE_OPTIONS):
    def g(v, vc):
        w = _one_minus(v, vc)
        return 0.5 / ((v + y * w) * np.sqrt(w * (v + x * w)))
    return _value(integrate_tanh_sinh(g, 0.0, 1.0, opts, vectorized=True, complement=True))


def rj_by_quadrature(x, y, z, p, opts=ORACLE_OPTIONS):
    def g(v, vc):
        w = _one_minus(v, vc)
        return 1.5 * np.sqrt(w) / ((v + p * w) * np.sqrt((v + x * w) * (v + y * w) * (v + z * w)))
    return _value(integrate_tanh_sinh(g, 0.0, 1.0, opts, vectorized=True, complement=True))


def rd_by_quadrature(x, y, z, opts=ORACLE_OPTIONS):
    return rj_by_quadrature(x, y, z, z, opts)


def _signed(integrand, phi, opts):
    if phi == 0:
        return 0.0
    value = integrate_tanh_sinh(integrand, 0.0, abs(phi), opts, vectorized=True).value
    return math.copysign(value, phi)


def ellip_f_by_quadrature(phi, m, opts=ORACLE_OPTIONS):
    return _signed(lambda t: 1 / np.sqrt(1 - m * np.sin(t) ** 2), phi, opts)


def ellip_pi_by_quadrature(n, phi, m, opts=ORACLE_OPTIONS):
    def g(t):
        s2 = np.sin(t) ** 2
        return 1 / ((1 - n * s2) * np.sqrt(1 - m * s2))
    return _signed(g, phi, opts)


def ellip_f_imag_by_quadrature(psi, m, opts=ORACLE_OPTIONS):
    """``F(i psi | m)`` along the path ``theta = i t``, ``t`` in ``[0, psi]``."""
    return 1j * _signed(lambda t: 1 / np.sqrt(1 + m * np.sinh(t) ** 2), psi, opts)


def ellip_pi_imag_by_quadrature(n, psi, m, opts=ORACLE_OPTIONS):
    def g(t):
        sh2 = np.sinh(t) ** 2
        return 1 / ((1 + n * sh2) * np.sqrt(1 + m * sh2))
    return 1j * _signed(g, psi, opts)


def iprime_trig_by_tanh_sinh(lam, opts=QuadratureOptions(abs_tol=1e-14, rel_tol=1e-14)):
    """``I'(lam)`` from the trigonometric integral, by tanh-sinh rather than Gauss-Kronrod."""
    from .coxeter import iprime_trig_integrand

    return integrate_tanh_sinh(lambda t: iprime_trig_integrand(t, lam), 0.0, 0.5 * math.pi,
                               opts, vectorized=True)
