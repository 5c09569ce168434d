"""Incomplete elliptic integrals of the first and third kinds, Legendre form.

Parameter convention ``m`` (``m = k**2`` for modulus ``k``)::

    F(phi | m)    = int_0^phi dtheta / sqrt(1 - m sin^2 theta)
    Pi(n; phi | m) = int_0^phi dtheta / ((1 - n sin^2 theta) sqrt(1 - m sin^2 theta))

Real amplitudes must satisfy ``|phi| < pi/2``. Purely imaginary amplitudes
``phi = i*psi`` are supported through the same Carlson reductions evaluated
in complex arithmetic; the ``*_jacobi`` variants reach the same values by
Jacobi's imaginary transformation using only real arithmetic and exist to
cross-check the complex path.

Negative ``n`` and ``m`` outside ``[0, 1]`` are allowed as long as the
radicand stays positive and the pole factor non-zero along the path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import carlson
from .errors import DomainError

__all__ = [
    "EllipticArgs",
    "ellip_f",
    "ellip_pi",
    "ellip_f_imag",
    "ellip_pi_imag",
    "ellip_f_imag_jacobi",
    "ellip_pi_imag_jacobi",
]


@dataclass(frozen=True)
class EllipticArgs:
    """Characteristic, amplitude and parameter of one F or Pi term."""

    n: float
    phi: complex
    m: float

    def __post_init__(self):
        phi = complex(self.phi)
        if phi.imag == 0:
            if not abs(phi.real) < math.pi / 2:
                raise DomainError("real amplitude must lie in (-pi/2, pi/2)")
            s2 = math.sin(phi.real) ** 2
            if not 1 - self.m * s2 > 0:
                raise DomainError("radicand 1 - m sin^2 phi must stay positive")
            if self.n * s2 >= 1:
                raise DomainError("pole 1 - n sin^2 theta = 0 on the path")
        elif phi.real != 0:
            raise DomainError("amplitude must be purely real or purely imaginary")
        else:
            _check_imag_path(self.n, phi.imag, self.m)

    @property
    def imaginary(self) -> bool:
        return complex(self.phi).imag != 0

    def evaluate(self):
        """F when ``n == 0``, otherwise Pi, for this triple."""
        phi = complex(self.phi)
        if self.imaginary:
            if self.n == 0:
                return ellip_f_imag(phi.imag, self.m)
            return ellip_pi_imag(self.n, phi.imag, self.m)
        if self.n == 0:
            return ellip_f(phi.real, self.m)
        return ellip_pi(self.n, phi.real, self.m)


def _check_real_path(phi, m):
    if not abs(phi) < math.pi / 2:
        raise DomainError(f"amplitude {phi!r} outside (-pi/2, pi/2)")
    s2 = math.sin(phi) ** 2
    # sin^2 is monotone on [0, |phi|], so the endpoint decides
    if not 1 - m * s2 > 0:
        raise DomainError(f"1 - m sin^2 theta <= 0 on the path (m={m!r}, phi={phi!r})")
    return s2


def _check_imag_path(n, psi, m):
    if not (math.isfinite(psi) and psi >= 0):
        raise DomainError("imaginary amplitude psi must be finite and >= 0")
    sh2 = math.sinh(psi) ** 2
    # along theta = i t: 1 - m sin^2 = 1 + m sinh^2 t, monotone in t
    if not 1 + m * sh2 > 0:
        raise DomainError(f"1 + m sinh^2 t <= 0 on the path (m={m!r}, psi={psi!r})")
    if not 1 + n * sh2 > 0:
        raise DomainError(f"pole 1 + n sinh^2 t = 0 on the path (n={n!r}, psi={psi!r})")
    return sh2


def ellip_f(phi: float, m: float) -> float:
    """``F(phi | m) = sin(phi) RF(cos^2 phi, 1 - m sin^2 phi, 1)``."""
    s2 = _check_real_path(phi, m)
    s = math.sin(phi)
    return s * carlson.rf(math.cos(phi) ** 2, 1 - m * s2, 1.0)


def ellip_pi(n: float, phi: float, m: float) -> float:
    """``Pi(n; phi | m)`` via RF and RJ.

    ``Pi = s RF(c^2, D, 1) + n/3 s^3 RJ(c^2, D, 1, 1 - n s^2)`` with
    ``s = sin phi``, ``c = cos phi`` and ``D = 1 - m s^2``. Inside the
    domain the fourth RJ argument is positive, so no principal value is
    ever needed.
    """
    s2 = _check_real_path(phi, m)
    if n * s2 >= 1:
        raise DomainError(f"1 - n sin^2 theta vanishes on the path (n={n!r}, phi={phi!r})")
    s = math.sin(phi)
    c2 = math.cos(phi) ** 2
    d = 1 - m * s2
    value = s * carlson.rf(c2, d, 1.0)
    if n != 0:
        value += n / 3 * s * s2 * carlson.rj(c2, d, 1.0, 1 - n * s2)
    return value


def ellip_f_imag(psi: float, m: float) -> complex:
    """``F(i psi | m)`` by complex Carlson reduction.

    For real ``m`` the value is purely imaginary; the full complex number is
    returned so callers can see any residual real part.
    """
    _check_imag_path(0.0, psi, m)
    phi = 1j * psi
    s = cmath.sin(phi)
    return s * carlson.rf(cmath.cos(phi) ** 2, 1 - m * s * s, 1 + 0j)


def ellip_pi_imag(n: float, psi: float, m: float) -> complex:
    """``Pi(n; i psi | m)`` by complex Carlson reduction."""
    _check_imag_path(n, psi, m)
    phi = 1j * psi
    s = cmath.sin(phi)
    c2 = cmath.cos(phi) ** 2
    d = 1 - m * s * s
    value = s * carlson.rf(c2, d, 1 + 0j)
    if n != 0:
        value += n / 3 * s ** 3 * carlson.rj(c2, d, 1 + 0j, 1 - n * s * s)
    return value


def _gudermannian(psi):
    return math.atan(math.sinh(psi))


def ellip_f_imag_jacobi(psi: float, m: float) -> complex:
    """``F(i psi | m) = i F(gd(psi) | 1 - m)``, real arithmetic only."""
    _check_imag_path(0.0, psi, m)
    return 1j * ellip_f(_gudermannian(psi), 1 - m)


def ellip_pi_imag_jacobi(n: float, psi: float, m: float) -> complex:
    """``Pi(n; i psi | m)`` by Jacobi's imaginary transformation.

    ``Pi(n; i psi | m) = i/(1-n) [F(theta | 1-m) - n Pi(1-n; theta | 1-m)]``
    with ``theta = gd(psi)``. Undefined as written for ``n = 1``.
    """
    _check_imag_path(n, psi, m)
    if n == 1:
        raise DomainError("the imaginary transformation of Pi is singular at n = 1")
    theta = _gudermannian(psi)
    mc = 1 - m
    inner = ellip_f(theta, mc) - n * ellip_pi(1 - n, theta, mc)
    return 1j * inner / (1 - n)
