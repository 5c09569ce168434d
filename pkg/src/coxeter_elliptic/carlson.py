"""Carlson symmetric elliptic integrals RF, RC, RD and RJ.

All four are computed by the duplication theorem: each step replaces the
arguments by ``(x + lam)/4`` with ``lam = sqrt(x)sqrt(y) + ...``, which
leaves the integral unchanged up to a known factor while pulling the
arguments together. Once their spread is small relative to the mean a
truncated Taylor series in the normalized deviations finishes the job.

Arguments may be real or complex. Real non-negative input is handled in
real arithmetic and returns a ``float``; otherwise principal square roots
are used throughout and a ``complex`` is returned. Arguments on the
negative real axis are rejected.

References: B. C. Carlson, "Numerical computation of real or complex
elliptic integrals", Numer. Algorithms 10 (1995) 13-26.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Number

from .errors import ConvergenceError, DomainError, PrincipalValueError

__all__ = ["CarlsonOptions", "rf", "rc", "rd", "rj"]


@dataclass(frozen=True)
class CarlsonOptions:
    rel_tol: float = 1e-14
    max_iterations: int = 100

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


DEFAULT_OPTIONS = CarlsonOptions()


def _prepare(*args):
    """Validate arguments; return them with the matching ``sqrt``.

    Real Python/numpy scalars stay real when none is negative.
    """
    values = []
    real = True
    for v in args:
        if not isinstance(v, Number):
            raise TypeError(f"expected a number, got {type(v).__name__}")
        c = complex(v)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise DomainError(f"argument {v!r} is not finite")
        if c.imag == 0 and c.real < 0:
            raise DomainError(f"argument {v!r} lies on the branch cut (-inf, 0)")
        if isinstance(v, complex):
            real = False
        values.append(c)
    if real:
        return [c.real for c in values], math.sqrt
    return values, cmath.sqrt


def _count_zeros(*args):
    return sum(1 for v in args if v == 0)


def rf(x, y, z, opts: CarlsonOptions = DEFAULT_OPTIONS):
    """``RF(x,y,z) = 1/2 * int_0^inf dt / sqrt((t+x)(t+y)(t+z))``.

    At most one argument may be zero.
    """
    (x, y, z), sqrt = _prepare(x, y, z)
    if _count_zeros(x, y, z) > 1:
        raise DomainError("RF needs at most one zero argument")
    a0 = (x + y + z) / 3
    q = (3 * opts.rel_tol) ** (-1 / 6) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xn, yn, zn, an = x, y, z, a0
    scale = 1.0
    for _ in range(opts.max_iterations):
        if q < scale * abs(an):
            break
        sx, sy, sz = sqrt(xn), sqrt(yn), sqrt(zn)
        lam = sx * sy + sx * sz + sy * sz
        xn, yn, zn, an = (xn + lam) / 4, (yn + lam) / 4, (zn + lam) / 4, (an + lam) / 4
        scale *= 4
    else:
        raise ConvergenceError("RF duplication did not converge")
    dx = (a0 - x) / (scale * an)
    dy = (a0 - y) / (scale * an)
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    series = (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44
              - 5 * e2 ** 3 / 208 + 3 * e3 * e3 / 104 + e2 * e2 * e3 / 16)
    return series / sqrt(an)


def rc(x, y, opts: CarlsonOptions = DEFAULT_OPTIONS):
    """``RC(x,y) = RF(x,y,y)``, by its own (cheaper) duplication.

    Real negative ``y`` with real ``x >= 0`` gives the Cauchy principal
    value, through ``RC(x,y) = sqrt(x/(x-y)) RC(x-y, -y)``.
    """
    if y == 0:
        raise DomainError("RC is undefined for y = 0")
    if (not isinstance(x, complex) and not isinstance(y, complex)
            and y < 0 and x >= 0):
        return math.sqrt(x / (x - y)) * rc(x - y, -y, opts)
    (x, y), sqrt = _prepare(x, y)
    a0 = (x + 2 * y) / 3
    q = (3 * opts.rel_tol) ** (-1 / 8) * abs(a0 - x)
    xn, yn, an = x, y, a0
    scale = 1.0
    for _ in range(opts.max_iterations):
        if q < scale * abs(an):
            break
        lam = 2 * sqrt(xn) * sqrt(yn) + yn
        xn, yn, an = (xn + lam) / 4, (yn + lam) / 4, (an + lam) / 4
        scale *= 4
    else:
        raise ConvergenceError("RC duplication did not converge")
    s = (y - a0) / (scale * an)
    series = 1 + s * s * (3 / 10 + s * (1 / 7 + s * (3 / 8 + s * (9 / 22 + s * (159 / 208 + s * 9 / 8)))))
    return series / sqrt(an)


def _rj_series(dx, dy, dz, dp):
    e2 = dx * dy + dx * dz + dy * dz - 3 * dp * dp
    e3 = dx * dy * dz + 2 * e2 * dp + 4 * dp ** 3
    e4 = (2 * dx * dy * dz + e2 * dp + 3 * dp ** 3) * dp
    e5 = dx * dy * dz * dp * dp
    return (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22
            - 9 * e2 * e3 / 52 + 3 * e5 / 26)


def rd(x, y, z, opts: CarlsonOptions = DEFAULT_OPTIONS):
    """``RD(x,y,z) = RJ(x,y,z,z)``; needs ``z != 0`` and at most one of x, y zero."""
    (x, y, z), sqrt = _prepare(x, y, z)
    if z == 0:
        raise DomainError("RD is undefined for z = 0")
    if x == 0 and y == 0:
        raise DomainError("RD needs at most one of x, y to be zero")
    a0 = (x + y + 3 * z) / 5
    q = (opts.rel_tol / 4) ** (-1 / 6) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xn, yn, zn, an = x, y, z, a0
    scale = 1.0
    tail = 0.0
    for _ in range(opts.max_iterations):
        if q < scale * abs(an):
            break
        sx, sy, sz = sqrt(xn), sqrt(yn), sqrt(zn)
        lam = sx * sy + sx * sz + sy * sz
        tail += 1 / (scale * sz * (zn + lam))
        xn, yn, zn, an = (xn + lam) / 4, (yn + lam) / 4, (zn + lam) / 4, (an + lam) / 4
        scale *= 4
    else:
        raise ConvergenceError("RD duplication did not converge")
    dx = (a0 - x) / (scale * an)
    dy = (a0 - y) / (scale * an)
    dz = -(dx + dy) / 3
    e2 = dx * dy - 6 * dz * dz
    e3 = (3 * dx * dy - 8 * dz * dz) * dz
    e4 = 3 * (dx * dy - dz * dz) * dz * dz
    e5 = dx * dy * dz ** 3
    series = (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22
              - 9 * e2 * e3 / 52 + 3 * e5 / 26)
    return series / (scale * an * sqrt(an)) + 3 * tail


def rj(x, y, z, p, opts: CarlsonOptions = DEFAULT_OPTIONS):
    """``RJ(x,y,z,p) = 3/2 * int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z)))``.

    Raises
    ------
    PrincipalValueError
        For real negative ``p``; only the principal value would exist there
        and it is not computed.
    """
    if not isinstance(p, complex) and p < 0:
        raise PrincipalValueError(
            "RJ with p < 0 is a Cauchy principal value; transform the characteristic first")
    (x, y, z, p), sqrt = _prepare(x, y, z, p)
    if p == 0:
        raise DomainError("RJ is undefined for p = 0")
    if _count_zeros(x, y, z) > 1:
        raise DomainError("RJ needs at most one of x, y, z to be zero")
    a0 = (x + y + z + 2 * p) / 5
    delta = (p - x) * (p - y) * (p - z)
    q = (opts.rel_tol / 4) ** (-1 / 6) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    xn, yn, zn, pn, an = x, y, z, p, a0
    scale = 1.0
    tail = 0.0
    for _ in range(opts.max_iterations):
        if q < scale * abs(an):
            break
        sx, sy, sz, sp = sqrt(xn), sqrt(yn), sqrt(zn), sqrt(pn)
        lam = sx * sy + sx * sz + sy * sz
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = delta / (scale ** 3 * d * d)
        tail += rc(1.0 if isinstance(e, float) else 1 + 0j, 1 + e, opts) / (scale * d)
        xn, yn, zn, pn, an = ((xn + lam) / 4, (yn + lam) / 4, (zn + lam) / 4,
                              (pn + lam) / 4, (an + lam) / 4)
        scale *= 4
    else:
        raise ConvergenceError("RJ duplication did not converge")
    dx = (a0 - x) / (scale * an)
    dy = (a0 - y) / (scale * an)
    dz = (a0 - z) / (scale * an)
    dp = -(dx + dy + dz) / 2
    return _rj_series(dx, dy, dz, dp) / (scale * an * sqrt(an)) + 6 * tail
