"""
Elliptic integrals and their oracles
====================================

Carlson's RF, RD, RJ drive F and Pi. We compare them with brute-force
tanh-sinh quadrature of the defining integrals and then look at the
imaginary-amplitude values used by the closed form of I', computed two
independent ways.
"""

import math

from coxeter_elliptic import (
    ellip_f, ellip_f_imag, ellip_f_imag_jacobi, ellip_pi, ellip_pi_imag, ellip_pi_imag_jacobi,
    rd, rf, rj,
)
from coxeter_elliptic import oracles

for name, ours, ref in [
    ("RF(0,1,2)", rf(0, 1, 2), oracles.rf_by_quadrature(0, 1, 2)),
    ("RD(0,2,1)", rd(0, 2, 1), oracles.rd_by_quadrature(0, 2, 1)),
    ("RJ(0,1,2,3)", rj(0, 1, 2, 3), oracles.rj_by_quadrature(0, 1, 2, 3)),
    ("F(0.5|0.3)", ellip_f(0.5, 0.3), oracles.ellip_f_by_quadrature(0.5, 0.3)),
    ("Pi(-1;0.8|0.25)", ellip_pi(-1, 0.8, 0.25), oracles.ellip_pi_by_quadrature(-1, 0.8, 0.25)),
]:
    print(f"{name:16s} duplication {ours:.15f}  quadrature {ref:.15f}  rel {abs(ours - ref) / ref:.1e}")

# imaginary amplitude: complex Carlson arguments versus Jacobi's transformation
lam = 0.6
m = lam ** 2 / (lam ** 2 - 4)
psi = math.asinh(math.sqrt((2 - lam) / lam))
n = -lam / (lam - 2)
print(f"\nlambda = {lam}: m = {m:.6f}, psi = {psi:.6f}, n = {n:.6f}")
print("F(i psi|m)    complex", ellip_f_imag(psi, m), " jacobi", ellip_f_imag_jacobi(psi, m))
print("Pi(n;i psi|m) complex", ellip_pi_imag(n, psi, m), " jacobi", ellip_pi_imag_jacobi(n, psi, m))
