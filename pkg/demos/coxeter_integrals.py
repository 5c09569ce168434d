"""
Three Coxeter integrals
=======================

A, B and C are arccos integrals over [0, pi/2] with closed values that are
rational multiples of pi^2. Here we compute each one and compare.
"""

import math

from coxeter_elliptic import coxeter_A, coxeter_B, coxeter_C

pi2 = math.pi ** 2

# A has a smooth integrand and goes straight to adaptive Gauss-Kronrod
A = coxeter_A()
print(f"A = {A.value:.15f}   5 pi^2/24 = {5 * pi2 / 24:.15f}")

# B has a square-root cusp at pi/2, handled by tanh-sinh on that half.
# The integrand arccos(1/(1 + 2 cos t)) lands on pi^2/6 rather than pi^2/8.
B = coxeter_B()
print(f"B = {B.value:.15f}   pi^2/8 = {pi2 / 8:.15f}   pi^2/6 = {pi2 / 6:.15f}")

# C's argument (1 - cos t)/(2 cos t) passes 1 at t = arccos(1/3), after which
# real arccos does not exist. Clamping the integrand to 0 there gives one value,
# stopping the integral at pi/3 gives another.
C = coxeter_C()
C_third = coxeter_C(upper=math.pi / 3)
print(f"C (clamped to [0, arccos(1/3)]) = {C.value:.15f}")
print(f"C over [0, pi/3]                = {C_third.value:.15f}   11 pi^2/72 = {11 * pi2 / 72:.15f}")
