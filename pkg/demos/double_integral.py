"""
Both orders of the double integral
==================================

int_0^2 int_0^{pi/2} cos^2 t / ((1 + s cos t) sqrt((1 + s cos t)^2 - cos^2 t)) dt ds

Inner in theta is just I'(s). Inner in s puts the difficulty elsewhere: at
theta = 0 the s-integrand has an inverse square root at s = 0.
"""

import math

from coxeter_elliptic import double_integral, double_integral_identity

for order in ("theta_inner", "s_inner"):
    r = double_integral(order)
    print(f"{order:12s} {r.value:.15f}  err {abs(r.value - math.pi ** 2 / 12):.1e}  "
          f"converged={r.converged}")

report = double_integral_identity()
print(f"identity {report.identity_id}: {report.status}, "
      f"orders differ by {report.details['order_difference']:.1e}")
