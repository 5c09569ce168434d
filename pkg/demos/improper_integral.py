"""
Integrating I' back up
======================

I' grows like (1/2) ln(1/lambda) as lambda -> 0, so int_0^2 I'(s) ds is an
improper integral. Its value is I(2) - I(0), which should be pi^2/12. The
same integral is also checked at intermediate upper limits against I itself.
"""

import math
import time

from coxeter_elliptic import eval_I, integral_of_iprime, Representation

exact = math.pi ** 2 / 12
for rep in Representation:
    start = time.perf_counter()
    r = integral_of_iprime(2.0, rep)
    took = time.perf_counter() - start
    print(f"{rep.value:8s} int_0^2 I' = {r.value:.15f}  err {abs(r.value - exact):.1e}  "
          f"({r.evaluations} evaluations of I', {took:.2f} s)")

# fundamental theorem at a few interior points
I0 = eval_I(0.0).value
for lam in (0.25, 0.5, 1.0, 1.5):
    lhs = integral_of_iprime(lam).value
    rhs = eval_I(lam).value - I0
    print(f"lambda = {lam:4}: int_0^lambda I' = {lhs:.15f}, I(lambda) - I(0) = {rhs:.15f}")
