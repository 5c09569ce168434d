"""
Two quadrature engines
======================

Gauss-Kronrod bisection is the workhorse for smooth integrands; tanh-sinh
takes endpoint singularities. A singularity at the right end needs care:
near b = 2 the quantity 2 - x loses digits, so complement mode hands the
integrand x - b directly.
"""

import math

from coxeter_elliptic import integrate_adaptive, integrate_tanh_sinh, QuadratureOptions

opts = QuadratureOptions()

r = integrate_adaptive(math.cos, 0, math.pi / 2, opts)
print(f"adaptive  int cos       = {r.value:.16f}  est {r.error_estimate:.1e}  n={r.evaluations}")

r = integrate_tanh_sinh(lambda x: 1 / math.sqrt(x), 0, 1, opts)
print(f"tanh-sinh int x^-1/2    = {r.value:.16f}  est {r.error_estimate:.1e}  n={r.evaluations}")

r = integrate_tanh_sinh(lambda x: math.log(1 / x), 0, 1, opts)
print(f"tanh-sinh int ln(1/x)   = {r.value:.16f}  est {r.error_estimate:.1e}  n={r.evaluations}")

# the same right-end singularity, plain and in complement mode
exact = 2 * math.sqrt(2)
plain = integrate_tanh_sinh(lambda x: 1 / math.sqrt(2 - x), 0, 2, opts)
comp = integrate_tanh_sinh(lambda x, xc: 1 / math.sqrt(-xc) if xc < 0 else 1 / math.sqrt(2 - x),
                           0, 2, opts, complement=True)
print(f"plain      int (2-x)^-1/2 err {abs(plain.value - exact):.1e}  est {plain.error_estimate:.1e}  "
      f"converged={plain.converged}")
print(f"complement int (2-x)^-1/2 err {abs(comp.value - exact):.1e}  est {comp.error_estimate:.1e}  "
      f"converged={comp.converged}")
