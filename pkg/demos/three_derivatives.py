"""
I'(lambda) three ways
=====================

The family I(lambda) = int_0^{pi/2} arccos(cos t/(1 + lambda cos t)) dt has a
derivative that can be written as a trigonometric integral, as an integral
with a quartic radical (after t = tan(theta/2)), and in closed form through
F and Pi with imaginary amplitude. All three should give the same numbers.
"""

from coxeter_elliptic import closed_form_valid, iprime_closed, iprime_quartic, iprime_trig

print(f"{'lambda':>7} {'trig':>19} {'quartic':>19} {'closed':>19} {'max dev':>9}")
for lam in (0.05, 0.25, 0.5, 0.75, 0.999, 1.0, 1.25, 1.5, 1.75, 1.99, 2.0, 3.0):
    trig = iprime_trig(lam).value
    quartic = iprime_quartic(lam).value
    # the closed form has a removable 0/0 at lambda = 1 and is only used on (0, 2)
    closed = iprime_closed(lam) if closed_form_valid(lam) else None
    values = [v for v in (trig, quartic, closed) if v is not None]
    dev = max(values) - min(values)
    closed_text = f"{closed:19.15f}" if closed is not None else f"{'-':>19}"
    print(f"{lam:7.3f} {trig:19.15f} {quartic:19.15f} {closed_text} {dev:9.1e}")
