"""
How I' behaves at the ends of (0, 2)
====================================

Sample I' at distances 2^-4 ... 2^-20 from each endpoint and fit three
two-parameter models. The fit is a measurement; it decides nothing in
advance.
"""

from coxeter_elliptic import endpoint_asymptotics

for endpoint in (0, 2):
    fit = endpoint_asymptotics(endpoint)
    print(f"endpoint {endpoint}: best model {fit.model}")
    for model, res in sorted(fit.residuals.items(), key=lambda kv: kv[1]):
        print(f"    {model:15s} rms {res:.2e}  coefficient {fit.coefficients[model]: .6f}")
    print("    closest samples:", ", ".join(f"{v:.6f}" for v in fit.values[-3:]))
