"""One-dimensional quadrature engines.

Two engines share one result type:

* :func:`integrate_adaptive` -- globally adaptive Gauss-Kronrod (7/15) with
  bisection of the interval carrying the largest error estimate.
* :func:`integrate_tanh_sinh` -- double-exponential quadrature with level
  halving. Nodes cluster doubly exponentially at the endpoints, so integrable
  endpoint singularities (``1/sqrt(x)``, ``log x``) are absorbed without any
  integrand-specific transformation.

:func:`integrate_improper` combines the two for integrals understood as
``lim eps->0+ of the integral over [a+eps, b-eps]``.

Integrands are called with a Python float by default. Pass
``vectorized=True`` to have them called with a 1-D ``numpy`` array of
abscissae instead. Running out of budget is not an error: the result carries
``converged=False`` together with the best estimate found.
"""

from __future__ import annotations

import enum
import heapq
import math
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError

__all__ = [
    "QuadratureOptions",
    "QuadratureResult",
    "EndpointKind",
    "EndpointSpec",
    "integrate_adaptive",
    "integrate_tanh_sinh",
    "integrate_improper",
]

_EPS = sys.float_info.epsilon
_TINY = sys.float_info.min


@dataclass(frozen=True)
class QuadratureOptions:
    """Error targets and work limits for the quadrature engines."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    max_level: int = 12

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("abs_tol and rel_tol must be positive")
        if self.max_subdivisions < 1 or self.max_level < 1:
            raise ValueError("max_subdivisions and max_level must be >= 1")

    def target(self, value: float) -> float:
        """Error allowed for an integral of size ``value``."""
        return max(self.abs_tol, self.rel_tol * abs(value))

    def replace(self, **changes) -> "QuadratureOptions":
        fields = dict(
            abs_tol=self.abs_tol,
            rel_tol=self.rel_tol,
            max_subdivisions=self.max_subdivisions,
            max_level=self.max_level,
        )
        fields.update(changes)
        return QuadratureOptions(**fields)


DEFAULT_OPTIONS = QuadratureOptions()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool

    def __float__(self):
        return float(self.value)

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
        )


class EndpointKind(enum.Enum):
    SMOOTH = "smooth"
    INTEGRABLE_SINGULARITY = "integrable_singularity"


@dataclass(frozen=True)
class EndpointSpec:
    left: EndpointKind = EndpointKind.SMOOTH
    right: EndpointKind = EndpointKind.SMOOTH

    def __post_init__(self):
        # accept the plain strings too
        object.__setattr__(self, "left", EndpointKind(self.left))
        object.__setattr__(self, "right", EndpointKind(self.right))


def _check_interval(a, b):
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")


def _evaluate(f, x, vectorized, *extra):
    """Evaluate ``f`` at the nodes ``x`` and reject non-finite values."""
    if vectorized:
        y = np.asarray(f(x, *extra), dtype=float)
        if y.shape != x.shape:
            y = np.broadcast_to(y, x.shape).astype(float)
    else:
        cols = [e.tolist() for e in extra]
        y = np.array([f(xi, *rest) for xi, *rest in zip(x.tolist(), *cols)], dtype=float)
    bad = ~np.isfinite(y)
    if bad.any():
        i = int(np.argmax(bad))
        raise EvaluationError(x[i], y[i])
    return y


# ---------------------------------------------------------------------------
# Gauss-Kronrod 7/15

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights belong to the Kronrod nodes with odd index.
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5]] = _WG[:3]
_GAUSS[[9, 11, 13]] = _WG[2::-1]
_GAUSS[7] = _WG[3]


def _gk15(f, a, b, vectorized):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = center + half * _NODES
    y = _evaluate(f, x, vectorized)
    kronrod = half * float(_KRONROD @ y)
    gauss = half * float(_GAUSS @ y)
    # floor keeps the estimate honest when both rules are exact to roundoff
    roundoff = 50 * _EPS * half * float(_KRONROD @ np.abs(y))
    return kronrod, max(abs(kronrod - gauss), roundoff)


def integrate_adaptive(
    f: Callable,
    a: float,
    b: float,
    opts: QuadratureOptions = DEFAULT_OPTIONS,
    *,
    vectorized: bool = False,
) -> QuadratureResult:
    """Integrate a smooth ``f`` over ``[a, b]`` by adaptive Gauss-Kronrod.

    The error estimate of each subinterval is the difference between the
    embedded 7-point Gauss and 15-point Kronrod rules. Subintervals are
    bisected worst-first until the summed estimate meets
    ``opts.target(value)`` or ``opts.max_subdivisions`` subintervals exist.

    Raises
    ------
    EvaluationError
        If ``f`` is non-finite at a node. The endpoints are never evaluated.
    """
    _check_interval(a, b)
    value, err = _gk15(f, a, b, vectorized)
    heap = [(-err, a, b, value)]
    frozen = []  # too narrow to bisect further
    total, total_err = value, err
    evaluations = 15
    converged = total_err <= opts.target(total)

    while not converged and heap and len(heap) + len(frozen) < opts.max_subdivisions:
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi) or hi - lo <= 4 * _EPS * max(abs(lo), abs(hi)):
            frozen.append((neg_err, lo, hi, v))
            continue
        v1, e1 = _gk15(f, lo, mid, vectorized)
        v2, e2 = _gk15(f, mid, hi, vectorized)
        evaluations += 30
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        converged = total_err <= opts.target(total)

    pieces = heap + frozen
    total = math.fsum(p[3] for p in pieces)
    total_err = math.fsum(-p[0] for p in pieces)
    return QuadratureResult(total, total_err, evaluations, total_err <= opts.target(total))


# ---------------------------------------------------------------------------
# tanh-sinh


def _ts_nodes(t, half):
    """Distances to the nearer endpoint and weights for parameters ``t``.

    With ``u = pi/2 sinh t`` the abscissa is ``c + half*tanh(u)``. Both the
    distance ``half*(1 - tanh|u|)`` and the weight are written using
    ``exp(-2|u|)`` so neither cancels nor overflows far out in the tails.
    """
    t = np.asarray(t, dtype=float)
    u = 0.5 * math.pi * np.sinh(np.abs(t))
    q = np.exp(-2.0 * u)
    delta = half * 2.0 * q / (1.0 + q)
    weight = half * 2.0 * math.pi * np.cosh(t) * q / (1.0 + q) ** 2
    return delta, weight


def _ts_abscissae(t, delta, a, b):
    """Abscissae and signed endpoint complements for parameters ``t``."""
    left = t < 0
    x = np.where(left, a + delta, b - delta)
    center = t == 0
    x = np.where(center, 0.5 * (a + b), x)
    xc = np.where(left | center, np.where(center, 0.5 * (b - a), delta), -delta)
    return x, xc


def _ts_usable(t, delta, weight, a, b, complement):
    ok = (weight > 0) & (delta > _TINY)
    if not complement:
        x, _ = _ts_abscissae(t, delta, a, b)
        ok &= (x > a) & (x < b)
    return ok


def integrate_tanh_sinh(
    f: Callable,
    a: float,
    b: float,
    opts: QuadratureOptions = DEFAULT_OPTIONS,
    *,
    vectorized: bool = False,
    complement: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over ``(a, b)`` by tanh-sinh quadrature.

    ``f`` may diverge integrably at either endpoint; nodes are never placed
    on ``a`` or ``b``. With ``complement=True`` the integrand is called as
    ``f(x, xc)`` where ``xc`` is ``x - a`` on the left half of the interval
    and ``x - b`` on the right half, computed without cancellation. This lets
    an integrand such as ``1/sqrt(b - x)`` see distances far below the
    spacing of floating point numbers near ``b``.

    The step is halved at each level starting from ``h = 1``; the error
    estimate is the change between the last two levels. The tails are cut
    where a level-0 term drops below roundoff relative to the running sum,
    or where the next node would land on an endpoint. In the second case the
    size of the dropped tail is added to the error estimate, which is what
    makes ``1/sqrt(b - x)`` without ``complement`` report ``converged=False``.
    """
    _check_interval(a, b)
    half = 0.5 * (b - a)

    def terms(t):
        delta, weight = _ts_nodes(t, half)
        x, xc = _ts_abscissae(t, delta, a, b)
        args = (xc,) if complement else ()
        return delta, weight * _evaluate(f, x, vectorized, *args), weight

    # level 0: walk outward on each side to fix the truncation points
    total = float(terms(np.array([0.0]))[1][0])
    abs_total = abs(total)
    evaluations = 1
    t_max = {}
    # sides cut short by an endpoint collision -> (distance, |f|) of the
    # outermost node evaluated so far on that side
    edge = {}
    for side in (-1.0, 1.0):
        j = 0
        outer = (half, abs(total) / float(_ts_nodes(np.array([0.0]), half)[1][0]))
        while True:
            j += 1
            t = np.array([side * j])
            delta, weight = _ts_nodes(t, half)
            if not _ts_usable(t, delta, weight, a, b, complement)[0]:
                edge[side] = outer
                break
            delta, term, weight = terms(t)
            term = float(term[0])
            evaluations += 1
            total += term
            abs_total += abs(term)
            outer = (float(delta[0]), abs(term) / float(weight[0]))
            if abs(term) <= _EPS * abs_total:
                break
        t_max[side] = float(j)

    def tail():
        # the dropped piece next to a collided endpoint is about
        # 2 * distance * |f| there (exact for an inverse square root); the
        # extra factor 2 covers rounding of the abscissae next to the endpoint
        return sum(4 * d * fx for d, fx in edge.values())

    h = 1.0
    estimate = total
    error = math.inf
    converged = False
    for _level in range(1, opts.max_level + 1):
        h *= 0.5
        # odd multiples of h not present at coarser levels
        lo = -t_max[-1.0]
        hi = t_max[1.0]
        k = np.arange(math.ceil((lo / h - 1) / 2), math.floor((hi / h - 1) / 2) + 1)
        t = (2 * k + 1) * h
        t = t[(t > lo) & (t < hi)]
        delta, weight = _ts_nodes(t, half)
        t = t[_ts_usable(t, delta, weight, a, b, complement)]
        if t.size:
            delta, new, weight = terms(t)
            for side in edge:
                on_side = np.flatnonzero(np.sign(t) == side)
                if on_side.size:
                    i = on_side[np.argmin(delta[on_side])]
                    if delta[i] < edge[side][0]:
                        edge[side] = (float(delta[i]), abs(float(new[i] / weight[i])))
        else:
            new = np.zeros(0)
        evaluations += t.size
        total += math.fsum(new.tolist())
        abs_total += float(np.abs(new).sum())
        previous = estimate
        estimate = h * total
        roundoff = 10 * _EPS * h * abs_total
        error = max(abs(estimate - previous), roundoff) + tail()
        if error <= opts.target(estimate):
            converged = True
            break
    return QuadratureResult(estimate, error, evaluations, converged)


def _anchored(f, ref, is_left, singular, vectorized):
    """Wrap ``f(x, xc)`` so that ``xc`` is measured from ``ref``.

    On a tanh-sinh half only the complement towards the outer endpoint is
    precise; the other side is recomputed as ``x - ref``, which is harmless
    away from ``ref``.
    """
    if not singular:
        return lambda x: f(x, x - ref)

    def g(x, xc):
        near = (xc >= 0) if is_left else (xc < 0)
        if vectorized:
            return f(x, np.where(near, xc, x - ref))
        return f(x, xc if near else x - ref)

    return g


def integrate_improper(
    f: Callable,
    a: float,
    b: float,
    spec: EndpointSpec = EndpointSpec(),
    opts: QuadratureOptions = DEFAULT_OPTIONS,
    *,
    vectorized: bool = False,
    complement: bool = False,
) -> QuadratureResult:
    """Integral over ``[a, b]`` with endpoints described by ``spec``.

    Smooth on both ends: one adaptive Gauss-Kronrod run. Otherwise the
    interval is cut at its midpoint; halves touching a singular endpoint go
    to tanh-sinh and the rest to Gauss-Kronrod. Each half gets half of the
    absolute error budget.

    ``complement`` has the meaning of :func:`integrate_tanh_sinh`, with
    ``xc`` always measured from the original ``a`` (left half) or ``b``
    (right half).
    """
    _check_interval(a, b)
    left = spec.left is EndpointKind.INTEGRABLE_SINGULARITY
    right = spec.right is EndpointKind.INTEGRABLE_SINGULARITY
    mid = 0.5 * (a + b)
    if not (left or right):
        if complement:
            return integrate_adaptive(
                lambda x: f(x, np.where(x <= mid, x - a, x - b) if vectorized else
                            (x - a if x <= mid else x - b)),
                a, b, opts, vectorized=vectorized)
        return integrate_adaptive(f, a, b, opts, vectorized=vectorized)

    sub = opts.replace(abs_tol=0.5 * opts.abs_tol)
    pieces = []
    for lo, hi, singular, is_left in ((a, mid, left, True), (mid, b, right, False)):
        ref = a if is_left else b
        g = _anchored(f, ref, is_left, singular, vectorized) if complement else f
        if singular:
            res = integrate_tanh_sinh(g, lo, hi, sub, vectorized=vectorized,
                                      complement=complement)
        else:
            res = integrate_adaptive(g, lo, hi, sub, vectorized=vectorized)
        pieces.append(res)
    result = pieces[0] + pieces[1]
    return QuadratureResult(
        result.value,
        result.error_estimate,
        result.evaluations,
        result.converged and result.error_estimate <= opts.target(result.value),
    )
