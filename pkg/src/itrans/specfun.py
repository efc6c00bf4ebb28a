"""Real-argument special functions used by the transform kernels.

Gamma, log-gamma, Bessel J_nu and K_nu, and the Struve function H_nu, for
real order and positive real argument.  Evaluations are delegated to
scipy.special; this module adds the domain contract (pole, overflow and
underflow signalling), per-call absolute error estimates that the
quadrature engine folds into its error budgets, and bulk (array)
evaluation helpers for integrand callbacks.

Orders are restricted to the real strips the transform suite needs:
J_nu with nu >= -0.99, K_nu with |nu| <= 10 (even in nu), Struve H_nu
with -1.4 <= nu <= 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

_EPS = np.finfo(float).eps

# Gamma overflows in float64 just above this argument.
GAMMA_OVERFLOW_X = 171.61
# Unscaled K_nu underflows to subnormals around here; callers should switch
# to the exponentially scaled variant well before.
BESSEL_K_UNDERFLOW_X = 700.0


class SpecFunError(ValueError):
    """Base error for special-function domain violations."""


class PoleError(SpecFunError):
    """Evaluation at (or numerically on top of) a pole."""


class OverflowSignal(SpecFunError):
    """Result exceeds float64 range; not silently returned as inf."""


class UnderflowSignal(SpecFunError):
    """Result underflows float64; use the scaled variant instead."""


@dataclass(frozen=True)
class SpecialValue:
    """A function value together with an estimated absolute error."""

    value: float
    abs_err: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise SpecFunError(f"non-finite special value {self.value!r}")
        if not (self.abs_err >= 0.0 and math.isfinite(self.abs_err)):
            raise SpecFunError(f"bad error estimate {self.abs_err!r}")


def check_order(nu: float, lo: float = -0.99, hi: float = 10.0) -> float:
    """Validate a transform order: finite real in [lo, hi]."""
    nu = float(nu)
    if not math.isfinite(nu):
        raise SpecFunError(f"order must be finite, got {nu!r}")
    if not (lo <= nu <= hi):
        raise SpecFunError(f"order nu={nu} outside supported range [{lo}, {hi}]")
    return nu


def _require_positive(x: float, name: str = "x") -> float:
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise SpecFunError(f"{name} must be positive and finite, got {x!r}")
    return x


# ----------------------------------------------------------------------
# gamma
# ----------------------------------------------------------------------

def gamma(x: float) -> SpecialValue:
    """Gamma(x) for real x away from the poles at 0, -1, -2, ...

    Relative accuracy is a few ULP on [-20, 50]; the error estimate grows
    as 1/distance when x approaches a pole.
    """
    x = float(x)
    if not math.isfinite(x):
        raise SpecFunError(f"gamma argument must be finite, got {x!r}")
    if x > GAMMA_OVERFLOW_X:
        raise OverflowSignal(f"gamma({x}) overflows float64")
    if x <= 0.0:
        dist = abs(x - round(x))
        if dist < 1e-12:
            raise PoleError(f"gamma pole at nonpositive integer x={x}")
    value = float(_sp.gamma(x))
    if not math.isfinite(value):
        raise PoleError(f"gamma({x}) is not finite")
    rel = 8.0 * _EPS
    if x < 0.5:
        # reflection-based region: condition number ~ 1/distance to pole
        dist = abs(x - round(x))
        rel *= 1.0 + 1.0 / max(dist, 1e-12)
    return SpecialValue(value, abs(value) * rel)


def gammaln(x: float) -> float:
    """log|Gamma(x)| for x > 0 (plain float; used for scaling factors)."""
    x = float(x)
    if x <= 0.0:
        raise SpecFunError(f"gammaln needs x > 0, got {x}")
    return float(_sp.gammaln(x))


# ----------------------------------------------------------------------
# Bessel J, K and Struve H
# ----------------------------------------------------------------------

def bessel_j(nu: float, x: float) -> SpecialValue:
    """Bessel function of the first kind J_nu(x), x > 0, nu >= -0.99."""
    nu = check_order(nu)
    x = _require_positive(x)
    value = float(_sp.jv(nu, x))
    if not math.isfinite(value):
        raise SpecFunError(f"J_{nu}({x}) evaluation failed")
    # accuracy is relative to the oscillation envelope, not to the value
    envelope = math.sqrt(2.0 / (math.pi * x)) if x > 1.0 else max(abs(value), 1.0)
    return SpecialValue(value, 20.0 * _EPS * envelope)


def bessel_k(nu: float, x: float) -> SpecialValue:
    """Macdonald function K_nu(x), x > 0.  Even in nu.

    Signals underflow instead of returning 0.0 for large x; use
    bessel_k_scaled for tail work.
    """
    nu = check_order(abs(float(nu)), lo=0.0)
    x = _require_positive(x)
    if x > BESSEL_K_UNDERFLOW_X:
        raise UnderflowSignal(
            f"K_{nu}({x}) underflows unscaled; use bessel_k_scaled")
    value = float(_sp.kv(nu, x))
    if not (math.isfinite(value) and value > 0.0):
        raise SpecFunError(f"K_{nu}({x}) evaluation failed")
    return SpecialValue(value, 20.0 * _EPS * value)


def bessel_k_scaled(nu: float, x: float) -> SpecialValue:
    """exp(x) * K_nu(x); stays representable for arbitrarily large x."""
    nu = check_order(abs(float(nu)), lo=0.0)
    x = _require_positive(x)
    value = float(_sp.kve(nu, x))
    if not (math.isfinite(value) and value > 0.0):
        raise SpecFunError(f"scaled K_{nu}({x}) evaluation failed")
    return SpecialValue(value, 20.0 * _EPS * value)


def struve_h(nu: float, x: float) -> SpecialValue:
    """Struve function H_nu(x) for x in (0, 200], nu in [-1.4, 5]."""
    nu = check_order(nu, lo=-1.4, hi=5.0)
    x = _require_positive(x)
    if x > 200.0:
        raise SpecFunError(f"struve_h domain capped at x <= 200, got x={x}")
    value = float(_sp.struve(nu, x))
    if not math.isfinite(value):
        raise SpecFunError(f"H_{nu}({x}) evaluation failed")
    envelope = math.sqrt(2.0 / (math.pi * x)) if x > 1.0 else max(abs(value), _EPS)
    return SpecialValue(value, 100.0 * _EPS * (abs(value) + envelope))


# ----------------------------------------------------------------------
# bulk evaluation (integrand callbacks; no per-point wrappers)
# ----------------------------------------------------------------------

def jv_values(nu: float, x: np.ndarray) -> np.ndarray:
    """Vectorized J_nu over a positive array."""
    return _sp.jv(nu, x)


def jv_deriv(nu: float, x: np.ndarray) -> np.ndarray:
    """d/dx J_nu(x) via J_{nu-1}(x) - (nu/x) J_nu(x); any real nu."""
    return _sp.jv(nu - 1.0, x) - (nu / x) * _sp.jv(nu, x)


def kv_scaled_values(nu: float, x: np.ndarray) -> np.ndarray:
    """Vectorized exp(x)*K_nu(x)."""
    return _sp.kve(abs(nu), x)


def struve_values(nu: float, x: np.ndarray) -> np.ndarray:
    """Vectorized Struve H_nu."""
    return _sp.struve(nu, x)


def struve_mean_values(nu: float, z: np.ndarray, max_terms: int = 8) -> np.ndarray:
    """Asymptotic mean of H_nu: the large-z series for H_nu(z) - Y_nu(z).

    Summed to the smallest term per element; intended for z >= ~14 where
    the optimal truncation error is negligible against the z**-1/2
    oscillation amplitude.  Exact (finite series) for half-integer nu.
    """
    z = np.asarray(z, dtype=float)
    half = 0.5 * z
    total = np.zeros_like(z)
    prev = np.full_like(z, np.inf)
    active = np.ones(z.shape, dtype=bool)
    for k in range(max_terms):
        term = (math.gamma(k + 0.5) / math.pi
                * float(_sp.rgamma(nu + 0.5 - k))) * half ** (nu - 2 * k - 1)
        mag = np.abs(term)
        # asymptotic series: stop (per element) once terms stop shrinking
        active = active & (mag < prev)
        total = np.where(active, total + term, total)
        prev = mag
    return total
