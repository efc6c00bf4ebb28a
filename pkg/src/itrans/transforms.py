"""The integral transforms as numerical operators.

Each operator multiplies a catalog function (or any Integrand-shaped
object) by its kernel, works out the product's tail/endpoint metadata,
and routes the integral to the matching quadrature engine:

    laplace        L{f}(y)  = int_0^inf exp(-x y) f(x) dx
    widder         P{f}(y)  = int_0^inf x f(x) / (x^2 + y^2) dx
    stieltjes      S{f}(y)  = int_0^inf f(x) / (x + y) dx
    fourier_sine   Fs{f}(y) = int_0^inf sin(x y) f(x) dx
    fourier_cosine Fc{f}(y) = int_0^inf cos(x y) f(x) dx
    hankel         H_nu{f}(y) = int_0^inf sqrt(x y) J_nu(x y) f(x) dx
    k_transform    K_nu{f}(y) = int_0^inf sqrt(x y) K_nu(x y) f(x) dx
    mellin         M{f}(mu) = int_0^inf x^(mu-1) f(x) dx
    struve_transform  Hs_nu{f}(y) = int_0^inf sqrt(x y) H_nu(x y) f(x) dx

Evaluation points are restricted to y > 0 (the Mellin exponent plays the
role of the point); orders to the real validity strips: nu > -1 for
Hankel, nu > -3/2 for the Struve transform, any real nu for the
K-transform (even in nu).  Each result carries a propagated absolute
error estimate; quadrature is run at a quarter of the caller's tolerance
so that identity-level residuals dominate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import specfun
from .quadrature import (
    AlgebraicDecay,
    ExponentialDecay,
    Integrand,
    Mixed,
    OscillatoryBessel,
    OscillatoryStruve,
    OscillatoryTrig,
    QuadConfig,
    QuadResult,
    QuadratureError,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
)

__all__ = [
    "TransformValue", "TRANSFORM_KINDS", "apply_kind",
    "laplace", "widder", "stieltjes", "fourier_sine", "fourier_cosine",
    "hankel", "k_transform", "mellin", "struve_transform",
    "power_weighted", "transform_function",
]

TRANSFORM_KINDS = (
    "laplace", "stieltjes", "widder", "fourier_sine", "fourier_cosine",
    "hankel", "k_transform", "mellin", "struve_transform",
)

_ORDER_KINDS = ("hankel", "k_transform", "struve_transform")


@dataclass(frozen=True)
class TransformValue:
    value: float
    abs_err: float
    point: float
    converged: bool = True

    def __post_init__(self):
        if not math.isfinite(self.abs_err):
            raise ValueError("non-finite error estimate")


def _point(y) -> float:
    y = float(y)
    if not (math.isfinite(y) and y > 0):
        raise ValueError(f"evaluation point must be positive, got {y!r}")
    return y


def _as_integrand(f) -> Integrand:
    if isinstance(f, Integrand):
        return f
    return Integrand(fn=f.fn, tail=f.tail,
                     singular_at_zero=f.singular_at_zero,
                     name=getattr(f, "name", "f"))


def _quad_cfg(cfg: QuadConfig | None) -> QuadConfig:
    # identity-level tolerances dominate: quadrature runs 4x tighter
    return (cfg or QuadConfig()).tightened(4.0)


def _sing(f, extra: float) -> float | None:
    p = (f.singular_at_zero or 0.0) + extra
    return p if p < 0 else None


def _wrap(result: QuadResult, y: float) -> TransformValue:
    return TransformValue(result.value, result.abs_err, y, result.converged)


def power_weighted(f, w: float, name: str | None = None) -> Integrand:
    """x**w * f(x) with adjusted tail and endpoint metadata."""
    base = _as_integrand(f)
    fn = base.fn

    def g(x):
        return x ** w * fn(x)

    tail = base.tail
    if isinstance(tail, AlgebraicDecay):
        tail = AlgebraicDecay(tail.power + w)
    p = (base.singular_at_zero if base.singular_at_zero is not None else 0.0) + w
    return Integrand(g, tail=tail, singular_at_zero=p,
                     name=name or f"x^{w:g}*{base.name}")


def _decay_rate(tail) -> float | None:
    return tail.rate if isinstance(tail, ExponentialDecay) else None


def _alg_power(tail) -> float | None:
    return tail.power if isinstance(tail, AlgebraicDecay) else None


def _osc(tail) -> bool:
    return isinstance(tail, (OscillatoryBessel, OscillatoryStruve, OscillatoryTrig))


# ----------------------------------------------------------------------
# the operators
# ----------------------------------------------------------------------

def laplace(f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """L{f}(y) = int_0^inf exp(-x y) f(x) dx."""
    y = _point(y)
    base = _as_integrand(f)
    fn = base.fn
    rate = y + (_decay_rate(base.tail) or 0.0)
    g = Integrand(lambda x: np.exp(-y * x) * fn(x),
                  tail=ExponentialDecay(rate),
                  singular_at_zero=base.singular_at_zero,
                  name=f"laplace[{base.name}]")
    return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)


def widder(f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """P{f}(y) = int_0^inf x f(x) / (x^2 + y^2) dx."""
    y = _point(y)
    base = _as_integrand(f)
    fn = base.fn

    def kernel(x):
        return x * fn(x) / (x * x + y * y)

    sing = _sing(base, 1.0)
    name = f"widder[{base.name}]"
    tail = base.tail
    if _osc(tail):
        g = Integrand(kernel, tail=tail, singular_at_zero=sing, name=name)
        return _wrap(integrate_oscillatory(g, 0.0, _quad_cfg(cfg)), y)
    if isinstance(tail, ExponentialDecay):
        new_tail = tail
    else:
        p = _alg_power(tail)
        if p is None:
            raise ValueError(f"{name}: integrand tail is unclassified")
        new_tail = AlgebraicDecay(p - 1.0)
    g = Integrand(kernel, tail=new_tail, singular_at_zero=sing, name=name)
    return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)


def stieltjes(f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """S{f}(y) = int_0^inf f(x) / (x + y) dx."""
    y = _point(y)
    base = _as_integrand(f)
    fn = base.fn

    def kernel(x):
        return fn(x) / (x + y)

    tail = base.tail
    if isinstance(tail, ExponentialDecay):
        new_tail = tail
    else:
        p = _alg_power(tail)
        if p is None:
            raise ValueError("stieltjes needs an exponential or algebraic tail")
        new_tail = AlgebraicDecay(p - 1.0)
    g = Integrand(kernel, tail=new_tail, singular_at_zero=base.singular_at_zero,
                  name=f"stieltjes[{base.name}]")
    return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)


def _fourier(f, y, phase: str, cfg) -> TransformValue:
    y = _point(y)
    base = _as_integrand(f)
    fn = base.fn
    osc = np.sin if phase == "sin" else np.cos

    def kernel(x):
        return osc(y * x) * fn(x)

    sing = base.singular_at_zero if phase == "cos" else _sing(base, 1.0)
    name = f"fourier_{phase}[{base.name}]"
    if isinstance(base.tail, ExponentialDecay):
        g = Integrand(kernel, tail=base.tail, singular_at_zero=sing, name=name)
        return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)
    p = _alg_power(base.tail)
    if p is None:
        raise ValueError(f"{name}: cannot route tail {type(base.tail).__name__}")
    g = Integrand(kernel, tail=OscillatoryTrig(y, phase), singular_at_zero=sing,
                  name=name)
    return _wrap(integrate_oscillatory(g, 0.0, _quad_cfg(cfg)), y)


def fourier_sine(f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """Fs{f}(y) = int_0^inf sin(x y) f(x) dx."""
    return _fourier(f, y, "sin", cfg)


def fourier_cosine(f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """Fc{f}(y) = int_0^inf cos(x y) f(x) dx."""
    return _fourier(f, y, "cos", cfg)


def hankel(nu: float, f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """H_nu{f}(y) = int_0^inf sqrt(x y) J_nu(x y) f(x) dx, nu > -1."""
    y = _point(y)
    nu = float(nu)
    if not (nu > -1.0):
        raise ValueError(f"hankel order must satisfy nu > -1, got {nu}")
    base = _as_integrand(f)
    fn = base.fn

    def kernel(x):
        return np.sqrt(x * y) * specfun.jv_values(nu, x * y) * fn(x)

    # J_nu(xy) ~ (xy)^nu at 0: endpoint power gains nu + 1/2
    sing = _sing(base, nu + 0.5)
    name = f"hankel[{nu:g}, {base.name}]"
    if isinstance(base.tail, ExponentialDecay):
        g = Integrand(kernel, tail=base.tail, singular_at_zero=sing, name=name)
        return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)
    g = Integrand(kernel, tail=OscillatoryBessel(nu, y), singular_at_zero=sing,
                  name=name)
    return _wrap(integrate_oscillatory(g, 0.0, _quad_cfg(cfg)), y)


def k_transform(nu: float, f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """K_nu{f}(y) = int_0^inf sqrt(x y) K_nu(x y) f(x) dx (even in nu)."""
    y = _point(y)
    nu = abs(float(nu))
    base = _as_integrand(f)
    fn = base.fn

    def kernel(x):
        # scaled K avoids underflow: K_nu(z) = kve(nu, z) exp(-z)
        z = x * y
        return np.sqrt(z) * specfun.kv_scaled_values(nu, z) * np.exp(-z) * fn(x)

    # K_nu(xy) ~ (xy)^-nu at 0 (log for nu = 0): endpoint power 1/2 - nu
    sing = _sing(base, 0.5 - nu if nu > 0 else 0.45)
    rate = y + (_decay_rate(base.tail) or 0.0)
    g = Integrand(kernel, tail=ExponentialDecay(rate), singular_at_zero=sing,
                  name=f"k_transform[{nu:g}, {base.name}]")
    return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), y)


def mellin(f, mu, cfg: QuadConfig | None = None) -> TransformValue:
    """M{f}(mu) = int_0^inf x^(mu-1) f(x) dx over the declared strip."""
    mu = float(mu)
    if not math.isfinite(mu):
        raise ValueError("Mellin exponent must be finite")
    base = _as_integrand(f)
    g = power_weighted(base, mu - 1.0, name=f"mellin[{base.name}]")
    if _osc(g.tail):
        return _wrap(integrate_oscillatory(g, 0.0, _quad_cfg(cfg)), mu)
    return _wrap(integrate_semi_infinite(g, 0.0, _quad_cfg(cfg)), mu)


def struve_transform(nu: float, f, y, cfg: QuadConfig | None = None) -> TransformValue:
    """Hs_nu{f}(y) = int_0^inf sqrt(x y) H_nu(x y) f(x) dx, nu > -3/2.

    The Struve kernel oscillates around a nonzero algebraic mean, which
    breaks plain block alternation.  Beyond a split point the kernel is
    separated into its asymptotic mean (integrated on the algebraic
    semi-infinite route) plus a zero-mean oscillation (kernel-zero blocks
    with acceleration); the head is integrated directly.
    """
    y = _point(y)
    nu = float(nu)
    if not (nu > -1.5):
        raise ValueError(f"struve transform order must satisfy nu > -3/2, got {nu}")
    base = _as_integrand(f)
    fn = base.fn
    name = f"struve_transform[{nu:g}, {base.name}]"
    qcfg = _quad_cfg(cfg)

    def full_kernel(x):
        return np.sqrt(x * y) * specfun.struve_values(nu, x * y) * fn(x)

    if isinstance(base.tail, ExponentialDecay):
        # the exponential envelope confines everything to a finite range
        g = Integrand(full_kernel, tail=base.tail,
                      singular_at_zero=_sing(base, nu + 1.5), name=name)
        return _wrap(integrate_semi_infinite(g, 0.0, qcfg), y)

    p_f = _alg_power(base.tail)
    if p_f is None:
        raise ValueError(f"{name}: needs an algebraic or exponential tail")

    split = (16.0 + 2.0 * nu * nu) / y
    part_cfg = qcfg.tightened(2.0)

    # head: everything up to the split, oscillations resolved adaptively
    head_ig = Integrand(full_kernel, singular_at_zero=_sing(base, nu + 1.5),
                        name=f"{name}[head]")
    head = integrate_finite(head_ig, 0.0, split, part_cfg)

    def osc_kernel(x):
        z = x * y
        osc = specfun.struve_values(nu, z) - specfun.struve_mean_values(nu, z)
        return np.sqrt(z) * osc * fn(x)

    osc_ig = Integrand(osc_kernel, tail=OscillatoryStruve(nu, y),
                       name=f"{name}[oscillation]")
    osc = integrate_oscillatory(osc_ig, split, part_cfg)

    def mean_kernel(x):
        z = x * y
        return np.sqrt(z) * specfun.struve_mean_values(nu, z) * fn(x)

    # sqrt(z) * mean(z) ~ z^(nu - 1/2): combined algebraic tail power
    mean_ig = Integrand(mean_kernel, tail=AlgebraicDecay(p_f + nu - 0.5),
                        name=f"{name}[mean-tail]")
    mean = integrate_semi_infinite(mean_ig, split, part_cfg)

    total = head + osc + mean
    return _wrap(total, y)


# ----------------------------------------------------------------------
# dispatch and nesting helpers
# ----------------------------------------------------------------------

def apply_kind(kind: str, f, point, nu: float | None = None,
               cfg: QuadConfig | None = None) -> TransformValue:
    """Evaluate a transform by kind name; order-bearing kinds need nu."""
    if kind not in TRANSFORM_KINDS:
        raise ValueError(f"unknown transform kind {kind!r}")
    if kind in _ORDER_KINDS:
        if nu is None:
            raise ValueError(f"{kind} requires an order nu")
        fn = {"hankel": hankel, "k_transform": k_transform,
              "struve_transform": struve_transform}[kind]
        return fn(nu, f, point, cfg)
    if nu is not None:
        raise ValueError(f"{kind} does not take an order")
    fn = {"laplace": laplace, "widder": widder, "stieltjes": stieltjes,
          "fourier_sine": fourier_sine, "fourier_cosine": fourier_cosine,
          "mellin": mellin}[kind]
    return fn(f, point, cfg)


def transform_function(kind: str, f, nu: float | None = None,
                       cfg: QuadConfig | None = None,
                       tail=None, singular_at_zero: float | None = None,
                       weight: float = 0.0, scale: float = 1.0,
                       name: str | None = None) -> Integrand:
    """An inner transform as a reusable integrand for nested evaluation.

    Returns scale * u**weight * T{f}(u) as an Integrand whose tail and
    endpoint metadata are supplied by the caller (the analytic behaviour
    of a transform iterate is identity-specific).  The inner quadrature
    runs one budget level tighter than cfg.
    """
    # pure-relative inner accuracy: outer substitutions can magnify tiny
    # inner values by large Jacobians, so an absolute floor would freeze
    # a relative error into the outer integrand
    inner_cfg = replace((cfg or QuadConfig()).tightened(4.0), abs_tol=1e-300)
    label = name or f"{kind}_of_{getattr(f, 'name', 'f')}"

    def eval_one(u: float) -> float:
        tv = apply_kind(kind, f, u, nu=nu, cfg=inner_cfg)
        if not tv.converged and tv.abs_err > 1e-2 * max(abs(tv.value), 1e-12):
            raise QuadratureError(
                f"{label}: inner evaluation at {u:.6g} did not converge "
                f"(value {tv.value:.6g}, err {tv.abs_err:.2g})")
        return tv.value

    def fn(u):
        u = np.asarray(u, dtype=float)
        flat = u.ravel()
        vals = np.array([eval_one(x) for x in flat])
        if weight != 0.0:
            vals = vals * flat ** weight
        if scale != 1.0:
            vals = vals * scale
        return vals.reshape(u.shape)

    return Integrand(fn, tail=tail if tail is not None else Mixed(),
                     singular_at_zero=singular_at_zero, name=label)
