"""Named test-function families with decay metadata and closed transforms.

Every family is a parameterized real function on (0, inf) whose parameter
constraints guarantee convergence of the transforms the verification
suite applies to it.  Where classical tables give a transform in closed
form, the family carries a ``ClosedForm`` so direct quadrature can be
checked against an independent formula.

Families (catalog syntax ``family:key=value,...``):

    power:mu=-0.5              x**mu
    exp_decay:a=1              exp(-a x)
    power_exp:mu=0.5,a=1       x**mu exp(-a x)
    lorentz_power:nu=0.25,a=1  x**(2 nu) / (x^2 + a^2)
    hankel_kernel_frac:nu=0.25,t=1   x**(nu+1/2) / (x^2 + t^2)
    bessel_power:nu=0.5,a=1    x**(2 nu + 1/2) J_nu(a x)
    struve_half:nu=0,a=1       x**(1/2) H_nu(a x)
    gauss:a=1                  exp(-a x^2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import special as _sp

from .quadrature import (
    AlgebraicDecay,
    ExponentialDecay,
    OscillatoryBessel,
    OscillatoryStruve,
)

__all__ = [
    "FunctionDescriptor", "ClosedForm", "ConstraintError",
    "instantiate", "closed_forms", "sample_grid", "parse_function",
    "FAMILIES", "DEFAULT_POINTS",
]

# default evaluation points for transform checks
DEFAULT_POINTS = (0.5, 1.0, 2.0)


class ConstraintError(ValueError):
    """A family parameter violates its validity constraint."""


@dataclass(frozen=True)
class FunctionDescriptor:
    """A catalog function: callable plus routing metadata.

    Field names match Integrand so descriptors feed the quadrature layer
    and the transform operators directly.
    """
    family: str
    params: tuple
    fn: Callable[[np.ndarray], np.ndarray]
    tail: object
    singular_at_zero: float | None = None

    def __call__(self, x):
        return self.fn(x)

    @property
    def name(self) -> str:
        inner = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.family}:{inner}"

    def param(self, key: str) -> float:
        return dict(self.params)[key]


@dataclass(frozen=True)
class ClosedForm:
    """A known transform of a family member.

    ``transform`` is the transform kind name; order-bearing kinds carry
    the order tied to the family parameters.  ``evaluate`` maps the
    evaluation point (or Mellin exponent) to the table value;
    ``point_valid`` guards poles/strips in the point variable.
    """
    transform: str
    evaluate: Callable[[float], float]
    citation: str
    order: float | None = None
    validity: str = ""
    point_valid: Callable[[float], bool] = field(default=lambda y: y > 0)


def _check(cond: bool, message: str):
    if not cond:
        raise ConstraintError(message)


_SQ2PI = math.sqrt(2.0 / math.pi)
_SQPI2 = math.sqrt(math.pi / 2.0)


def _sec(z):
    return 1.0 / math.cos(z)


# ----------------------------------------------------------------------
# family builders: params -> (fn, tail, singular, closed forms)
# ----------------------------------------------------------------------

def _build_power(mu):
    _check(-2.0 < mu < 1.0, f"power requires -2 < mu < 1, got mu={mu}")

    def fn(x):
        return x ** mu

    forms = [
        ClosedForm(
            "widder",
            lambda y, mu=mu: 0.5 * math.pi * _sec(0.5 * math.pi * (mu + 1.0)) * y ** mu,
            "Widder transform of a pure power (classical table value)",
            validity="-2 < mu < 0",
        ) if -2.0 < mu < 0.0 and abs(mu + 1.0) < 0.999 else None,
        ClosedForm(
            "stieltjes",
            lambda y, mu=mu: math.pi / math.sin(math.pi * (mu + 1.0)) * y ** mu,
            "Stieltjes transform of a pure power (classical table value)",
            validity="-1 < mu < 0",
        ) if -1.0 < mu < 0.0 else None,
    ]
    return fn, AlgebraicDecay(mu), mu, [f for f in forms if f]


def _build_exp_decay(a):
    _check(a > 0, f"exp_decay requires a > 0, got a={a}")

    def fn(x):
        return np.exp(-a * x)

    def widder_cf(y, a=a):
        si, ci = _sp.sici(a * y)
        return float(-ci * math.cos(a * y) - math.sin(a * y) * (si - 0.5 * math.pi))

    forms = [
        ClosedForm("laplace", lambda y, a=a: 1.0 / (y + a),
                   "Laplace transform of an exponential (elementary)"),
        ClosedForm("fourier_sine", lambda y, a=a: y / (y * y + a * a),
                   "Fourier sine transform of an exponential (elementary)"),
        ClosedForm("fourier_cosine", lambda y, a=a: a / (y * y + a * a),
                   "Fourier cosine transform of an exponential (elementary)"),
        ClosedForm("mellin", lambda s, a=a: math.gamma(s) * a ** (-s),
                   "Mellin transform of an exponential is Gamma",
                   validity="s > 0", point_valid=lambda s: s > 0),
        ClosedForm("stieltjes", lambda y, a=a: float(np.exp(a * y) * _sp.exp1(a * y)),
                   "Stieltjes transform of an exponential via E1"),
        ClosedForm("widder", widder_cf,
                   "Widder transform of an exponential via sine/cosine integrals"),
        ClosedForm("hankel", lambda y, a=a: _SQ2PI * y / (y * y + a * a),
                   "half-order Hankel reduces to the Fourier sine transform",
                   order=0.5),
        ClosedForm("k_transform", lambda y, a=a: _SQPI2 / (y + a),
                   "half-order K-transform reduces to the Laplace transform",
                   order=0.5),
    ]
    return fn, ExponentialDecay(a), 0.0, forms


def _build_power_exp(mu, a):
    _check(mu > -1.0, f"power_exp requires mu > -1, got mu={mu}")
    _check(mu < 4.0, f"power_exp requires mu < 4, got mu={mu}")
    _check(a > 0, f"power_exp requires a > 0, got a={a}")

    def fn(x):
        return x ** mu * np.exp(-a * x)

    def fs(y, mu=mu, a=a):
        r = math.hypot(a, y)
        return (math.gamma(mu + 1.0) * math.sin((mu + 1.0) * math.atan2(y, a))
                / r ** (mu + 1.0))

    def fc(y, mu=mu, a=a):
        r = math.hypot(a, y)
        return (math.gamma(mu + 1.0) * math.cos((mu + 1.0) * math.atan2(y, a))
                / r ** (mu + 1.0))

    forms = [
        ClosedForm("laplace",
                   lambda y, mu=mu, a=a: math.gamma(mu + 1.0) / (y + a) ** (mu + 1.0),
                   "Laplace transform of a power times exponential (Gamma moment)"),
        ClosedForm("mellin",
                   lambda s, mu=mu, a=a: math.gamma(s + mu) * a ** (-s - mu),
                   "Mellin of power times exponential", validity="s + mu > 0",
                   point_valid=lambda s, mu=mu: s + mu > 0),
        ClosedForm("fourier_sine", fs,
                   "Fourier sine transform of x^mu e^(-ax) (classical)"),
        ClosedForm("fourier_cosine", fc,
                   "Fourier cosine transform of x^mu e^(-ax) (classical)"),
    ]
    return fn, ExponentialDecay(a), mu, forms


def _build_lorentz_power(nu, a):
    _check(-1.0 < nu < 1.0, f"lorentz_power requires |nu| < 1, got nu={nu}")
    _check(a > 0, f"lorentz_power requires a > 0, got a={a}")

    def fn(x):
        return x ** (2.0 * nu) / (x * x + a * a)

    forms = []
    if abs(nu) > 1e-9:
        def widder_cf(y, nu=nu, a=a):
            return (0.5 * math.pi / math.sin(nu * math.pi)
                    * (a ** (2 * nu) - y ** (2 * nu)) / (a * a - y * y))
        forms.append(ClosedForm(
            "widder", widder_cf,
            "Widder transform of x^(2 nu)/(x^2+a^2): two-pole partial fractions",
            validity="|nu| < 1, nu != 0, y != a",
            point_valid=lambda y, a=a: y > 0 and abs(y - a) > 1e-6))
    forms.append(ClosedForm(
        "mellin",
        lambda s, nu=nu, a=a: (0.5 * math.pi * a ** (s + 2 * nu - 2.0)
                               * _sec(0.5 * math.pi * (s + 2 * nu - 1.0))),
        "Mellin of x^(2 nu)/(x^2+a^2) (classical)",
        validity="0 < s + 2 nu < 2",
        point_valid=lambda s, nu=nu: 0.05 < s + 2 * nu < 1.95))
    return fn, AlgebraicDecay(2.0 * nu - 2.0), 2.0 * nu, forms


def _build_hankel_kernel_frac(nu, t):
    _check(-1.0 < nu < 1.5, f"hankel_kernel_frac requires -1 < nu < 3/2, got nu={nu}")
    _check(t > 0, f"hankel_kernel_frac requires t > 0, got t={t}")

    def fn(x):
        return x ** (nu + 0.5) / (x * x + t * t)

    forms = [
        ClosedForm(
            "hankel",
            lambda y, nu=nu, t=t: t ** nu * math.sqrt(y) * float(_sp.kv(nu, t * y)),
            "Hankel transform of x^(nu+1/2)/(x^2+t^2) is a Macdonald function",
            order=nu, validity="-1 < nu < 3/2"),
    ]
    if abs(nu + 0.5) > 1e-9:
        half = 0.5 * (nu + 0.5)

        def widder_cf(y, half=half, t=t):
            return (0.5 * math.pi / math.sin(half * math.pi)
                    * (t ** (2 * half) - y ** (2 * half)) / (t * t - y * y))
        forms.append(ClosedForm(
            "widder", widder_cf,
            "Widder transform via two-pole partial fractions",
            point_valid=lambda y, t=t: y > 0 and abs(y - t) > 1e-6))
    return fn, AlgebraicDecay(nu - 1.5), nu + 0.5, forms


def _build_bessel_power(nu, a):
    _check(nu > -1.0, f"bessel_power requires nu > -1, got nu={nu}")
    _check(nu <= 1.2, f"bessel_power supported for nu <= 1.2, got nu={nu}")
    _check(a > 0, f"bessel_power requires a > 0, got a={a}")

    def fn(x):
        return x ** (2.0 * nu + 0.5) * _sp.jv(nu, a * x)

    forms = [
        ClosedForm(
            "k_transform",
            lambda y, nu=nu, a=a: (2.0 ** (2 * nu) * a ** nu * y ** (nu + 0.5)
                                   * math.gamma(2 * nu + 1.0)
                                   / (y * y + a * a) ** (2 * nu + 1.0)),
            "K-transform of x^(2 nu+1/2) J_nu(a x) (classical table value)",
            order=nu),
    ]
    return fn, OscillatoryBessel(nu, a), 3.0 * nu + 0.5, forms


def _build_struve_half(nu, a):
    _check(-1.4 <= nu <= 5.0, f"struve_half requires nu in [-1.4, 5], got nu={nu}")
    _check(a > 0, f"struve_half requires a > 0, got a={a}")

    def fn(x):
        return np.sqrt(x) * _sp.struve(nu, a * x)

    forms = [
        ClosedForm(
            "k_transform",
            lambda y, nu=nu, a=a: a ** (nu + 1.0) * y ** (-nu - 0.5) / (y * y + a * a),
            "K-transform of x^(1/2) H_nu(a x) (classical table value)",
            order=nu),
    ]
    return fn, OscillatoryStruve(nu, a), nu + 1.5, forms


def _build_gauss(a):
    _check(a > 0, f"gauss requires a > 0, got a={a}")

    def fn(x):
        return np.exp(-a * x * x)

    sq = math.sqrt(a)
    forms = [
        ClosedForm("laplace",
                   lambda y, a=a, sq=sq: 0.5 * math.sqrt(math.pi / a)
                   * float(_sp.erfcx(y / (2 * sq))),
                   "Laplace transform of a Gaussian via scaled erfc"),
        ClosedForm("fourier_cosine",
                   lambda y, a=a: 0.5 * math.sqrt(math.pi / a)
                   * math.exp(-y * y / (4 * a)),
                   "Fourier cosine transform of a Gaussian (self-reciprocal)"),
        ClosedForm("fourier_sine",
                   lambda y, a=a, sq=sq: float(_sp.dawsn(y / (2 * sq))) / sq,
                   "Fourier sine transform of a Gaussian via Dawson's integral"),
        ClosedForm("mellin",
                   lambda s, a=a: 0.5 * math.gamma(0.5 * s) * a ** (-0.5 * s),
                   "Mellin transform of a Gaussian", validity="s > 0",
                   point_valid=lambda s: s > 0),
    ]
    return fn, ExponentialDecay(a), 0.0, forms


# family name -> (builder, param names, defaults, grid axis, axis box, excluded)
FAMILIES: dict[str, dict] = {
    "power": dict(build=_build_power, params=("mu",), defaults={"mu": -0.5},
                  axis="mu", box=(-2.0, 1.0), excluded=(-1.0,)),
    "exp_decay": dict(build=_build_exp_decay, params=("a",), defaults={"a": 1.0},
                      axis="a", box=(0.25, 4.0), excluded=()),
    "power_exp": dict(build=_build_power_exp, params=("mu", "a"),
                      defaults={"mu": 0.5, "a": 1.0},
                      axis="mu", box=(-1.0, 4.0), excluded=()),
    "lorentz_power": dict(build=_build_lorentz_power, params=("nu", "a"),
                          defaults={"nu": 0.25, "a": 1.0},
                          axis="nu", box=(-1.0, 1.0), excluded=(0.0,)),
    "hankel_kernel_frac": dict(build=_build_hankel_kernel_frac, params=("nu", "t"),
                               defaults={"nu": 0.25, "t": 1.0},
                               axis="nu", box=(-1.0, 1.5), excluded=(-0.5,)),
    "bessel_power": dict(build=_build_bessel_power, params=("nu", "a"),
                         defaults={"nu": 0.5, "a": 1.0},
                         axis="nu", box=(-0.9, 1.2), excluded=()),
    "struve_half": dict(build=_build_struve_half, params=("nu", "a"),
                        defaults={"nu": 0.0, "a": 1.0},
                        axis="nu", box=(-1.4, 5.0), excluded=()),
    "gauss": dict(build=_build_gauss, params=("a",), defaults={"a": 1.0},
                  axis="a", box=(0.25, 4.0), excluded=()),
}

_forms_cache: dict[tuple, list] = {}


def instantiate(family: str, params: dict | None = None, **kw) -> FunctionDescriptor:
    """Build a FunctionDescriptor, validating every family constraint."""
    if family not in FAMILIES:
        raise ConstraintError(f"unknown family {family!r}; known: {sorted(FAMILIES)}")
    spec = FAMILIES[family]
    merged = dict(spec["defaults"])
    merged.update(params or {})
    merged.update(kw)
    unknown = set(merged) - set(spec["params"])
    if unknown:
        raise ConstraintError(f"{family}: unknown parameter(s) {sorted(unknown)}")
    args = [float(merged[p]) for p in spec["params"]]
    fn, tail, singular, forms = spec["build"](*args)
    key = (family, tuple(zip(spec["params"], args)))
    _forms_cache[key] = forms
    return FunctionDescriptor(family=family, params=key[1], fn=fn, tail=tail,
                              singular_at_zero=singular)


def closed_forms(f: FunctionDescriptor) -> list[ClosedForm]:
    """Known transforms of f; possibly empty."""
    key = (f.family, f.params)
    if key not in _forms_cache:
        instantiate(f.family, dict(f.params))
    return list(_forms_cache[key])


def sample_grid(f: FunctionDescriptor | str, n: int,
                box: tuple[float, float] | None = None) -> list[FunctionDescriptor]:
    """Deterministic descriptors along the family's gridded parameter.

    Points keep a margin of at least 0.05 (one tenth of the box width)
    from each boundary; excluded parameter values are nudged off.
    n = 1 yields the box centroid.
    """
    family = f if isinstance(f, str) else f.family
    if n < 1:
        raise ValueError("n >= 1 required")
    spec = FAMILIES[family]
    lo, hi = box if box is not None else spec["box"]
    if not (hi > lo):
        raise ConstraintError(f"{family}: empty validity region ({lo}, {hi})")
    width = hi - lo
    margin = max(0.05, 0.1 * width)
    if 2 * margin >= width:
        margin = 0.25 * width
    if n == 1:
        values = [0.5 * (lo + hi)]
    else:
        values = list(np.linspace(lo + margin, hi - margin, n))
    step = (values[1] - values[0]) if n > 1 else 0.25 * width
    out = []
    base = dict(spec["defaults"])
    if not isinstance(f, str):
        base.update(dict(f.params))
    for v in values:
        for bad in spec["excluded"]:
            if abs(v - bad) < 0.05:
                v = v + 0.07 * (step if step else width)
        params = dict(base)
        params[spec["axis"]] = v
        out.append(instantiate(family, params))
    return out


def parse_function(text: str) -> FunctionDescriptor:
    """Parse CLI syntax 'family:key=value,key=value'."""
    name, _, rest = text.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            k, _, v = item.partition("=")
            if not _ or not k:
                raise ConstraintError(f"bad parameter syntax {item!r} in {text!r}")
            try:
                params[k.strip()] = float(v)
            except ValueError:
                raise ConstraintError(f"non-numeric value {v!r} in {text!r}") from None
    return instantiate(name.strip(), params)
