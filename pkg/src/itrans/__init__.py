"""Numerical integral transforms and verified exchange identities.

A numpy/scipy library implementing the Widder, Stieltjes, Laplace,
Fourier sine/cosine, Hankel, K-, Mellin and Struve transforms as
numerical operators over a catalog of test-function families, plus a
registry of iteration, Parseval-Goldstein exchange, moment and
closed-form identities that is verified end to end by high-accuracy
quadrature over deterministic parameter grids.
"""

from .quadrature import (
    AlgebraicDecay,
    DivergenceError,
    ExponentialDecay,
    Integrand,
    IntegrandError,
    Mixed,
    OscillatoryBessel,
    OscillatoryStruve,
    OscillatoryTrig,
    QuadConfig,
    QuadResult,
    QuadratureError,
    find_bessel_zeros,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
)
from .specfun import (
    PoleError,
    SpecialValue,
    bessel_j,
    bessel_k,
    bessel_k_scaled,
    gamma,
    struve_h,
)

__version__ = "0.1.0"
