"""Extension of singular radial distributions with partition-of-unity test functions."""

from .errors import ConvergenceError, DomainError
from .extend import (
    ExtendedIR,
    ExtendedUV,
    PurePower,
    RationalRadial,
    extend_ir,
    extend_uv_formA,
    extend_uv_formB,
    ir_singular_order,
    pair_ir,
    uv_singular_order,
)
from .physics import mass_series_propagator, pv_check, tadpole
from .quadrature import QuadResult, QuadSpec, integrate_finite, integrate_semi_infinite
from .special import EULER_GAMMA, bessel_j0, bessel_k0, digamma_int, harmonic_eg
from .testfunc import PUTestFunction, chi
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "EULER_GAMMA",
    "ExtendedIR",
    "ExtendedUV",
    "PUTestFunction",
    "PurePower",
    "QuadResult",
    "QuadSpec",
    "RationalRadial",
    "bessel_j0",
    "bessel_k0",
    "chi",
    "digamma_int",
    "extend_ir",
    "extend_uv_formA",
    "extend_uv_formB",
    "harmonic_eg",
    "integrate_finite",
    "integrate_semi_infinite",
    "ir_singular_order",
    "mass_series_propagator",
    "pair_ir",
    "pv_check",
    "run_suite",
    "tadpole",
    "uv_singular_order",
]
