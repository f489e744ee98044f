"""Partition-of-unity test functions on the radial half-line.

The boundary profile is

    chi(u, h) = N_h * int_{u-1}^{h} exp(h^2 / (v (v - h))) dv,

normalised so that chi(1, h) = 1 and vanishing (with all derivatives) at
u = 1 + h.  Substituting v = h*s shows chi(u, h) = Psi((u - 1) / h) with a
single universal profile Psi(s) = int_s^1 K / int_0^1 K, where
K(s) = exp(1 / (s (s - 1))).

The UV test function ``f_sup`` is 1 on [0, 1], follows chi with the running
width h(X) = mu2 * X**alpha - 1 on (1, X_max) and is 0 beyond
X_max = mu2**(1 / (1 - alpha)).  The IR test function is ``f_inf = w * f_sup``
with the rising weight w(X) = chi(h - X + 1, h).
"""

from dataclasses import dataclass, field
import functools
import math

import numpy as np

from .errors import DomainError
from .quadrature import QuadSpec, integrate_finite

__all__ = [
    "BoundaryProfile",
    "PUTestFunction",
    "bump_kernel",
    "chi",
    "f_sup",
    "weight_w",
    "f_inf",
    "sample_profile",
]

# exp() underflows to zero below this exponent
_UNDERFLOW = -745.0

_GL_X, _GL_W = np.polynomial.legendre.leggauss(40)


def bump_kernel(s):
    """K(s) = exp(1 / (s (s - 1))) on (0, 1), zero elsewhere."""
    if not 0.0 < s < 1.0:
        return 0.0
    expo = 1.0 / (s * (s - 1.0))
    return 0.0 if expo <= _UNDERFLOW else math.exp(expo)


def _kernel_array(s):
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        expo = 1.0 / (s * (s - 1.0))
    out = np.zeros_like(s)
    ok = (s > 0.0) & (s < 1.0) & (expo > _UNDERFLOW)
    out[ok] = np.exp(expo[ok])
    return out


def _kernel_tail(s):
    """int_s^1 K, two 40-point Gauss-Legendre panels (s in (0, 1))."""
    mid = 0.5 * (s + 1.0)
    half = 0.5 * (mid - s)
    nodes = np.concatenate((s + half * (_GL_X + 1.0), mid + half * (_GL_X + 1.0)))
    return half * float(np.dot(np.concatenate((_GL_W, _GL_W)), _kernel_array(nodes)))


@functools.lru_cache(maxsize=1)
def _kernel_mass():
    spec = QuadSpec(abs_tol=1e-16, rel_tol=1e-14)
    return integrate_finite(bump_kernel, 0.0, 1.0, spec, points=(0.5,)).require(spec, "bump kernel mass")


def _profile(s):
    if s <= 0.0:
        return 1.0
    if s >= 1.0:
        return 0.0
    return _kernel_tail(s) / _kernel_mass()


@dataclass(frozen=True)
class BoundaryProfile:
    """chi(., h) for a fixed width h; ``normalization`` is N_h."""

    h: float
    normalization: float = field(init=False)

    def __post_init__(self):
        if not (self.h > 0.0 and math.isfinite(self.h)):
            raise DomainError(f"boundary width h must be positive, got {self.h}")
        object.__setattr__(self, "normalization", 1.0 / (self.h * _kernel_mass()))

    def __call__(self, u):
        return _profile((u - 1.0) / self.h)

    def derivative(self, u):
        """d chi / du = -N_h * exp(h^2 / (v (v - h))) at v = u - 1."""
        return -self.normalization * bump_kernel((u - 1.0) / self.h)


@functools.lru_cache(maxsize=256)
def _profile_for(h):
    return BoundaryProfile(h)


def chi(u, h):
    """Boundary profile chi(u, h): 1 for u <= 1, 0 for u >= 1 + h."""
    return _profile_for(float(h))(float(u))


@dataclass(frozen=True)
class PUTestFunction:
    """Partition-of-unity test function with scale ``mu2`` and exponent ``alpha``.

    ``ir_width`` is the fixed width of the rising IR weight; it defaults to
    ``mu2 - 1``, the value of the running width at X = 1.
    """

    mu2: float
    alpha: float
    ir_width: float = None

    def __post_init__(self):
        if not self.mu2 > 1.0:
            raise DomainError(f"the ramp construction needs mu2 > 1, got {self.mu2}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.ir_width is None:
            object.__setattr__(self, "ir_width", self.mu2 - 1.0)
        elif not self.ir_width > 0.0:
            raise DomainError(f"ir_width must be positive, got {self.ir_width}")

    @property
    def x_max(self):
        return self.mu2 ** (1.0 / (1.0 - self.alpha))

    def g(self, x):
        return x ** (self.alpha - 1.0)

    def width(self, x):
        """Running ramp width h(X) = mu2 * X**alpha - 1."""
        return self.mu2 * x**self.alpha - 1.0

    def f_sup(self, x):
        if x <= 1.0:
            return 1.0
        if x >= self.x_max:
            return 0.0
        return chi(x, self.width(x))

    def weight_w(self, x):
        h = self.ir_width
        return chi(h - x + 1.0, h)

    def f_inf(self, x):
        return self.weight_w(x) * self.f_sup(x)


def f_sup(x, pu):
    if x < 0:
        raise DomainError(f"test functions live on X >= 0, got {x}")
    return pu.f_sup(x)


def weight_w(x, pu):
    if x < 0:
        raise DomainError(f"test functions live on X >= 0, got {x}")
    return pu.weight_w(x)


def f_inf(x, pu):
    if x < 0:
        raise DomainError(f"test functions live on X >= 0, got {x}")
    return pu.f_inf(x)


def sample_profile(pu, samples=512):
    """Rows (X, f_sup, w, f_inf) on a uniform grid over [0, 1.1 * X_max]."""
    if samples < 2:
        raise DomainError("need at least two samples")
    grid = np.linspace(0.0, 1.1 * pu.x_max, samples)
    return [(float(x), pu.f_sup(x), pu.weight_w(x), pu.f_inf(x)) for x in grid]
