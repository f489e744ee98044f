"""Tadpoles, the Pauli-Villars cross-check and the D=2 mass series.

All inputs are in units of the mass; the UV scale Lambda is identified
with m, and in the IR series the log scale is fixed by matching the
massless propagator, which again sets Lambda = m.
"""

from dataclasses import dataclass, field
import math

from .errors import ConvergenceError, DomainError
from .extend import RationalRadial, extend_uv_formA, uv_singular_order
from .quadrature import QuadSpec, integrate_semi_infinite
from .special import EULER_GAMMA, bessel_k0, digamma_int

__all__ = [
    "RADIAL_MEASURE",
    "TadpoleResult",
    "PVResult",
    "SeriesResult",
    "tadpole",
    "tadpole_analytic",
    "pv_check",
    "ft_ir_term",
    "mass_series_propagator",
]

# int d^D p / (2 pi)^D F(p^2) = RADIAL_MEASURE[D] * int_0^inf p^(D-1) F(p^2) dp
RADIAL_MEASURE = {2: 1.0 / (2.0 * math.pi), 4: 1.0 / (8.0 * math.pi**2)}

_TADPOLE_SPEC = QuadSpec(abs_tol=1e-13, rel_tol=1e-12)


@dataclass(frozen=True)
class TadpoleResult:
    dimension: int
    mu2: float
    m: float
    quadrature_value: float
    analytic_value: float
    abs_error: float


@dataclass(frozen=True)
class PVResult:
    mu2: float
    m: float
    pv_value: float
    eq17_value: float
    abs_diff: float


@dataclass(frozen=True)
class SeriesResult:
    m: float
    x: float
    terms: list = field(repr=False)
    partial_sum: float
    reference_k0: float
    rel_error: float
    k_used: int
    converged: bool = True


def _check_scale(mu2, m):
    if not mu2 >= 1.0:
        raise DomainError(f"the test-function scale needs mu2 > 1 (mu2 = 1 gives zero), got mu2={mu2}")
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got m={m}")


def tadpole_analytic(dimension, mu2, m):
    if dimension == 2:
        return math.log(mu2) / (4.0 * math.pi)
    if dimension == 4:
        return m * m / (16.0 * math.pi**2 * mu2) * (1.0 - mu2 + mu2 * math.log(mu2))
    raise DomainError(f"tadpoles are implemented for D = 2 and D = 4, got D={dimension}")


def tadpole(dimension, mu2, m=1.0):
    """Delta(0) from the extended propagator, by radial quadrature and in closed form."""
    if dimension not in RADIAL_MEASURE:
        raise DomainError(f"tadpoles are implemented for D = 2 and D = 4, got D={dimension}")
    _check_scale(mu2, m)
    m2 = m * m
    propagator = RationalRadial(a=0, b=1, lambda2=m2, m2=m2)
    d = dimension // 2
    ext = extend_uv_formA(propagator, d, uv_singular_order(propagator, d), mu2)
    measure = RADIAL_MEASURE[dimension]

    def integrand(p):
        return measure * p ** (dimension - 1) * ext.evaluator(p * p / m2)

    res = integrate_semi_infinite(integrand, 0.0, _TADPOLE_SPEC, points=(m,))
    value = res.require(_TADPOLE_SPEC, f"D={dimension} tadpole")
    analytic = tadpole_analytic(dimension, mu2, m)
    return TadpoleResult(dimension, float(mu2), float(m), value, analytic, abs(value - analytic))


def pv_check(mu2, m=1.0):
    """(1/2 pi) int p dp [1/(p^2+m^2) - 1/(p^2+m^2 mu2)] against (1/4 pi) log mu2."""
    _check_scale(mu2, m)
    m2 = m * m
    shift = m2 * (mu2 - 1.0)

    # difference written over a common denominator: no cancellation at large p
    def integrand(p):
        q = p * p
        return RADIAL_MEASURE[2] * p * shift / ((q + m2) * (q + m2 * mu2))

    res = integrate_semi_infinite(integrand, 0.0, _TADPOLE_SPEC, points=(m,))
    value = res.require(_TADPOLE_SPEC, "Pauli-Villars integral")
    reference = math.log(mu2) / (4.0 * math.pi)
    return PVResult(float(mu2), float(m), value, reference, abs(value - reference))


def ft_ir_term(k, m, x):
    """2D Fourier transform of the extended 1/(p^2)^(k+1) at separation x, Lambda = m."""
    if not x > 0.0:
        raise DomainError(f"separation must be positive, got x={x}")
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got m={m}")
    if k < 0:
        raise DomainError(f"order must be non-negative, got k={k}")
    bracket = digamma_int(k + 1) - math.log(m * x / 2.0)
    return (-1) ** k / (2.0 * math.pi * math.factorial(k) ** 2) * (x * x / 4.0) ** k * bracket


def mass_series_propagator(m, x, tol=1e-12, k_max=60):
    """Sum the mass expansion of the D=2 propagator and compare with K0/(2 pi).

    term_k = (1/2 pi) (m^2 x^2/4)^k / (k!)^2 [psi(k+1) - log(m x / 2)].
    Stops once two consecutive terms fall below ``tol * |partial sum|``.
    """
    if not (m > 0.0 and x > 0.0):
        raise DomainError(f"mass and separation must be positive, got m={m}, x={x}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if k_max < 0:
        raise DomainError(f"k_max must be non-negative, got {k_max}")
    z = m * x
    q = 0.25 * z * z
    log_half = math.log(0.5 * z)
    weight = 1.0 / (2.0 * math.pi)
    terms = []
    small_run = 0
    converged = False
    for k in range(k_max + 1):
        if k:
            weight *= q / (k * k)
        terms.append(weight * (digamma_int(k + 1) - log_half))
        partial = math.fsum(terms)
        small_run = small_run + 1 if abs(terms[-1]) < tol * abs(partial) else 0
        if small_run >= 2:
            converged = True
            break
    if not converged and len(terms) > 1 and abs(terms[-1]) >= abs(terms[-2]):
        raise ConvergenceError(f"mass series terms still growing at k_max={k_max} (m x = {z})")
    partial = math.fsum(terms)
    reference = bessel_k0(z) / (2.0 * math.pi)
    return SeriesResult(
        m=float(m),
        x=float(x),
        terms=terms,
        partial_sum=partial,
        reference_k0=reference,
        rel_error=abs(partial - reference) / abs(reference),
        k_used=len(terms) - 1,
        converged=converged,
    )


def massless_propagator(m, x):
    """-(1/2 pi) [gamma + log(m x / 2)]."""
    return -(EULER_GAMMA + math.log(m * x / 2.0)) / (2.0 * math.pi)
