"""Special functions used by the closed forms.

Only what the extension formulas need: J0 and K0 on the positive real
axis, the digamma function at positive integers and the harmonic sum
``H_k`` that multiplies the delta terms of the infrared extension.
"""

import math

from .errors import DomainError

__all__ = ["EULER_GAMMA", "bessel_j0", "bessel_k0", "digamma_int", "harmonic_eg"]

EULER_GAMMA = 0.5772156649015329

# J0 power series is used below this |x|; the largest term is ~I0(8) ~ 430,
# which costs two digits of the 1e-12 absolute budget at most.
_J0_SERIES_MAX = 8.0

# Trapezoid step for the K0 integral; the integrand is entire in a strip of
# half-width pi/2, so the discretisation error is ~exp(-2*pi*1.4/h).
_K0_STEP = 0.0625

# Bernoulli-number terms B_2j / (2j) of the digamma asymptotic series.
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
)
_DIGAMMA_DIRECT_MAX = 64


def bessel_j0(x):
    """Bessel function of the first kind of order zero.

    Power series for |x| <= 8; beyond that Bessel's integral
    ``J0(x) = (1/pi) * int_0^pi cos(x sin th) dth`` with the midpoint rule,
    which is spectrally accurate for this periodic integrand once the number
    of nodes exceeds |x| by a few dozen.
    """
    x = abs(float(x))
    if not math.isfinite(x):
        raise DomainError(f"bessel_j0 needs a finite argument, got {x}")
    if x <= _J0_SERIES_MAX:
        q = -0.25 * x * x
        term = 1.0
        total = 1.0
        j = 0
        while True:
            j += 1
            term *= q / (j * j)
            total += term
            if abs(term) < 1e-17 * max(1.0, abs(total)):
                return total
    n = int(x) + 40
    step = math.pi / n
    return math.fsum(math.cos(x * math.sin((j + 0.5) * step)) for j in range(n)) / n


def bessel_k0(z):
    """Modified Bessel function of the second kind of order zero, z > 0.

    Evaluated from ``K0(z) = int_0^inf exp(-z cosh t) dt`` with the
    trapezoid rule after factoring out ``exp(-z)``. The series in powers of
    z is deliberately *not* used: the mass expansion in
    :mod:`egext.physics` is that series, and K0 serves as its reference.
    """
    z = float(z)
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"bessel_k0 requires z > 0, got {z}")
    # truncate where exp(-z (cosh t - 1)) < 1e-18
    t_max = math.acosh(1.0 + 42.0 / z)
    n = int(t_max / _K0_STEP) + 1
    terms = [0.5]
    terms.extend(math.exp(-z * (math.cosh(j * _K0_STEP) - 1.0)) for j in range(1, n + 1))
    return math.exp(-z) * _K0_STEP * math.fsum(terms)


def digamma_int(n):
    """psi(n) for a positive integer n, i.e. ``-gamma + sum_{j<n} 1/j``."""
    if isinstance(n, float) and n.is_integer():
        n = int(n)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"digamma_int requires an integer n >= 1, got {n!r}")
    if n <= _DIGAMMA_DIRECT_MAX:
        return math.fsum([-EULER_GAMMA] + [1.0 / j for j in range(1, n)])
    inv2 = 1.0 / (n * n)
    tail = 0.0
    power = inv2
    for coeff in _DIGAMMA_ASYMPTOTIC:
        tail += coeff * power
        power *= inv2
    return math.log(n) - 0.5 / n - tail


def harmonic_eg(k):
    """Harmonic sum ``H_k = 1 + 1/2 + ... + 1/k`` (``H_0 = 0``).

    Equal to the alternating binomial sum ``sum_p (-1)^(p+1) C(k, p) / p``
    and to ``gamma + psi(k+1)``; the direct form is used because the
    binomial sum cancels catastrophically for large k.
    """
    if isinstance(k, float) and k.is_integer():
        k = int(k)
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"harmonic_eg requires an integer k >= 0, got {k!r}")
    return math.fsum(1.0 / j for j in range(1, k + 1))
