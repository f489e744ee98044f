"""Taylor-jet subtraction in one radial variable.

``taylor_jet`` is the order-k Taylor polynomial at the origin,
``lagrange_remainder`` the integral (Lagrange) form of what is left over,
and ``pw_apply`` the weighted blend

    P^w phi(X) = (1 - w(X)) R^{k-1} phi(X) + w(X) R^k phi(X),

with the convention R^{-1} phi = phi.
"""

from dataclasses import dataclass
import math

from .errors import DomainError
from .quadrature import QuadSpec, integrate_finite

__all__ = [
    "SmoothProbe",
    "finite_difference",
    "taylor_jet",
    "lagrange_remainder",
    "pw_apply",
]

_REMAINDER_SPEC = QuadSpec(abs_tol=1e-14, rel_tol=1e-12)


def finite_difference(f, n, x, step=None):
    """n-th derivative of *f* at *x* by central differences + one Richardson step.

    The default step balances the O(h^4) truncation of the extrapolated
    stencil against rounding amplified by 1/h^n.
    """
    if n == 0:
        return f(x)
    if step is None:
        step = 2.2e-16 ** (1.0 / (n + 4)) * max(1.0, abs(x))

    def central(h):
        total = math.fsum(
            (-1) ** j * math.comb(n, j) * f(x + (0.5 * n - j) * h) for j in range(n + 1)
        )
        return total / h**n

    coarse = central(step)
    fine = central(0.5 * step)
    return (4.0 * fine - coarse) / 3.0


@dataclass(frozen=True)
class SmoothProbe:
    """A smooth pairing function with derivatives up to ``max_order``.

    ``derivatives[i]`` is the analytic (i+1)-th derivative, when known;
    orders beyond the supplied list fall back to finite differences.
    """

    func: object
    derivatives: tuple = ()
    max_order: int = 8
    fd_step: float = None

    def __call__(self, x):
        return self.func(x)

    def deriv(self, n, x):
        if n < 0 or n > self.max_order:
            raise DomainError(f"derivative order {n} outside 0..{self.max_order}")
        if n == 0:
            return self.func(x)
        if n <= len(self.derivatives):
            return self.derivatives[n - 1](x)
        return finite_difference(self.func, n, x, self.fd_step)

    @classmethod
    def exp_decay(cls, rate=1.0, max_order=12):
        """phi(X) = exp(-rate * X) with exact derivatives."""
        derivs = tuple(
            (lambda x, n=n: (-rate) ** n * math.exp(-rate * x)) for n in range(1, max_order + 1)
        )
        return cls(lambda x: math.exp(-rate * x), derivs, max_order)

    @classmethod
    def polynomial(cls, coeffs):
        """phi(X) = sum_j coeffs[j] X^j; all derivatives exact."""
        coeffs = tuple(float(c) for c in coeffs)

        def make(n):
            def d(x):
                return sum(
                    c * math.perm(j, n) * x ** (j - n) for j, c in enumerate(coeffs) if j >= n
                )
            return d

        degree = max(len(coeffs) - 1, 0)
        return cls(make(0), tuple(make(n) for n in range(1, degree + 3)), degree + 2)

    @classmethod
    def zero(cls, max_order=12):
        def nothing(x):
            return 0.0

        return cls(nothing, (nothing,) * max_order, max_order)


def _check_order(phi, order):
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    if order > phi.max_order:
        raise DomainError(f"probe only supplies derivatives up to {phi.max_order}, need {order}")


def taylor_jet(phi, k, x):
    """sum_{n<=k} X^n phi^(n)(0) / n!"""
    _check_order(phi, k)
    return math.fsum(x**n * phi.deriv(n, 0.0) / math.factorial(n) for n in range(k + 1))


def lagrange_remainder(phi, k, x, spec=None):
    """R^k phi(X) = (X^{k+1} / k!) int_0^1 (1-t)^k phi^(k+1)(tX) dt.

    For k = -1 this is phi itself.
    """
    if k == -1:
        return phi(x)
    _check_order(phi, k + 1)
    if x == 0.0:
        return 0.0
    spec = spec or _REMAINDER_SPEC
    res = integrate_finite(lambda t: (1.0 - t) ** k * phi.deriv(k + 1, t * x), 0.0, 1.0, spec)
    integral = res.require(spec, "Lagrange remainder")
    return x ** (k + 1) / math.factorial(k) * integral


def pw_apply(phi, w, k, x, spec=None):
    """(1 - w(X)) R^{k-1} phi(X) + w(X) R^k phi(X)."""
    if k < 0:
        raise DomainError(f"subtraction order must be >= 0, got {k}")
    wx = w(x)
    low = lagrange_remainder(phi, k - 1, x, spec) if wx != 1.0 else 0.0
    high = lagrange_remainder(phi, k, x, spec) if wx != 0.0 else 0.0
    return (1.0 - wx) * low + wx * high
