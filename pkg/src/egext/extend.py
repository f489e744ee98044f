"""Extension of singular radial distributions across their singular point.

UV side: the rational family T(X) = X^a / (lam2 X + m2)^b, extended with the
partition-of-unity test function in two equivalent forms,

  form A:  (-1)^k (k+1) d^{k+1}/dX^{k+1} [ X^{k+1}/(k+1)! T(X) L(X) ],
           L(X) = int_1^{mu2 g(X)} (1-t)^k / t^{k+1} dt,  g(X) = X^(alpha-1)
  form B:  (-1)^k (k+1) d^{k+1}/dX^{k+1} [ X^{k+1}/(k+1)!
           int_1^{mu2} (1-t)^k / t^{k+d+1} T(X/t) dt ],

the second being a Pauli-Villars subtraction for the D=2 propagator.

IR side: pure powers X^-(k+1), extended to a log-derivative plus a
delta-derivative at the origin with coefficient 2 (-1)^k H_k / k!.

Multi-index sums over R^d are collapsed to the single radial derivative;
the dimension enters through the radial measure X^(d-1) and the t-powers
of form B only.
"""

from dataclasses import dataclass
import math

from ._terms import RadialExpr, Term, rational_power_derivative
from .errors import DomainError
from .quadrature import QuadSpec, integrate_finite, integrate_semi_infinite
from .special import harmonic_eg
from .taylor import finite_difference, pw_apply
from .testfunc import BoundaryProfile

__all__ = [
    "RationalRadial",
    "PurePower",
    "ExtendedUV",
    "ExtendedIR",
    "DefiningPairing",
    "ir_singular_order",
    "uv_singular_order",
    "t_kernel_integral",
    "extend_uv_formA",
    "extend_uv_formB",
    "raw_pairing",
    "subtracted_pairing",
    "pair_extension_oracle",
    "extend_ir",
    "pair_ir",
    "eg_weight",
    "weight_scale",
    "pair_ir_oracle",
]

_T_SPEC = QuadSpec(abs_tol=1e-15, rel_tol=1e-13)
_PAIR_SPEC = QuadSpec(abs_tol=1e-9, rel_tol=1e-9)


@dataclass(frozen=True)
class RationalRadial:
    """T(X) = X^a / (lambda2 X + m2)^b."""

    a: int = 0
    b: int = 1
    lambda2: float = 1.0
    m2: float = 1.0

    def __post_init__(self):
        if not (isinstance(self.a, int) and self.a >= 0):
            raise DomainError(f"numerator power must be a non-negative integer, got {self.a!r}")
        if not (isinstance(self.b, int) and self.b >= 1):
            raise DomainError(f"denominator power must be a positive integer, got {self.b!r}")
        if not self.lambda2 > 0.0:
            raise DomainError(f"lambda2 must be positive, got {self.lambda2}")
        if not self.m2 >= 0.0:
            raise DomainError(f"m2 must be non-negative, got {self.m2}")

    def __call__(self, x):
        return x**self.a / (self.lambda2 * x + self.m2) ** self.b

    def derivative(self, n, x):
        return rational_power_derivative(n, self.a, self.b, self.lambda2, self.m2, x)

    @property
    def small_x_power(self):
        return self.a if self.m2 > 0.0 else self.a - self.b

    @property
    def large_x_power(self):
        return self.a - self.b


@dataclass(frozen=True)
class PurePower:
    """T(X) = X^-(k+1) on X > 0; homogeneous of degree -(k+1)."""

    k: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and self.k >= 0):
            raise DomainError(f"pure power order must be a non-negative integer, got {self.k!r}")

    def __call__(self, x):
        return x ** -(self.k + 1)


def _check_dim(d):
    if not (isinstance(d, int) and d >= 1):
        raise DomainError(f"radial dimension must be a positive integer, got {d!r}")


def ir_singular_order(T, d):
    """Scaling degree at the origin minus d."""
    _check_dim(d)
    if isinstance(T, PurePower):
        return T.k + 1 - d
    if isinstance(T, RationalRadial):
        return -T.small_x_power - d
    raise DomainError(f"no singular order defined for {type(T).__name__}")


def uv_singular_order(T, d):
    """Large-X power counting: the k for which int^inf X^(d-1) T / X^(k+1) is log-marginal."""
    _check_dim(d)
    if not isinstance(T, RationalRadial):
        raise DomainError("UV power counting is implemented for RationalRadial only")
    return d + T.large_x_power


def t_kernel_integral(k, power, upper):
    """int_1^upper (1-t)^k t^(-power) dt in closed form."""
    total = []
    for j in range(k + 1):
        c = math.comb(k, j) * (-1) ** j
        e = j - power + 1
        if e == 0:
            total.append(c * math.log(upper))
        else:
            total.append(c * (upper**e - 1.0) / e)
    return math.fsum(total)


@dataclass(frozen=True)
class ExtendedUV:
    """A closed-form UV extension; zero beyond ``support``."""

    evaluator: object
    k: int
    d: int
    mu2: float
    scheme: str
    alpha: float = 1.0
    support: float = math.inf

    def __call__(self, x):
        if x > self.support:
            return 0.0
        return self.evaluator(x)

    def integrate(self, spec=None):
        """<T~, 1> = int_0^support X^(d-1) T~(X) dX."""
        spec = spec or QuadSpec(abs_tol=1e-13, rel_tol=1e-11)
        d = self.d

        def integrand(x):
            return x ** (d - 1) * self.evaluator(x)

        if math.isinf(self.support):
            return integrate_semi_infinite(integrand, 0.0, spec, points=(1.0,))
        return integrate_finite(integrand, 0.0, self.support, spec, points=(1.0,))


def _check_uv_args(T, d, k, mu2):
    if not isinstance(T, RationalRadial):
        raise DomainError("UV extension needs a RationalRadial distribution")
    expected = uv_singular_order(T, d)
    if k != expected:
        raise DomainError(f"singular order k={k} inconsistent with power counting (k={expected})")
    if k < 0:
        raise DomainError("T is UV-integrable already (k < 0); nothing to extend")
    if not mu2 >= 1.0:
        raise DomainError(f"the scale must satisfy mu2 > 1 (mu2 = 1 is the trivial limit), got {mu2}")


def extend_uv_formA(T, d, k, mu2, alpha=1.0):
    """Form A of the UV extension; ``alpha=1`` selects the alpha -> 1 limit scheme.

    In the limit scheme the g'/g contributions vanish and the support is the
    whole half-line; otherwise the support ends at X_max = mu2^(1/(1-alpha)).
    """
    _check_uv_args(T, d, k, mu2)
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    limit = alpha == 1.0
    if not limit and not mu2 > 1.0:
        raise DomainError("a finite-alpha ramp needs mu2 > 1")

    if limit:
        l_terms = [Term(t_kernel_integral(k, k + 1, mu2))]
    else:
        # L(X) with log(mu2 g) = log mu2 + (alpha-1) log X
        sign = (-1) ** k
        l_terms = [Term(sign * math.log(mu2)), Term(sign * (alpha - 1.0), 0.0, 1)]
        for j in range(k):
            c = math.comb(k, j) * (-1) ** j / (j - k)
            l_terms.append(Term(c * mu2 ** (j - k), (alpha - 1.0) * (j - k)))
            l_terms.append(Term(-c))

    prefactor = 1.0 / math.factorial(k + 1)
    shift = k + 1 + T.a
    g_terms = [Term(t.coef * prefactor, t.xpow + shift, t.logpow, -T.b) for t in l_terms]
    expr = RadialExpr(g_terms, T.lambda2, T.m2).diff(k + 1).scaled((-1) ** k * (k + 1))
    support = math.inf if limit else mu2 ** (1.0 / (1.0 - alpha))
    scheme = "formA_limit" if limit else "formA"
    return ExtendedUV(expr, k, d, mu2, scheme, alpha, support)


def extend_uv_formB(T, d, k, mu2):
    """Form B of the UV extension (the t-rescaled distribution under the integral).

    X-derivatives are exact; the t-integral over [1, mu2] is done by
    adaptive quadrature.
    """
    _check_uv_args(T, d, k, mu2)
    a, b = T.a, T.b
    lam2, m2 = T.lambda2, T.m2
    tpow = b - a - k - d - 1
    sign = (-1) ** k / math.factorial(k)

    def evaluator(x):
        if mu2 == 1.0:
            return 0.0

        def integrand(t):
            return (1.0 - t) ** k * t**tpow * rational_power_derivative(k + 1, k + 1 + a, b, lam2, m2 * t, x)

        res = integrate_finite(integrand, 1.0, mu2, _T_SPEC)
        return sign * res.require(_T_SPEC, "form B t-integral")

    return ExtendedUV(evaluator, k, d, mu2, "formB")


# -- defining-relation oracle ------------------------------------------------

@dataclass(frozen=True)
class DefiningPairing:
    """Both sides of <T, f> = <T~, 1> for a concrete test function."""

    raw: float
    subtracted: float
    extension: float

    @property
    def discrepancy(self):
        return abs(self.subtracted - self.extension)


def raw_pairing(T, d, pu, spec=None):
    """<T, f_sup> = int_0^X_max X^(d-1) T(X) f_sup(X) dX."""
    spec = spec or _PAIR_SPEC
    res = integrate_finite(lambda x: x ** (d - 1) * T(x) * pu.f_sup(x), 0.0, pu.x_max, spec, points=(1.0,))
    return res.require(spec, "raw pairing")


def subtracted_pairing(T, d, k, pu, spec=None, upper="ramp", fd_step=1e-4):
    """Pair T with the Lagrange-remainder representation of f_sup.

    The kernel at X is  -(X^{k+1}/k!) int_1^U (1-t)^k f_sup^{(k+1)}(tX) dt,
    with f_sup derivatives by Richardson-extrapolated central differences.
    ``upper="ramp"`` cuts the t-integral at U = mu2 g(X); ``upper="support"``
    runs it to the true support end X_max / X, where the kernel reproduces
    f_sup exactly.
    """
    spec = spec or _PAIR_SPEC
    inner_spec = spec.tightened(100.0)
    if upper not in ("ramp", "support"):
        raise DomainError(f"upper must be 'ramp' or 'support', got {upper!r}")
    x_max = pu.x_max
    fact = math.factorial(k)

    def dnf(y):
        return finite_difference(pu.f_sup, k + 1, y, step=fd_step * max(1.0, y))

    def kernel(x):
        cap = pu.mu2 * pu.g(x) if upper == "ramp" else x_max / x
        lo = max(1.0, 1.0 / x)
        hi = min(cap, x_max / x)
        if not hi > lo:
            return 0.0
        res = integrate_finite(lambda t: (1.0 - t) ** k * dnf(t * x), lo, hi, inner_spec)
        return -(x ** (k + 1)) / fact * res.require(inner_spec, "subtracted kernel t-integral")

    points = sorted({1.0, pu.mu2 ** (-1.0 / pu.alpha)})
    res = integrate_finite(lambda x: x ** (d - 1) * T(x) * kernel(x), 0.0, x_max, spec, points=points)
    return res.require(spec, "subtracted pairing")


def pair_extension_oracle(T, d, k, pu, spec=None):
    """Direct pairings with the concrete f_sup next to <T~_formA, 1> at the same alpha."""
    ext = extend_uv_formA(T, d, k, pu.mu2, pu.alpha)
    return DefiningPairing(
        raw=raw_pairing(T, d, pu, spec),
        subtracted=subtracted_pairing(T, d, k, pu, spec),
        extension=ext.integrate().value,
    )


# -- infrared ----------------------------------------------------------------

@dataclass(frozen=True)
class ExtendedIR:
    """Extension of X^-(k+1): a log-derivative part plus a delta^(k) term.

    The delta term lives at the end point of the half-line, where it carries
    half weight: int_0^inf delta^(k)(X) phi(X) dX = (-1)^k phi^(k)(0) / 2.
    """

    k: int
    lambda2: float
    mu_tilde: float
    delta_coeff: float

    def log_part(self, x):
        """(-1)^k/k! d^{k+1}/dX^{k+1} log(mu_tilde X / lambda2), X > 0."""
        if not x > 0.0:
            raise DomainError("the log part is evaluable for X > 0 only")
        k = self.k
        return (-1) ** k / math.factorial(k) * (-1) ** k * math.factorial(k) / x ** (k + 1)


def extend_ir(T, mu_tilde=1.0, lambda2=1.0):
    if not isinstance(T, PurePower):
        raise DomainError("IR extension is implemented for PurePower distributions")
    if not mu_tilde > 0.0:
        raise DomainError(f"mu_tilde must be positive, got {mu_tilde}")
    if not lambda2 > 0.0:
        raise DomainError(f"lambda2 must be positive, got {lambda2}")
    k = T.k
    coeff = 2.0 * (-1) ** k * harmonic_eg(k) / math.factorial(k)
    return ExtendedIR(k, float(lambda2), float(mu_tilde), coeff)


def pair_ir(ext, phi, spec=None):
    """<T~, phi> = -(1/k!) int_0^inf log(mu_tilde X / lambda2) phi^(k+1)(X) dX + delta term."""
    spec = spec or QuadSpec(abs_tol=1e-13, rel_tol=1e-11)
    k = ext.k
    scale = ext.mu_tilde / ext.lambda2

    def integrand(x):
        return math.log(scale * x) * phi.deriv(k + 1, x)

    head = integrate_finite(integrand, 0.0, 1.0, spec).require(spec, "IR pairing on [0, 1]")
    tail = integrate_semi_infinite(integrand, 1.0, spec).require(spec, "IR pairing on [1, inf)")
    smooth = -(head + tail) / math.factorial(k)
    delta = ext.delta_coeff * 0.5 * (-1) ** k * phi.deriv(k, 0.0)
    return smooth + delta


def eg_weight(h):
    """w(X) = chi(X + 1, h): 1 at the origin with all derivatives flat, 0 for X >= h.

    This is 1 - chi(h - X + 1, h), the complement of the rising IR weight.
    """
    profile = BoundaryProfile(h)
    return lambda x: profile(x + 1.0)


def weight_scale(h):
    """mu_tilde = exp(int_0^h log X w'(X) dX) for the weight ``eg_weight(h)``."""
    profile = BoundaryProfile(h)
    spec = QuadSpec(abs_tol=1e-14, rel_tol=1e-12)
    res = integrate_finite(lambda x: math.log(x) * profile.derivative(x + 1.0), 0.0, h, spec)
    return math.exp(res.require(spec, "weight log-moment"))


def pair_ir_oracle(T, phi, weight, spec=None, support=None):
    """<T, P^w phi> = int_0^inf X^-(k+1) P^w phi(X) dX by nested quadrature."""
    spec = spec or QuadSpec(abs_tol=1e-10, rel_tol=1e-10)
    k = T.k

    def integrand(x):
        return T(x) * pw_apply(phi, weight, k, x)

    points = (support,) if support else ()
    head = integrate_finite(integrand, 0.0, 1.0, spec, points=[p for p in points if p < 1.0])
    tail = integrate_semi_infinite(integrand, 1.0, spec, points=[p for p in points if p > 1.0])
    return head.require(spec, "IR oracle on [0, 1]") + tail.require(spec, "IR oracle on [1, inf)")
