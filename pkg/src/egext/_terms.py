"""Closed-form expressions  sum_i c_i X^p_i (log X)^e_i D^n_i,  D = lam2*X + c.

The family is closed under d/dX.  Purely rational terms (e = 0, integer
p >= 0) are rewritten in powers of D so that cancellations such as
1/D - lam2*X/D^2 = c/D^2 happen in the coefficients instead of at
evaluation time, where they would cost ~X*eps relative accuracy.
"""

from collections import defaultdict
from dataclasses import dataclass
import math

__all__ = ["Term", "RadialExpr", "rational_power_derivative"]


@dataclass(frozen=True)
class Term:
    coef: float
    xpow: float = 0.0
    logpow: int = 0
    dpow: int = 0


def _is_natural(p):
    return p >= 0 and float(p).is_integer()


def _falling(j, n):
    out = 1
    for i in range(n):
        out *= j - i
    return out


def rational_power_derivative(n, p, b, lam2, c, x):
    """d^n/dX^n [X^p (lam2 X + c)^(-b)] for integer p >= 0, evaluated at x."""
    d = lam2 * x + c
    total = []
    for i in range(p + 1):
        ff = _falling(i - b, n)
        if ff == 0:
            continue
        coef = math.comb(p, i) * (-c) ** (p - i) * ff
        total.append(coef * d ** (i - b - n))
    return lam2 ** (n - p) * math.fsum(total)


class RadialExpr:
    def __init__(self, terms, lam2, c):
        self.lam2 = float(lam2)
        self.c = float(c)
        self.terms = self._canonical(terms)

    def _canonical(self, terms):
        acc = defaultdict(list)
        for t in terms:
            if t.coef == 0.0:
                continue
            if t.logpow == 0 and _is_natural(t.xpow) and self.lam2 != 0.0:
                p = int(t.xpow)
                scale = t.coef / self.lam2**p
                for i in range(p + 1):
                    acc[(0.0, 0, t.dpow + i)].append(scale * math.comb(p, i) * (-self.c) ** (p - i))
            else:
                acc[(round(t.xpow, 12), t.logpow, t.dpow)].append(t.coef)
        out = []
        for (xpow, logpow, dpow), coefs in sorted(acc.items()):
            coef = math.fsum(coefs)
            if coef != 0.0:
                out.append(Term(coef, xpow, logpow, dpow))
        return tuple(out)

    def scaled(self, factor):
        return RadialExpr([Term(t.coef * factor, t.xpow, t.logpow, t.dpow) for t in self.terms],
                          self.lam2, self.c)

    def diff(self, order=1):
        expr = self
        for _ in range(order):
            new = []
            for t in expr.terms:
                if t.xpow != 0.0:
                    new.append(Term(t.coef * t.xpow, t.xpow - 1.0, t.logpow, t.dpow))
                if t.logpow:
                    new.append(Term(t.coef * t.logpow, t.xpow - 1.0, t.logpow - 1, t.dpow))
                if t.dpow:
                    new.append(Term(t.coef * t.dpow * expr.lam2, t.xpow, t.logpow, t.dpow - 1))
            expr = RadialExpr(new, expr.lam2, expr.c)
        return expr

    def is_zero(self):
        return not self.terms

    def __call__(self, x):
        x = float(x)
        d = self.lam2 * x + self.c
        if x > 0.0:
            lx = math.log(x)
            return math.fsum(t.coef * x**t.xpow * lx**t.logpow * d**t.dpow for t in self.terms)
        if x < 0.0:
            raise ValueError("radial expressions are defined for X >= 0")
        regular = []
        singular = []
        for t in self.terms:
            if t.xpow > 0.0:
                continue
            if t.xpow == 0.0 and t.logpow == 0:
                regular.append(t.coef * d**t.dpow)
            else:
                singular.append(t)
        if singular:
            worst = min(singular, key=lambda t: (t.xpow, -t.logpow))
            sign = math.copysign(1.0, worst.coef) * (-1.0 if worst.logpow % 2 else 1.0)
            return sign * math.inf
        return math.fsum(regular)

    def __repr__(self):
        parts = [f"{t.coef:+.6g}*X^{t.xpow:g}*log^{t.logpow}*D^{t.dpow}" for t in self.terms]
        return f"RadialExpr({' '.join(parts) or '0'}; D={self.lam2:g}X+{self.c:g})"
