"""Verification suite: every identity the package is expected to reproduce.

Each check yields :class:`CheckRow` records; ``run_suite`` collects them,
optionally restricted by a substring filter on group or name.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
import itertools
import math

import numpy as np

from . import physics
from .extend import (
    PurePower,
    RationalRadial,
    extend_ir,
    extend_uv_formA,
    extend_uv_formB,
    pair_extension_oracle,
)
from .special import EULER_GAMMA, digamma_int
from .testfunc import PUTestFunction, chi

__all__ = ["CheckRow", "CHECKS", "run_suite", "binomial_harmonic"]

MU2_GRID = (1.5, 2.0, 4.0)
MASS_GRID = (0.5, 1.0, 2.0)
PAIRING_GRID = ((2.0, 0.3), (2.0, 0.5), (4.0, 0.7))
SERIES_GRID = (0.1, 0.5, 1.0, 2.0, 3.0)


@dataclass(frozen=True)
class CheckRow:
    criterion: int
    group: str
    name: str
    expected: float
    got: float
    error: float
    tolerance: float
    passed: bool

    def as_dict(self):
        return asdict(self)


def _row(criterion, group, name, expected, got, tol, rel=False):
    """Pass iff |got - expected| (relative when *rel*) is below *tol*."""
    err = abs(got - expected)
    if rel:
        err /= abs(expected)
    return CheckRow(criterion, group, name, float(expected), float(got), err, float(tol), bool(err < tol))


def _exact_row(criterion, group, name, expected, got, passed):
    return CheckRow(criterion, group, name, float(expected), float(got), abs(got - expected), 0.0, passed)


def binomial_harmonic(k):
    """sum_{p=1}^k (-1)^(p+1) C(k, p) / p, exactly."""
    return sum(Fraction((-1) ** (p + 1) * math.comb(k, p), p) for p in range(1, k + 1))


def check_tadpole_d2():
    for mu2 in MU2_GRID:
        values = []
        for m in MASS_GRID:
            r = physics.tadpole(2, mu2, m)
            values.append(r.quadrature_value)
            yield _row(1, "uv", f"tadpole_d2[mu2={mu2:g},m={m:g}]",
                       math.log(mu2) / (4 * math.pi), r.quadrature_value, 1e-8)
        yield _row(1, "uv", f"tadpole_d2_mass_independence[mu2={mu2:g}]",
                   0.0, max(values) - min(values), 1e-10)


def check_tadpole_d4():
    for mu2, m in itertools.product(MU2_GRID, MASS_GRID):
        r = physics.tadpole(4, mu2, m)
        expected = m * m / (16 * math.pi**2 * mu2) * (1 - mu2 + mu2 * math.log(mu2))
        yield _row(2, "uv", f"tadpole_d4[mu2={mu2:g},m={m:g}]", expected, r.quadrature_value, 1e-8)


def check_pauli_villars():
    for mu2 in MU2_GRID:
        values = []
        for m in MASS_GRID:
            r = physics.pv_check(mu2, m)
            values.append(r.pv_value)
            yield _row(3, "uv", f"pauli_villars[mu2={mu2:g},m={m:g}]",
                       math.log(mu2) / (4 * math.pi), r.pv_value, 1e-8)
        yield _row(3, "uv", f"pauli_villars_mass_independence[mu2={mu2:g}]",
                   0.0, max(values) - min(values), 1e-10)


def check_defining_relation():
    T = RationalRadial(0, 1, 1.0, 1.0)
    for mu2, alpha in PAIRING_GRID:
        pair = pair_extension_oracle(T, 1, 0, PUTestFunction(mu2, alpha))
        yield _row(4, "uv", f"defining_relation[mu2={mu2:g},alpha={alpha:g}]",
                   pair.extension, pair.subtracted, 1e-6)


def check_form_equivalence():
    T = RationalRadial(0, 1, 1.0, 1.0)
    for mu2 in MU2_GRID:
        a = extend_uv_formA(T, 1, 0, mu2).integrate().value
        b = extend_uv_formB(T, 1, 0, mu2).integrate().value
        yield _row(5, "uv", f"formA_vs_formB[mu2={mu2:g}]", a, b, 1e-8)


def check_mass_series():
    for z in SERIES_GRID:
        s = physics.mass_series_propagator(1.0, z, tol=1e-15, k_max=60)
        yield _row(6, "ir", f"mass_series_k0[mx={z:g}]", s.reference_k0, s.partial_sum, 1e-9, rel=True)
        # terms used against the 60-term budget; error is the overrun
        used = s.k_used + 1
        yield CheckRow(6, "ir", f"mass_series_terms[mx={z:g}]", 60.0, float(used),
                       float(max(0, used - 60)), 0.0, used <= 60)


def check_harmonic():
    for k in range(21):
        yield _row(7, "ir", f"harmonic_identity[k={k}]",
                   EULER_GAMMA + digamma_int(k + 1), float(binomial_harmonic(k)), 1e-12)
    for k in range(6):
        exact = 2 * (-1) ** k * binomial_harmonic(k) / math.factorial(k)
        yield _row(7, "ir", f"delta_coefficient[k={k}]",
                   float(exact), extend_ir(PurePower(k)).delta_coeff, 1e-14)


def check_partition_of_unity():
    for h in (0.25, 0.5, 1.0):
        grid = np.linspace(1.0 - h, 1.0, 101)[1:]
        worst = max(abs(chi(2.0 - x, h) + chi(x + h, h) - 1.0) for x in grid)
        yield _row(8, "pu", f"unity_partition[h={h:g}]", 0.0, worst, 1e-12)
        yield _row(8, "pu", f"chi_at_one[h={h:g}]", 1.0, chi(1.0, h), 1e-12)


def check_trivial_scale():
    for d in (2, 4):
        r = physics.tadpole(d, 1.0, 1.0)
        yield _exact_row(9, "uv", f"trivial_scale_tadpole_d{d}", 0.0, r.quadrature_value,
                         r.quadrature_value == 0.0 and r.analytic_value == 0.0)
    pv = physics.pv_check(1.0, 1.0)
    yield _exact_row(9, "uv", "trivial_scale_pauli_villars", 0.0, pv.pv_value, pv.pv_value == 0.0)


def check_mu_shift():
    values = {mu2: physics.tadpole(2, mu2, 1.0).quadrature_value for mu2 in MU2_GRID}
    for a, b in itertools.combinations(MU2_GRID, 2):
        yield _row(10, "uv", f"mu_shift[{a:g}->{b:g}]",
                   math.log(a / b) / (4 * math.pi), values[a] - values[b], 1e-10)


CHECKS = (
    check_tadpole_d2,
    check_tadpole_d4,
    check_pauli_villars,
    check_defining_relation,
    check_form_equivalence,
    check_mass_series,
    check_harmonic,
    check_partition_of_unity,
    check_trivial_scale,
    check_mu_shift,
)


def run_suite(pattern=None):
    """Run all checks; keep rows whose group or name contains *pattern*."""
    rows = []
    for check in CHECKS:
        for row in check():
            if pattern is None or pattern in row.group or pattern in row.name:
                rows.append(row)
    return rows
