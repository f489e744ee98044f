"""Acceptance gate: one test and one summary line per criterion.

Each criterion runs the corresponding rows of the verification suite, whose
expected values are closed forms, exact rational sums or an independent
special-function route, at the tolerances listed in the row.
"""

import pytest

from egext.verify import CHECKS

TITLES = {
    1: "D=2 tadpole equals log(mu2)/4pi, mass independent",
    2: "D=4 tadpole equals its closed form",
    3: "Pauli-Villars subtraction equals the extension",
    4: "subtracted pairing with the concrete ramp equals the integrated form A",
    5: "form A and form B integrate to the same value",
    6: "mass series resums to K0/2pi",
    7: "harmonic identity and delta coefficients",
    8: "partition of unity",
    9: "trivial scale gives exact zeros",
    10: "mu shift is log(mu1^2/mu2^2)/4pi",
}


@pytest.mark.parametrize("criterion", sorted(TITLES))
def test_criterion(criterion, acceptance_report):
    rows = [row for row in CHECKS[criterion - 1]() if row.criterion == criterion]
    assert rows
    failed = [row for row in rows if not row.passed]
    worst = max(rows, key=lambda r: r.error / r.tolerance if r.tolerance else r.error)
    status = "PASS" if not failed else "FAIL"
    acceptance_report.append(
        f"criterion {criterion}: {status} {TITLES[criterion]} "
        f"({len(rows) - len(failed)}/{len(rows)} rows; worst {worst.name}: "
        f"error {worst.error:.3g}, tol {worst.tolerance:g})"
    )
    assert not failed, "\n".join(
        f"{r.name}: expected {r.expected!r}, got {r.got!r}, tol {r.tolerance:g}" for r in failed
    )
