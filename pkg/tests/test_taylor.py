import math

import pytest

from egext.errors import DomainError
from egext.taylor import SmoothProbe, finite_difference, lagrange_remainder, pw_apply, taylor_jet

EXP = SmoothProbe.exp_decay(1.0)


def test_jet_of_exponential():
    assert taylor_jet(EXP, 1, 0.5) == pytest.approx(0.5, abs=1e-15)
    assert taylor_jet(EXP, 3, 1.0) == pytest.approx(1 / 3, abs=1e-15)


def test_jet_of_constant():
    const = SmoothProbe.polynomial([2.5])
    for k in (0, 1, 2):
        assert taylor_jet(const, k, 3.7) == 2.5


def test_jet_order_overflow():
    with pytest.raises(DomainError):
        taylor_jet(SmoothProbe.exp_decay(1.0, max_order=3), 4, 1.0)


def test_remainder_values():
    assert lagrange_remainder(EXP, 0, 1.0) == pytest.approx(math.exp(-1) - 1, abs=1e-14)
    assert lagrange_remainder(EXP, 2, 0.0) == 0.0
    square = SmoothProbe.polynomial([0.0, 0.0, 1.0])
    assert lagrange_remainder(square, 1, 2.0) == pytest.approx(4.0, abs=1e-13)
    assert lagrange_remainder(EXP, -1, 0.7) == math.exp(-0.7)


@pytest.mark.parametrize("k", [0, 1, 2, 4])
@pytest.mark.parametrize("x", [0.1, 0.9, 3.0])
def test_remainder_plus_jet_recovers_function(k, x):
    assert taylor_jet(EXP, k, x) + lagrange_remainder(EXP, k, x) == pytest.approx(math.exp(-x), abs=1e-13)


@pytest.mark.parametrize("k", [0, 1, 3])
def test_remainder_is_order_k_plus_one(k):
    ratios = [abs(lagrange_remainder(EXP, k, 10.0**-j)) / 10.0 ** (-j * (k + 1)) for j in range(1, 7)]
    bound = 1 / math.factorial(k + 1)
    assert all(r <= bound * 1.0000001 for r in ratios)


def test_pw_limits():
    assert pw_apply(EXP, lambda x: 1.0, 0, 1.0) == pytest.approx(math.exp(-1) - 1, abs=1e-14)
    assert pw_apply(EXP, lambda x: 0.0, 0, 1.3) == math.exp(-1.3)
    for k in (1, 2):
        assert pw_apply(EXP, lambda x: 0.4, k, 0.0) == 0.0


def test_pw_blends_linearly():
    w = 0.3
    x = 0.8
    expected = (1 - w) * lagrange_remainder(EXP, 0, x) + w * lagrange_remainder(EXP, 1, x)
    assert pw_apply(EXP, lambda _: w, 1, x) == pytest.approx(expected, abs=1e-15)
    with pytest.raises(DomainError):
        pw_apply(EXP, lambda _: w, -1, x)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_finite_difference_accuracy(n):
    got = finite_difference(math.sin, n, 0.7)
    exact = [math.cos, lambda t: -math.sin(t), lambda t: -math.cos(t), math.sin][n - 1](0.7)
    assert got == pytest.approx(exact, abs=10.0 ** (-10 + 2 * n))


def test_probe_falls_back_to_differences():
    probe = SmoothProbe(math.exp, max_order=3)
    assert probe.deriv(2, 0.4) == pytest.approx(math.exp(0.4), rel=1e-7)
    with pytest.raises(DomainError):
        probe.deriv(4, 0.0)


def test_zero_probe():
    zero = SmoothProbe.zero()
    assert lagrange_remainder(zero, 3, 2.0) == 0.0
