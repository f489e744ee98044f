import math

import pytest
from scipy import integrate

from egext.errors import DomainError
from egext.extend import (
    PurePower,
    RationalRadial,
    eg_weight,
    extend_ir,
    extend_uv_formA,
    extend_uv_formB,
    ir_singular_order,
    pair_extension_oracle,
    pair_ir,
    pair_ir_oracle,
    raw_pairing,
    subtracted_pairing,
    t_kernel_integral,
    uv_singular_order,
    weight_scale,
)
from egext.physics import ft_ir_term
from egext.special import EULER_GAMMA
from egext.taylor import SmoothProbe
from egext.testfunc import PUTestFunction

PROP = RationalRadial(0, 1, 1.0, 1.0)
EXP = SmoothProbe.exp_decay(1.0)


# -- power counting ----------------------------------------------------------

def test_ir_orders():
    assert ir_singular_order(PurePower(0), 1) == 0
    assert ir_singular_order(PurePower(2), 1) == 2
    assert ir_singular_order(PROP, 1) == -1
    assert ir_singular_order(RationalRadial(0, 1, 1.0, 0.0), 1) == 0


def test_ir_order_agrees_with_scaling_probe():
    # lam^s T(lam X) -> 0 as lam -> 0 exactly when s exceeds the scaling degree k + 1
    T = PurePower(2)
    for s, vanishes in ((3.5, True), (3.0, False), (2.5, False)):
        tail = [lam**s * T(lam * 0.7) for lam in (1e-4, 1e-6, 1e-8)]
        assert (abs(tail[-1]) < 1e-3) is vanishes


def test_uv_orders():
    assert uv_singular_order(PROP, 1) == 0
    assert uv_singular_order(PROP, 2) == 1
    assert uv_singular_order(RationalRadial(1, 2), 1) == 0
    with pytest.raises(DomainError):
        uv_singular_order(PurePower(1), 1)


def test_uv_order_zero_is_log_marginal():
    # int_0^R X^a/(X+1)^b dX with a - b = -1 grows like log R
    T = RationalRadial(1, 2)
    vals = [integrate.quad(T, 0, 10.0**j, limit=200)[0] for j in (3, 4, 5)]
    assert vals[2] - vals[1] == pytest.approx(math.log(10), rel=1e-3)
    assert vals[1] - vals[0] == pytest.approx(math.log(10), rel=1e-2)


@pytest.mark.parametrize("k", [0, 1, 3])
@pytest.mark.parametrize("power", [1, 2, 4, 6])
def test_t_kernel_integral(k, power):
    expected = integrate.quad(lambda t: (1 - t) ** k * t ** (-power), 1.0, 3.0, epsabs=1e-14)[0]
    assert t_kernel_integral(k, power, 3.0) == pytest.approx(expected, abs=1e-12)


# -- UV forms ----------------------------------------------------------------

@pytest.mark.parametrize("x", [0.0, 0.3, 1.0, 7.0, 1e3])
def test_form_a_limit_closed_form_d1(x):
    ext = extend_uv_formA(PROP, 1, 0, 2.0)
    assert ext(x) == pytest.approx(math.log(2) / (x + 1) ** 2, rel=1e-14)


@pytest.mark.parametrize("x", [0.0, 0.3, 1.0, 7.0])
def test_form_a_limit_closed_form_d2(x):
    mu2 = 2.0
    ext = extend_uv_formA(PROP, 2, 1, mu2)
    expected = 2 / mu2 * (1 - mu2 + mu2 * math.log(mu2)) / (x + 1) ** 3
    assert ext(x) == pytest.approx(expected, rel=1e-13)
    assert ext(0.0) == pytest.approx(0.386294, abs=1e-6)


@pytest.mark.parametrize("mu2", [1.5, 2.0, 4.0])
@pytest.mark.parametrize("x", [0.0, 0.5, 3.0, 50.0])
def test_form_b_is_pauli_villars(mu2, x):
    ext = extend_uv_formB(PROP, 1, 0, mu2)
    assert ext(x) == pytest.approx(1 / (x + 1) - 1 / (x + mu2), rel=1e-12)


def test_trivial_scale_gives_zero():
    for d, k in ((1, 0), (2, 1)):
        assert extend_uv_formA(PROP, d, k, 1.0)(0.4) == 0.0
        assert extend_uv_formB(PROP, d, k, 1.0)(0.4) == 0.0


@pytest.mark.parametrize("mu2", [1.5, 2.0, 4.0])
def test_form_integrals_agree(mu2):
    a = extend_uv_formA(PROP, 1, 0, mu2).integrate().value
    b = extend_uv_formB(PROP, 1, 0, mu2).integrate().value
    assert a == pytest.approx(math.log(mu2), abs=1e-10)
    assert b == pytest.approx(a, abs=1e-8)


def test_form_integrals_agree_d2():
    a = extend_uv_formA(PROP, 2, 1, 2.0).integrate().value
    b = extend_uv_formB(PROP, 2, 1, 2.0).integrate().value
    assert b == pytest.approx(a, abs=1e-10)


def test_finite_alpha_has_compact_support():
    ext = extend_uv_formA(PROP, 1, 0, 2.0, alpha=0.5)
    assert ext.support == pytest.approx(4.0)
    assert ext(4.5) == 0.0
    # a total derivative whose primitive vanishes at both ends of the support
    assert ext.integrate().value == pytest.approx(0.0, abs=1e-12)


def test_uv_argument_checks():
    with pytest.raises(DomainError):
        extend_uv_formA(PROP, 1, 1, 2.0)
    with pytest.raises(DomainError):
        extend_uv_formA(PROP, 1, 0, 0.5)
    with pytest.raises(DomainError):
        extend_uv_formA(PROP, 1, 0, 2.0, alpha=1.5)
    with pytest.raises(DomainError):
        extend_uv_formB(PurePower(0), 1, 0, 2.0)


# -- defining relation ---------------------------------------------------------

@pytest.mark.slow
@pytest.mark.parametrize("mu2, alpha", [(2.0, 0.5), (4.0, 0.7)])
def test_remainder_to_support_reproduces_raw_pairing(mu2, alpha):
    # the Lagrange-remainder kernel integrated to the support end is f_sup itself
    pu = PUTestFunction(mu2, alpha)
    raw = raw_pairing(PROP, 1, pu)
    sub = subtracted_pairing(PROP, 1, 0, pu, upper="support")
    assert sub == pytest.approx(raw, abs=1e-8)


def test_vanishing_ramp_pairing():
    pair = pair_extension_oracle(PROP, 1, 0, PUTestFunction(1 + 1e-6, 0.5))
    assert abs(pair.subtracted) < 1e-5
    assert abs(pair.extension) < 1e-5


def test_subtracted_pairing_rejects_unknown_cutoff():
    with pytest.raises(DomainError):
        subtracted_pairing(PROP, 1, 0, PUTestFunction(2.0, 0.5), upper="nowhere")


# -- IR ------------------------------------------------------------------------

def test_ir_delta_coefficients():
    assert extend_ir(PurePower(0)).delta_coeff == 0.0
    assert extend_ir(PurePower(1)).delta_coeff == -2.0
    assert extend_ir(PurePower(2)).delta_coeff == 1.5


@pytest.mark.parametrize("k", [0, 1, 3])
def test_ir_log_part(k):
    ext = extend_ir(PurePower(k), mu_tilde=3.0, lambda2=2.0)
    assert ext.log_part(0.5) == pytest.approx(0.5 ** -(k + 1), rel=1e-15)
    with pytest.raises(DomainError):
        ext.log_part(0.0)


def test_ir_pairing_k0():
    assert pair_ir(extend_ir(PurePower(0)), EXP) == pytest.approx(-EULER_GAMMA, abs=1e-12)
    assert pair_ir(extend_ir(PurePower(0)), SmoothProbe.zero()) == 0.0


def test_ir_pairing_k1_half_weight_delta():
    # smooth part -int log X e^-X = gamma; end-point delta carries half weight
    assert pair_ir(extend_ir(PurePower(1)), EXP) == pytest.approx(EULER_GAMMA - 1.0, abs=1e-12)


def test_ir_scale_shift():
    k = 2
    base = pair_ir(extend_ir(PurePower(k)), EXP)
    shifted = pair_ir(extend_ir(PurePower(k), mu_tilde=math.e), EXP)
    # log(e X) = 1 + log X adds -(1/k!) int phi^(k+1) = phi^(k)(0)/k!
    assert shifted - base == pytest.approx(EXP.deriv(k, 0.0) / math.factorial(k), abs=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("a", [0.5, 2.0])
def test_ir_pairing_matches_gaussian_smeared_fourier_terms(k, a):
    # e^{-X/4a} is the transform of the unit-mass Gaussian (a/pi) e^{-a x^2} in two dimensions
    phi = SmoothProbe.exp_decay(1 / (4 * a))
    lhs = pair_ir(extend_ir(PurePower(k)), phi) / (4 * math.pi)
    rhs = integrate.quad(lambda x: 2 * a * x * math.exp(-a * x * x) * ft_ir_term(k, 1.0, x),
                         0, math.inf, epsabs=1e-14, epsrel=1e-12, limit=400)[0]
    assert lhs == pytest.approx(rhs, abs=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("h", [0.5, 1.0])
def test_ir_pairing_matches_weighted_subtraction(k, h):
    lhs = pair_ir(extend_ir(PurePower(k), mu_tilde=weight_scale(h)), EXP)
    rhs = pair_ir_oracle(PurePower(k), EXP, eg_weight(h), support=h)
    assert lhs == pytest.approx(rhs, abs=1e-10)


def test_ir_argument_checks():
    with pytest.raises(DomainError):
        extend_ir(PROP)
    with pytest.raises(DomainError):
        extend_ir(PurePower(1), mu_tilde=0.0)
    with pytest.raises(DomainError):
        PurePower(-1)
