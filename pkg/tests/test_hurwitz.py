import math
import warnings

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_integrals import quadrature
from hurwitz_integrals.errors import DomainError, PoleError
from hurwitz_integrals.hurwitz import (
    HurwitzBackend,
    balanced_A,
    digamma_limit_check,
    hurwitz_zeta,
    hurwitz_zeta_prime,
    negapolygamma,
    negapolygamma_at_zero,
)
from hurwitz_integrals.special_core import CONSTANTS, bernoulli_polynomial, log_gamma, zeta_prime_neg

EM = HurwitzBackend.EULER_MACLAURIN
HQ = HurwitzBackend.HERMITE_QUADRATURE
Z_GRID = (-5, -2.5, -1, -0.5, 0.5, 2, 3, 7.5)
Q_GRID = (0.25, 0.5, 1, 2, 5)

mp.mp.dps = 30


def test_examples():
    assert hurwitz_zeta(2, 1) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    brute = math.fsum((n + 0.5) ** -3 for n in range(100000))
    brute += 0.5 * (100000.5) ** -2  # integral tail
    assert abs(hurwitz_zeta(3, 0.5) - brute) < 1e-12
    assert hurwitz_zeta(3, 0.5) == pytest.approx(7 * 1.2020569031595942, rel=1e-15)


@pytest.mark.parametrize("backend", [EM, HQ])
def test_bernoulli_values(backend):
    for m in range(9):
        for q in (0.25, 0.5, 1, 2):
            ref = -bernoulli_polynomial(m + 1, q) / (m + 1)
            assert abs(hurwitz_zeta(-m, q, backend) - ref) <= 1e-12 * (1 + abs(ref))


def test_errors():
    for backend in (EM, HQ):
        with pytest.raises(PoleError):
            hurwitz_zeta(1, 1, backend)
        with pytest.raises(PoleError):
            hurwitz_zeta(1 + 1e-7, 1, backend)
        with pytest.raises(DomainError):
            hurwitz_zeta(2, 0, backend)
        with pytest.raises(DomainError):
            hurwitz_zeta(2, -1, backend)
    with pytest.raises(PoleError):
        hurwitz_zeta_prime(1, 2)
    assert issubclass(PoleError, DomainError)


@pytest.mark.parametrize("z", Z_GRID)
def test_em_against_mpmath(z):
    for q in Q_GRID:
        assert hurwitz_zeta(z, q) == pytest.approx(float(mp.zeta(z, q)), rel=1e-14)
        assert hurwitz_zeta_prime(z, q) == pytest.approx(float(mp.zeta(z, q, 1)), rel=1e-14)


@pytest.mark.parametrize("z", Z_GRID)
def test_backend_agreement(z):
    for q in Q_GRID:
        a = hurwitz_zeta(z, q, EM)
        b = hurwitz_zeta(z, q, HQ)
        assert abs(a - b) <= 1e-10 * (1 + abs(a))


@pytest.mark.parametrize("z", Z_GRID)
def test_recurrence(z):
    for q in Q_GRID:
        lhs = hurwitz_zeta(z, q)
        rhs = hurwitz_zeta(z, q + 1) + q ** -z
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)


@pytest.mark.parametrize("z", Z_GRID)
def test_derivative_consistency(z):
    h = 1e-3
    for q in Q_GRID:
        f = [hurwitz_zeta(z + i * h, q) for i in (-2, -1, 1, 2)]
        fd = (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * h)
        for backend in (EM, HQ):
            d = hurwitz_zeta_prime(z, q, backend)
            assert abs(d - fd) <= 1e-7 * (1 + abs(d))


def test_derivative_backends_agree():
    for z in Z_GRID:
        for q in Q_GRID:
            a = hurwitz_zeta_prime(z, q, EM)
            b = hurwitz_zeta_prime(z, q, HQ)
            assert abs(a - b) <= 1e-10 * (1 + abs(a))


def test_hermite_derivative_warns_outside_validated_range():
    with pytest.warns(RuntimeWarning):
        hurwitz_zeta_prime(11, 1.0, HQ)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        hurwitz_zeta_prime(10, 1.0, HQ)


def test_lerch_identity():
    for i in range(1, 51):
        q = 5 * i / 50
        d = hurwitz_zeta_prime(0, q)
        assert abs(d - (log_gamma(q) - CONSTANTS.ln_sqrt_2pi)) < 1e-9


def test_derivative_special_values():
    zp, ln2, G = CONSTANTS.zeta_prime_minus1, CONSTANTS.ln2, CONSTANTS.catalan
    for backend in (EM, HQ):
        assert hurwitz_zeta_prime(-1, 0.5, backend) == pytest.approx(-zp / 2 - ln2 / 24, abs=1e-13)
        assert hurwitz_zeta_prime(-1, 0.25, backend) == pytest.approx(-zp / 8 + G / (4 * math.pi), abs=1e-13)


class TestBalanced:
    def test_A(self):
        for q in (0.3, 1.0, 2.2):
            assert balanced_A(1, q) == pytest.approx(log_gamma(q) - CONSTANTS.ln_sqrt_2pi, rel=1e-13)
            assert balanced_A(2, q) == pytest.approx(2 * hurwitz_zeta_prime(-1, q), rel=1e-15)
        assert balanced_A(1, 1) == pytest.approx(-CONSTANTS.ln_sqrt_2pi, rel=1e-15)
        with pytest.raises(DomainError):
            balanced_A(0, 1.0)

    def test_negapolygamma_examples(self):
        assert negapolygamma(1, 0.7) == pytest.approx(log_gamma(0.7) - CONSTANTS.ln_sqrt_2pi, rel=1e-14)
        assert negapolygamma(2, 1) == pytest.approx(CONSTANTS.zeta_prime_minus1 - 1 / 12, rel=1e-14)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_against_mpmath(self, m):
        for q in (0.1, 0.5, 1.0, 3.0, 7.5):
            ref = (m * mp.zeta(1 - m, q, 1) - mp.harmonic(m - 1) * mp.bernpoly(m, q)) / mp.factorial(m)
            assert negapolygamma(m, q) == pytest.approx(float(ref), rel=1e-13, abs=1e-16)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_zero_mean_on_unit_interval(self, m):
        r = quadrature.integrate_interval(lambda q: negapolygamma(m, q), 0.0, 1.0, rel_tol=1e-12, abs_tol=1e-13,
                                          breakpoints=[2.0 ** -i for i in range(1, 20)])
        assert abs(r.value) <= 1e-8

    @pytest.mark.parametrize("m", range(1, 7))
    def test_endpoints(self, m):
        assert abs(negapolygamma(m, 0) - negapolygamma(m, 1)) <= 1e-8
        if m >= 2:
            # a genuine right limit for m >= 2
            assert abs(negapolygamma(m, 1e-12) - negapolygamma_at_zero(m - 1)) <= 1e-9

    def test_at_zero_examples(self):
        assert negapolygamma_at_zero(0) == pytest.approx(-CONSTANTS.ln_sqrt_2pi, rel=1e-15)
        assert negapolygamma_at_zero(1) == pytest.approx(CONSTANTS.zeta_prime_minus1 - 1 / 12, rel=1e-14)
        assert negapolygamma_at_zero(2) == pytest.approx(zeta_prime_neg(2) / 2, rel=1e-15)
        assert negapolygamma_at_zero(2) == pytest.approx(-1.2020569031595942 / (8 * math.pi ** 2), rel=1e-14)


def test_digamma_limit():
    g = CONSTANTS.euler_gamma
    assert abs(digamma_limit_check(1) + g) < 1e-8
    assert abs(digamma_limit_check(2) - (1 - g)) < 1e-8
    assert abs(digamma_limit_check(0.5) - (-g - 2 * CONSTANTS.ln2)) < 1e-8


@settings(max_examples=40, deadline=None)
@given(st.floats(-8, 8).filter(lambda z: abs(z - 1) > 1e-3), st.floats(0.05, 20))
def test_em_matches_mpmath_property(z, q):
    ref = float(mp.zeta(z, q))
    assert abs(hurwitz_zeta(z, q) - ref) <= 1e-13 * max(abs(ref), 1e-3)
