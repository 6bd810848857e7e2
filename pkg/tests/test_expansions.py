import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hurwitz_integrals.errors import DomainError
from hurwitz_integrals.expansions import (
    Basis,
    Parity,
    binomial_collapse_identity,
    evaluation_sums,
    ode_residual,
    orthogonality_sum,
    taylor_coeff_cos,
    taylor_coeff_sin,
    to_one_plus_t2_basis,
    trig_poly_in_1pt2,
    trig_poly_in_t,
)
from hurwitz_integrals.special_core import binomial

SIN, COS = Parity.SINE_LIKE, Parity.COSINE_LIKE


class TestTaylor:
    def test_sin_examples(self):
        assert taylor_coeff_sin(Fraction(7, 3), 0) == Fraction(7, 3)
        assert taylor_coeff_sin(0.75, 0) == 0.75
        assert all(taylor_coeff_sin(-3, k) == 0 for k in range(2, 10))
        assert taylor_coeff_sin(2, 1) == -4

    def test_cos_examples(self):
        assert taylor_coeff_cos(0.3, 0) == 1
        assert all(taylor_coeff_cos(-4, k) == 0 for k in range(3, 10))
        assert taylor_coeff_cos(1, 1) == -1

    @pytest.mark.parametrize("z", [2, 0.5, -1.5, 3.25])
    def test_series_matches_function(self, z):
        # the series converges for |t| < 1
        t = 0.3
        s = math.fsum(float(taylor_coeff_sin(z, k)) * t ** (2 * k + 1) for k in range(60))
        c = math.fsum(float(taylor_coeff_cos(z, k)) * t ** (2 * k) for k in range(60))
        scale = (1 + t * t) ** (-z / 2)
        assert s == pytest.approx(math.sin(z * math.atan(t)) * scale, rel=1e-14)
        assert c == pytest.approx(math.cos(z * math.atan(t)) * scale, rel=1e-14)

    def test_polyfit_cross_check(self):
        # least-squares fit of sin(2 atan t)/(1+t^2) on a small interval
        t = np.linspace(-0.05, 0.05, 201)
        fit = np.polynomial.polynomial.polyfit(t, np.sin(2 * np.arctan(t)) / (1 + t * t), 5)
        assert fit[3] == pytest.approx(-4, rel=1e-5)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            taylor_coeff_sin(1, -1)
        with pytest.raises(DomainError):
            taylor_coeff_cos(1, -1)


class TestTrigPolynomials:
    def test_examples(self):
        assert list(trig_poly_in_t(1, SIN).coeffs) == [1]
        assert list(trig_poly_in_t(2, COS).coeffs) == [1, -1]
        assert list(trig_poly_in_t(5, SIN).coeffs) == [5, -10, 1]
        assert list(trig_poly_in_1pt2(1, SIN).coeffs) == [1]

    def test_cos2_both_bases(self):
        t = 0.3
        exact = math.cos(2 * math.atan(t))
        assert trig_poly_in_t(2, COS)(t) == pytest.approx(exact, abs=1e-14)
        assert trig_poly_in_1pt2(2, COS)(t) == pytest.approx(exact, abs=1e-14)

    @pytest.mark.parametrize("m", range(1, 21))
    def test_coefficient_counts(self, m):
        assert len(trig_poly_in_t(m, SIN).coeffs) == (m - 1) // 2 + 1
        assert len(trig_poly_in_t(m, COS).coeffs) == m // 2 + 1
        assert trig_poly_in_t(m, SIN).basis is Basis.POWERS_OF_T
        assert trig_poly_in_1pt2(m, COS).basis is Basis.POWERS_OF_ONE_PLUS_T2

    @pytest.mark.parametrize("m", range(1, 21))
    def test_evaluation(self, m):
        for t in (-0.9, -0.3, 0.4, 2.0, 10.0):
            for parity, f in ((SIN, math.sin), (COS, math.cos)):
                exact = f(m * math.atan(t))
                for poly in (trig_poly_in_t(m, parity), trig_poly_in_1pt2(m, parity)):
                    assert abs(poly(t) - exact) <= 1e-12 * max(abs(exact), 1e-300) + 1e-15

    @pytest.mark.parametrize("m", range(1, 21))
    def test_basis_conversion_exact(self, m):
        for parity in (SIN, COS):
            assert to_one_plus_t2_basis(trig_poly_in_t(m, parity)) == trig_poly_in_1pt2(m, parity)

    def test_all_coefficients_are_exact(self):
        for m in range(1, 21):
            for parity in (SIN, COS):
                assert all(isinstance(c, (int, Fraction)) for c in trig_poly_in_1pt2(m, parity).coeffs)

    def test_bad_order(self):
        for bad in (0, -2, 1.5):
            with pytest.raises(DomainError):
                trig_poly_in_t(bad, SIN)

    @given(st.integers(1, 30), st.fractions(min_value=-5, max_value=5, max_denominator=20))
    def test_pythagorean(self, m, t):
        # (poly_s^2 + poly_c^2) equals (1+t^2)^m exactly
        s = trig_poly_in_t(m, SIN).polynomial(t)
        c = trig_poly_in_t(m, COS).polynomial(t)
        assert s * s + c * c == (1 + t * t) ** m


class TestIdentities:
    def test_collapse_examples(self):
        assert binomial_collapse_identity(1, 0) == (1, 1)
        assert binomial_collapse_identity(5, 1) == (12, 12)
        lhs, rhs = binomial_collapse_identity(20, 4)
        assert lhs == rhs

    def test_collapse_all(self):
        for m in range(1, 41):
            for j in range((m - 1) // 2 + 1):
                lhs, rhs = binomial_collapse_identity(m, j)
                assert lhs == rhs, (m, j)

    def test_collapse_range(self):
        with pytest.raises(DomainError):
            binomial_collapse_identity(5, 3)
        with pytest.raises(DomainError):
            binomial_collapse_identity(5, -1)

    def test_orthogonality_examples(self):
        assert orthogonality_sum(3, 3) == -3
        assert orthogonality_sum(4, 2) == 0
        assert orthogonality_sum(6, 6) == 6

    def test_orthogonality_all(self):
        for k in range(1, 26):
            for p in range(1, k + 1):
                assert orthogonality_sum(k, p) == ((-1) ** k * k if p == k else 0), (k, p)

    def test_evaluation_sums(self):
        assert evaluation_sums(1) == (2, 2)
        assert evaluation_sums(3) == (32, 60)
        assert evaluation_sums(10) == (2 ** 19, 10 * binomial(20, 10))
        for k in range(1, 26):
            assert evaluation_sums(k) == (2 ** (2 * k - 1), k * binomial(2 * k, k))


class TestOde:
    def test_examples(self):
        assert abs(ode_residual(2, 0.1)) < 1e-20
        assert ode_residual(-3, 0.5) == 0
        assert ode_residual(Fraction(-3), Fraction(1, 2)) == 0
        assert abs(ode_residual(1.5, 0.9, n_terms=200)) < 1e-6

    def test_tail_bound(self):
        # truncation error shrinks like K^2 |t|^(2K)
        for n in (20, 40, 80):
            assert abs(ode_residual(0.7, 0.8, n_terms=n)) < 10 * n * n * 0.8 ** (2 * n)

    def test_domain(self):
        with pytest.raises(DomainError):
            ode_residual(1, 1.0)
        with pytest.raises(DomainError):
            ode_residual(1, 0.5, n_terms=0)
