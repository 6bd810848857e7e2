import math
import os
import subprocess
import sys

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_integrals import _quadcore_py, quadrature
from hurwitz_integrals.errors import AccuracyError, DomainError
from hurwitz_integrals.quadrature import (
    IntegrandSpec,
    KernelKind,
    integrate,
    integrate_interval,
    integrate_semi_infinite,
    moment_bose,
    moment_gamma_zeta,
)
from hurwitz_integrals.special_core import riemann_zeta

BOSE, FERMI, CSCH = KernelKind.BOSE_MINUS, KernelKind.FERMI_PLUS, KernelKind.CSCH
MOMENT_SET = [(k, q) for k in range(7) for q in (0.5, 1.0, 2.0, 4.0)]

mp.mp.dps = 30


def _mp_moment(k, q):
    # independent: Gamma(2k+2) zeta(2k+2) / (2 pi q)^(2k+2)
    n = 2 * k + 2
    return float(mp.gamma(n) * mp.zeta(n) / (2 * mp.pi * q) ** n)


class TestMoments:
    def test_examples(self):
        assert integrate(IntegrandSpec.power(3), BOSE, 1).value == pytest.approx(1 / 240, rel=1e-12)
        assert integrate(IntegrandSpec.power(1), BOSE, 1).value == pytest.approx(1 / 24, rel=1e-12)
        ref = math.gamma(3) * riemann_zeta(3) / (2 * math.pi) ** 3
        assert integrate(IntegrandSpec.power(2), BOSE, 1).value == pytest.approx(ref, rel=1e-12)

    def test_moment_bose_examples(self):
        assert moment_bose(0, 1) == pytest.approx(1 / 24, rel=1e-15)
        assert moment_bose(1, 1) == pytest.approx(1 / 240, rel=1e-15)
        assert moment_bose(0, 2) == pytest.approx(1 / 96, rel=1e-15)
        with pytest.raises(DomainError):
            moment_bose(0, 0)
        with pytest.raises(DomainError):
            moment_bose(-1, 1)

    def test_moment_gamma_zeta_examples(self):
        assert moment_gamma_zeta(2, 2 * math.pi) == pytest.approx(1 / 24, rel=1e-15)
        assert moment_gamma_zeta(4, 2 * math.pi) == pytest.approx(1 / 240, rel=1e-15)
        assert moment_gamma_zeta(3, 1) == pytest.approx(2 * 1.2020569031595942, rel=1e-15)
        with pytest.raises(DomainError):
            moment_gamma_zeta(1, 1)
        with pytest.raises(DomainError):
            moment_gamma_zeta(2, 0)

    @pytest.mark.parametrize("k,q", MOMENT_SET)
    def test_oracle_vs_closed_form(self, k, q):
        r = integrate(IntegrandSpec.power(2 * k + 1), BOSE, q, 1e-12)
        exact = moment_bose(k, q)
        assert exact == pytest.approx(_mp_moment(k, q), rel=1e-15)
        assert abs(r.value - exact) <= 1e-10 * abs(exact)
        assert r.abs_error_estimate >= 0 and r.evaluations > 0

    def test_error_estimate_honesty(self):
        honest = 0
        for k, q in MOMENT_SET:
            r = integrate(IntegrandSpec.power(2 * k + 1), BOSE, q, 1e-12)
            honest += abs(r.value - _mp_moment(k, q)) <= 3 * r.abs_error_estimate
        assert honest >= 0.95 * len(MOMENT_SET)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(1.2, 9.0), st.floats(0.2, 5.0))
    def test_gamma_zeta_property(self, nu, q):
        r = integrate(IntegrandSpec.power(nu - 1), BOSE, q, 1e-11)
        assert r.value == pytest.approx(moment_gamma_zeta(nu, 2 * math.pi * q), rel=1e-10)


TEST_SET = [
    IntegrandSpec.power(1),
    IntegrandSpec.power(4),
    IntegrandSpec.rational(2),
    IntegrandSpec.atan_power(3),
    IntegrandSpec.log_power(2),
]


class TestKernelAlgebra:
    @pytest.mark.parametrize("spec", TEST_SET, ids=lambda s: s.label)
    @pytest.mark.parametrize("q", [0.25, 1.0, 3.0])
    def test_fermi(self, spec, q):
        f = integrate(spec, FERMI, q)
        b1 = integrate(spec, BOSE, q)
        b2 = integrate(spec, BOSE, 2 * q)
        err = f.abs_error_estimate + b1.abs_error_estimate + 2 * b2.abs_error_estimate
        assert abs(f.value - (b1.value - 2 * b2.value)) <= max(err, 1e-12 * abs(f.value))

    @pytest.mark.parametrize("spec", TEST_SET, ids=lambda s: s.label)
    @pytest.mark.parametrize("q", [0.25, 1.0, 3.0])
    def test_csch(self, spec, q):
        c = integrate(spec, CSCH, q)
        b1 = integrate(spec, BOSE, q)
        b2 = integrate(spec, BOSE, 2 * q)
        err = c.abs_error_estimate + 2 * b1.abs_error_estimate + 2 * b2.abs_error_estimate
        assert abs(c.value - (2 * b1.value - 2 * b2.value)) <= max(err, 1e-12 * abs(c.value))

    def test_weights(self):
        q, t = 0.7, 0.3
        a = 2 * math.pi * q * t
        assert BOSE.weight(q, t) == pytest.approx(1 / math.expm1(a), rel=1e-14)
        assert FERMI.weight(q, t) == pytest.approx(1 / (math.exp(a) + 1), rel=1e-14)
        assert CSCH.weight(q, t) == pytest.approx(1 / math.sinh(a), rel=1e-14)
        # near zero the weights follow the Laurent expansion
        t = 1e-10
        assert BOSE.weight(1, t) * t == pytest.approx(1 / (2 * math.pi) - t / 2, rel=1e-12)

    def test_parse(self):
        assert KernelKind.parse("Bose") is BOSE
        assert KernelKind.parse("fermiplus") is FERMI
        assert KernelKind.parse("sinh") is CSCH
        assert KernelKind.parse(CSCH) is CSCH
        with pytest.raises(DomainError):
            KernelKind.parse("gauss")


class TestAgainstMpmath:
    @pytest.mark.parametrize("kernel", [BOSE, FERMI, CSCH])
    def test_atan_and_log(self, kernel):
        w = {BOSE: lambda x: 1 / mp.expm1(x), FERMI: lambda x: 1 / (mp.exp(x) + 1), CSCH: lambda x: 1 / mp.sinh(x)}[kernel]
        q = 0.5
        for spec, f in ((IntegrandSpec.atan_power(2), lambda t: t ** 2 * mp.atan(t)),
                        (IntegrandSpec.log_power(1), lambda t: t * mp.log(1 + t * t))):
            ref = mp.quad(lambda t: f(t) * w(2 * mp.pi * q * t), [0, 0.5, 2, 10, 40, mp.inf])
            assert integrate(spec, kernel, q).value == pytest.approx(float(ref), rel=1e-12)

    def test_user_callable(self):
        spec = IntegrandSpec(f=lambda t: math.sin(t) * t, growth=1.0, bound=lambda T: 1.0, label="t sin t")
        ref = mp.quad(lambda t: mp.sin(t) * t / mp.expm1(2 * mp.pi * t), [0, 1, 5, 20, mp.inf])
        r = integrate(spec, BOSE, 1.0)
        assert r.value == pytest.approx(float(ref), rel=1e-12)


class TestErrors:
    def test_domain(self):
        spec = IntegrandSpec.power(1)
        for q in (0, -1, math.inf, math.nan):
            with pytest.raises(DomainError):
                integrate(spec, BOSE, q)
        for tol in (1e-15, 1e-2, 0.0):
            with pytest.raises(DomainError):
                integrate(spec, BOSE, 1, tol)
        with pytest.raises(DomainError):
            integrate_interval(math.sin, 1.0, 1.0)

    def test_budget_exhaustion_carries_estimate(self):
        # log singularity at an interior point with a tiny panel budget
        with pytest.raises(AccuracyError) as info:
            integrate_interval(lambda t: math.log(abs(t - 0.3)) if t != 0.3 else 0.0, 0.0, 1.0, rel_tol=1e-14, limit=3)
        assert info.value.estimate is not None and info.value.error_estimate > 0

    def test_interval_and_semi_infinite(self):
        assert integrate_interval(math.cos, 0.0, math.pi / 2).value == pytest.approx(1.0, rel=1e-14)
        r = integrate_semi_infinite(lambda t: t * math.exp(-3 * t), 3.0)
        assert r.value == pytest.approx(1 / 9, rel=1e-12)


class TestBackends:
    @pytest.mark.skipif(quadrature.BACKEND != "compiled", reason="compiled core not built")
    def test_bit_identical(self):
        from hurwitz_integrals import _quadcore

        for fam, p, kern, q in [
            (_quadcore_py.FAM_POWER, 3.0, _quadcore_py.KERN_BOSE, 1.0),
            (_quadcore_py.FAM_ATAN, 6.0, _quadcore_py.KERN_FERMI, 0.25),
            (_quadcore_py.FAM_LOG, 5.0, _quadcore_py.KERN_CSCH, 2.0),
            (_quadcore_py.FAM_HSIN, -3.5, _quadcore_py.KERN_BOSE, 0.5),
            (_quadcore_py.FAM_HSIN_LOG, 2.5, _quadcore_py.KERN_BOSE, 1.0),
            (_quadcore_py.FAM_HCOS_ATAN, 4.0, _quadcore_py.KERN_BOSE, 2.0),
        ]:
            a = 2 * math.pi * q
            bps = quadrature._breakpoints(a, (2 * max(p, 0) + 40) / a, p)
            args = (fam, p, kern, q, bps, 0.0, 1e-12, 1000)
            assert _quadcore.adaptive_builtin(*args) == _quadcore_py.adaptive_builtin(*args)

    def test_pure_python_switch(self):
        code = (
            "from hurwitz_integrals import quadrature as Q\n"
            "r = Q.integrate(Q.IntegrandSpec.power(3), 'bose', 1.0)\n"
            "print(Q.BACKEND, repr(r.value))\n"
        )
        env = dict(os.environ, HURWITZ_INTEGRALS_PURE_PYTHON="1")
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, value = out.stdout.split()
        assert backend == "python"
        assert float(value) == integrate(IntegrandSpec.power(3), BOSE, 1.0).value
