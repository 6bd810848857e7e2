"""Independent quadrature oracle for integrals against the three kernels.

    integral_0^inf f(t) K(q, t) dt,   K in {1/(e^{2 pi q t} - 1), 1/(e^{2 pi q t} + 1), 1/sinh(2 pi q t)}

The range is cut at a point T chosen from an analytic bound on the tail,
[0, T] is integrated by globally adaptive 21-point Gauss-Kronrod, and the
tail bound is added to the reported error.  Integrands from the builtin
families run in the compiled core when it is importable; anything else
runs through the pure-Python core.
"""
import enum
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import _quadcore_py
from .errors import AccuracyError, DomainError
from .special_core import bernoulli_number, riemann_zeta

if os.environ.get("HURWITZ_INTEGRALS_PURE_PYTHON") == "1":
    _core = _quadcore_py
    BACKEND = "python"
else:
    try:
        from . import _quadcore as _core
        BACKEND = "compiled"
    except ImportError:
        _core = _quadcore_py
        BACKEND = "python"

PANEL_BUDGET = 10_000


class KernelKind(enum.Enum):
    BOSE_MINUS = "bose"
    FERMI_PLUS = "fermi"
    CSCH = "csch"

    @property
    def code(self):
        return _KERNEL_CODES[self]

    def weight(self, q, t):
        """K(q, t) at a single point t > 0."""
        return _quadcore_py.t_kernel(self.code, q, t) / t

    def tail_factor(self, a, T):
        # K(q,t) <= factor * exp(-2 pi q t) for t >= T
        if self is KernelKind.BOSE_MINUS:
            return 1.0 / -math.expm1(-a * T)
        if self is KernelKind.FERMI_PLUS:
            return 1.0
        return 2.0 / -math.expm1(-2.0 * a * T)

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        aliases = {"boseminus": cls.BOSE_MINUS, "fermiplus": cls.FERMI_PLUS, "sinh": cls.CSCH}
        if key in aliases:
            return aliases[key]
        raise DomainError("unknown kernel %r (expected bose, fermi or csch)" % (value,))


_KERNEL_CODES = {
    KernelKind.BOSE_MINUS: _quadcore_py.KERN_BOSE,
    KernelKind.FERMI_PLUS: _quadcore_py.KERN_FERMI,
    KernelKind.CSCH: _quadcore_py.KERN_CSCH,
}


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int
    panels: int = 0
    cutoff: float = math.inf
    roundoff_limited: bool = False


def _log_envelope(T):
    # sup_{t >= T} ln(1+t^2)/t; the maximum over t > 0 is ~0.8047 at t ~ 1.98
    if T >= 3.0:
        return math.log1p(T * T) / T
    return 0.8048


@dataclass(frozen=True)
class IntegrandSpec:
    """Numerator f of the integrand and its growth at infinity.

    ``growth`` is an exponent p with |f(t)| <= C(T) t^p for t >= T.
    ``bound(T)`` returns C(T); when absent it is guessed as 2|f(T)|/T^p,
    which is only safe for numerators that are eventually monotone
    relative to t^p.  ``builtin`` names a family the compiled core knows.
    """

    f: Callable[[float], float]
    growth: float
    bound: Optional[Callable[[float], float]] = None
    builtin: Optional[tuple] = field(default=None, compare=False)
    label: str = ""

    def envelope(self, T):
        if self.bound is not None:
            return self.bound(T)
        return 2.0 * abs(self.f(T)) / T ** self.growth

    @classmethod
    def _make(cls, fam, p, growth, bound, label):
        def f(t, _fam=fam, _p=float(p)):
            return _quadcore_py.f_over_t(_fam, _p, t) * t

        return cls(f=f, growth=growth, bound=bound, builtin=(fam, float(p)), label=label)

    @classmethod
    def power(cls, p):
        """f(t) = t^p, p > 0."""
        return cls._make(_quadcore_py.FAM_POWER, p, p, lambda T: 1.0, "t^%g" % p)

    @classmethod
    def rational(cls, k):
        """f(t) = t / (1+t^2)^(k+1)."""
        return cls._make(_quadcore_py.FAM_RATIONAL, k, -(2 * k + 1), lambda T: 1.0, "t/(1+t^2)^%d" % (k + 1))

    @classmethod
    def atan_power(cls, k):
        """f(t) = t^k arctan t."""
        return cls._make(_quadcore_py.FAM_ATAN, k, k, lambda T: math.pi / 2, "t^%d atan t" % k)

    @classmethod
    def log_power(cls, k):
        """f(t) = t^k ln(1+t^2)."""
        return cls._make(_quadcore_py.FAM_LOG, k, k + 1, _log_envelope, "t^%d ln(1+t^2)" % k)

    @staticmethod
    def _hermite_envelope(z):
        if z >= 0:
            return lambda T: 1.0
        return lambda T: (1.0 + 1.0 / (T * T)) ** (-z / 2.0)

    @classmethod
    def hermite_sin(cls, z):
        """f(t) = sin(z arctan t) (1+t^2)^(-z/2)."""
        env = cls._hermite_envelope(z)
        return cls._make(_quadcore_py.FAM_HSIN, z, -z, env, "sin(%g atan t)(1+t^2)^(-%g/2)" % (z, z))

    @classmethod
    def hermite_sin_log(cls, z):
        """f(t) = sin(z arctan t) ln(1+t^2) (1+t^2)^(-z/2)."""
        env = cls._hermite_envelope(z)
        return cls._make(
            _quadcore_py.FAM_HSIN_LOG, z, 1 - z, lambda T: env(T) * _log_envelope(T),
            "sin(%g atan t) ln(1+t^2)(1+t^2)^(-%g/2)" % (z, z),
        )

    @classmethod
    def hermite_cos_atan(cls, z):
        """f(t) = cos(z arctan t) arctan t (1+t^2)^(-z/2)."""
        env = cls._hermite_envelope(z)
        return cls._make(
            _quadcore_py.FAM_HCOS_ATAN, z, -z, lambda T: env(T) * math.pi / 2,
            "cos(%g atan t) atan t (1+t^2)^(-%g/2)" % (z, z),
        )


def _tail_bound(spec, kernel, a, T):
    p = spec.growth
    if a * T <= 2.0 * max(p, 0.0):
        return math.inf
    denom = a - max(p, 0.0) / T
    # t^p e^{-a t} integrated from T, times the envelope constant
    log_b = p * math.log(T) - a * T
    if log_b < -745.0:
        return 0.0
    return spec.envelope(T) * kernel.tail_factor(a, T) * math.exp(log_b) / denom


def _cutoff(spec, kernel, a, goal, start):
    T = start
    for _ in range(400):
        b = _tail_bound(spec, kernel, a, T)
        if b <= goal:
            return T, b
        if math.isinf(b):
            T = max(T * 1.5, 2.0 * max(spec.growth, 0.0) / a + 1.0 / a)
        else:
            T += max(math.log(b / goal), 1.0) / a
    raise AccuracyError("could not bound the integrand tail")


def _breakpoints(a, T, p):
    s = 1.0 / a
    pts = {0.0, T}
    x = s / 4.0
    while x < T:
        pts.add(x)
        x *= 2.0
    for extra in (1.0, max(p, 0.0) * s):
        if 0.0 < extra < T:
            pts.add(extra)
    return sorted(pts)


def _run(spec, kernel, q, bps, epsabs, epsrel, limit):
    if spec.builtin is not None:
        fam, p = spec.builtin
        return _core.adaptive_builtin(fam, p, kernel.code, q, bps, epsabs, epsrel, limit)
    code = kernel.code
    f = spec.f

    def g(t):
        return f(t) / t * _quadcore_py.t_kernel(code, q, t)

    return _quadcore_py.adaptive(g, bps, epsabs, epsrel, limit)


def integrate(spec, kernel, q, target_rel_tol=1e-12, abs_tol=0.0, limit=PANEL_BUDGET):
    """Integrate ``spec.f(t) * K(q, t)`` over (0, inf).

    The result is within ``max(target_rel_tol * |value|, abs_error_estimate)``
    of the true integral.  Raises :class:`AccuracyError` (carrying the best
    estimate) when the panel budget is exhausted.
    """
    kernel = KernelKind.parse(kernel)
    if not q > 0 or math.isinf(q):
        raise DomainError("integrate needs q > 0, got %r" % (q,))
    if not 1e-14 <= target_rel_tol <= 1e-3:
        raise DomainError("target_rel_tol must lie in [1e-14, 1e-3], got %r" % (target_rel_tol,))
    a = 2.0 * math.pi * q
    p = spec.growth
    bulk = (2.0 * max(p, 0.0) + 8.0) / a

    # coarse pass over the bulk to size the tail goal
    coarse = _run(spec, kernel, q, _breakpoints(a, bulk, p), 0.0, 1e-3, 50)
    evaluations = coarse[2]
    scale = abs(coarse[0])
    goal = 1e-2 * max(abs_tol, target_rel_tol * scale) if scale > 0 or abs_tol > 0 else 1e-300
    T, tail = _cutoff(spec, kernel, a, goal, bulk)

    for _ in range(8):
        value, err, nev, ier, npanels = _run(spec, kernel, q, _breakpoints(a, T, p), abs_tol, target_rel_tol, limit)
        evaluations += nev
        goal_now = 1e-2 * max(abs_tol, target_rel_tol * abs(value))
        if tail <= goal_now or goal_now == 0.0:
            break
        # cancellation left the value smaller than the coarse pass suggested
        T, tail = _cutoff(spec, kernel, a, goal_now, T)
    total_err = err + tail
    if ier in (1, 2):
        raise AccuracyError(
            "quadrature did not converge (%d panels, error estimate %.3g)" % (npanels, total_err),
            estimate=value,
            error_estimate=total_err,
        )
    return QuadratureResult(value, total_err, evaluations, npanels, T, ier == 3)


def integrate_interval(g, a, b, rel_tol=1e-12, abs_tol=0.0, limit=PANEL_BUDGET, breakpoints=None):
    """Adaptive GK21 of a plain callable over the finite interval [a, b]."""
    if not a < b:
        raise DomainError("integrate_interval needs a < b, got [%r, %r]" % (a, b))
    bps = [a] + sorted(x for x in (breakpoints or ()) if a < x < b) + [b]
    value, err, nev, ier, npanels = _quadcore_py.adaptive(g, bps, abs_tol, rel_tol, limit)
    if ier in (1, 2):
        raise AccuracyError("quadrature did not converge on [%r, %r]" % (a, b), estimate=value, error_estimate=err)
    return QuadratureResult(value, err, nev, npanels, b, ier == 3)


def integrate_semi_infinite(g, decay_rate, rel_tol=1e-12, abs_tol=0.0, limit=PANEL_BUDGET):
    """Integrate a callable over (0, inf) when |g(t)| <= C t^n e^{-decay_rate t}.

    The range is cut where exp(-decay_rate t) drops below 1e-3 of the
    relative tolerance, after a polynomial allowance of 60/decay_rate.
    """
    T = (math.log(1e3 / rel_tol) + 60.0) / decay_rate
    bps = [0.0] + [2.0 ** i / decay_rate for i in range(-2, 7) if 2.0 ** i / decay_rate < T] + [T]
    value, err, nev, ier, npanels = _quadcore_py.adaptive(g, bps, abs_tol, rel_tol, limit)
    tail = abs(g(T)) / decay_rate
    if ier in (1, 2):
        raise AccuracyError("quadrature did not converge", estimate=value, error_estimate=err + tail)
    return QuadratureResult(value, err + tail, nev, npanels, T, ier == 3)


def moment_bose(k, q):
    """Closed form of  integral_0^inf t^(2k+1) / (e^{2 pi q t} - 1) dt."""
    if k < 0:
        raise DomainError("moment_bose needs k >= 0, got %r" % k)
    if not q > 0:
        raise DomainError("moment_bose needs q > 0, got %r" % (q,))
    b = bernoulli_number(2 * k + 2)
    return (-1) ** k * float(b) / (4 * (k + 1) * q ** (2 * k + 2))


def moment_gamma_zeta(nu, mu):
    """Gamma(nu) zeta(nu) / mu^nu  =  integral_0^inf x^(nu-1) / (e^{mu x} - 1) dx."""
    if not nu > 1:
        raise DomainError("moment_gamma_zeta needs nu > 1, got %r" % (nu,))
    if not mu > 0:
        raise DomainError("moment_gamma_zeta needs mu > 0, got %r" % (mu,))
    return math.exp(math.lgamma(nu) - nu * math.log(mu)) * riemann_zeta(nu)
