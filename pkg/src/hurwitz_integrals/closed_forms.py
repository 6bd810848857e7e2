"""Closed-form evaluation of the integral families

    I_k(q)  = int_0^inf t / (1+t^2)^(k+1) K(q, t) dt
    T_n(q)  = int_0^inf t^n arctan(t)    K(q, t) dt
    L_n(q)  = int_0^inf t^n ln(1+t^2)    K(q, t) dt

in terms of polygamma, balanced negapolygamma and Bernoulli values.

Every formula is written once as a *builder*: a function of an arithmetic
context returning labelled terms with error estimates.  The driver
:func:`_evaluate` runs the builder in binary64, and when the accumulated
error estimate exceeds ``REL_TARGET`` (the alternating sums in T_2k and
L_{2k+1} cancel by up to ten orders of magnitude at large k and q) it
re-runs the same builder in an mpmath context with enough digits.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import quadrature
from ._em import zeta_em, zeta_em_checked
from ._numeric import FLOAT, Extended, digits_needed
from .errors import DomainError, NoClosedFormError
from .hurwitz import (
    HurwitzBackend,
    _negapolygamma,
    _negapolygamma_at_zero_ctx,
    hurwitz_zeta_prime_with_error,
    balanced_A,
)
from .quadrature import IntegrandSpec, KernelKind
from .special_core import (
    CONSTANTS,
    _digamma,
    _polygamma,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    digamma,
    harmonic,
    polygamma,
    riemann_zeta,
)

REL_TARGET = 1e-13
MAX_DPS = 200

BOSE = KernelKind.BOSE_MINUS
FERMI = KernelKind.FERMI_PLUS
CSCH = KernelKind.CSCH


@dataclass(frozen=True)
class FamilyId:
    family: str
    index: int
    kernel: KernelKind = BOSE

    def __post_init__(self):
        if self.family not in ("I", "T", "L"):
            raise DomainError("family must be one of I, T, L, got %r" % (self.family,))
        if int(self.index) != self.index or self.index < 0:
            raise DomainError("family index must be an integer >= 0, got %r" % (self.index,))
        object.__setattr__(self, "index", int(self.index))
        object.__setattr__(self, "kernel", KernelKind.parse(self.kernel))

    @property
    def has_closed_form(self):
        if self.family == "I":
            return True
        if self.family == "T":
            return self.index % 2 == 0
        return self.index % 2 == 1

    def sort_key(self):
        return ("ITL".index(self.family), self.index, list(KernelKind).index(self.kernel))

    def __str__(self):
        return "%s_%d[%s]" % (self.family, self.index, self.kernel.value)


@dataclass(frozen=True)
class ClosedFormValue:
    """A closed-form value with its additive breakdown.

    ``terms`` sum to ``value`` up to rounding of the individual terms,
    i.e. within a few units of ``eps * sum(|term|)``.  ``precision`` names
    the arithmetic the terms were summed in.
    """

    value: float
    terms: tuple
    error_estimate: float
    precision: str = "binary64"

    def __float__(self):
        return self.value


class _Terms:
    def __init__(self, ctx):
        self.ctx = ctx
        self.items = []

    def num(self, x):
        return self.ctx.num(x)

    def add(self, label, value, err=None):
        ctx = self.ctx
        if err is None:
            err = 2 * ctx.eps * abs(value)
        self.items.append((label, value, err))

    def scaled(self, label, coeff, ve):
        """Add coeff * v where ``ve = (v, err)``."""
        v, e = ve
        c = self.num(coeff) if isinstance(coeff, (int, Fraction)) else coeff
        val = c * v
        self.add(label, val, abs(c) * e + 2 * self.ctx.eps * abs(val))

    def extend(self, other, factor=1, prefix=""):
        for label, v, e in other.items:
            f = self.num(factor)
            self.items.append((prefix + label, f * v, abs(f) * e))

    def negate(self):
        self.items = [(l, -v, e) for l, v, e in self.items]
        return self


# ---------------------------------------------------------------- ingredients

def _log(ctx, x):
    v = ctx.log(ctx.num(x))
    return v, 2 * ctx.eps * (abs(v) + 1)


def _lgamma(ctx, q):
    v = ctx.loggamma(ctx.num(q))
    return v, 8 * ctx.eps * (abs(v) + 1)


def _ln_sqrt_2pi(ctx):
    if ctx is FLOAT:
        return CONSTANTS.ln_sqrt_2pi, FLOAT.eps
    return ctx.log(2 * ctx.pi) / 2, ctx.eps


def _psi(ctx, j, q):
    if j == 0:
        v = _digamma(q, ctx)
        return v, 8 * ctx.eps * (abs(v) + 3)
    v = _polygamma(j, q, ctx)
    return v, 8 * (j + 2) * ctx.eps * abs(v)


def _negapsi(ctx, m, q):
    return _negapolygamma(m, q, ctx)


def _zeta_prime_minus1(ctx, q):
    if ctx is FLOAT:
        _, _, d, e = zeta_em_checked(-1, q, derivative=True)
    else:
        _, _, d, e = zeta_em(-1, q, ctx, derivative=True)
    return d, e


def _bern(ctx, n):
    return ctx.num(bernoulli_number(n))


# ---------------------------------------------------------------- driver

def _evaluate(build, *args):
    ctx = FLOAT
    while True:
        terms = build(ctx, *args)
        items = terms.items
        value = ctx.fsum([v for _, v, _ in items])
        mag = ctx.fsum([abs(v) for _, v, _ in items])
        err = ctx.fsum([e for _, _, e in items]) + 2 * ctx.eps * mag
        rel = float(err) / max(abs(float(value)), 1e-300)
        if rel <= REL_TARGET:
            break
        if ctx is FLOAT:
            dps = digits_needed(rel, target=REL_TARGET / 100)
        elif ctx.dps >= MAX_DPS:
            break
        else:
            dps = min(MAX_DPS, ctx.dps + max(10, int(math.log10(rel / REL_TARGET)) + 4))
        ctx = Extended(dps)
    fvalue = float(value)
    ferr = float(err) + (0.0 if ctx is FLOAT else FLOAT.eps * abs(fvalue) / 2)
    name = "binary64" if ctx is FLOAT else "extended(%d digits)" % ctx.dps
    return ClosedFormValue(fvalue, tuple((l, float(v)) for l, v, _ in items), ferr, name)


def _check_q(q, name):
    if not q > 0 or math.isinf(q):
        raise DomainError("%s needs a finite q > 0, got %r" % (name, q))
    return float(q)


def _check_index(k, name, low=0):
    if int(k) != k or k < low:
        raise DomainError("%s needs an integer index >= %d, got %r" % (name, low, k))
    return int(k)


# ---------------------------------------------------------------- I family

def _b_I(ctx, k, q):
    T = _Terms(ctx)
    qn = T.num(q)
    if k == 0:
        T.scaled("(1/2) ln q", Fraction(1, 2), _log(ctx, q))
        T.add("-1/(4q)", -1 / (4 * qn))
        T.scaled("-(1/2) psi(q)", Fraction(-1, 2), _psi(ctx, 0, q))
        return T
    T.add("-1/(4k)", T.num(Fraction(-1, 4 * k)))
    T.add("-C(2k,k)/(2^(2k+2) q)", T.num(Fraction(-binomial(2 * k, k), 2 ** (2 * k + 2))) / qn)
    for j in range(1, k + 1):
        c = Fraction((-1) ** (j + 1) * binomial(2 * k - j - 1, k - j) * 2 ** (j - 1), math.factorial(j - 1) * k * 2 ** (2 * k))
        v, e = _psi(ctx, j, q)
        qj = qn ** j
        T.scaled("polygamma[%d](q)" % j, c, (qj * v, qj * e))
    return T


def _b_I_variant(ctx, k, q, kernel):
    T = _Terms(ctx)
    qn = T.num(q)
    if kernel is FERMI:
        T.add("1/(4k)", T.num(Fraction(1, 4 * k)))
        den = k * 2 ** (2 * k + 1)
        shift = 1
    else:
        T.add("-C(2k,k)/(2^(2k+2) q)", T.num(Fraction(-binomial(2 * k, k), 2 ** (2 * k + 2))) / qn)
        den = k * 2 ** (2 * k)
        shift = 0
    for j in range(1, k + 1):
        c = Fraction((-1) ** (j + 1) * binomial(2 * k - j - 1, k - j) * 2 ** j, math.factorial(j - 1) * den)
        qj = qn ** j
        v, e = _psi(ctx, j, q)
        T.scaled("polygamma[%d](q)" % j, c, (qj * v, qj * e))
        v, e = _psi(ctx, j, 2 * q)
        T.scaled("polygamma[%d](2q)" % j, -c * 2 ** (j + shift), (qj * v, qj * e))
    return T


# ---------------------------------------------------------------- T family

def _b_T0(ctx, q):
    T = _Terms(ctx)
    qn = T.num(q)
    lq = _log(ctx, q)
    T.add("1/2", T.num(Fraction(1, 2)))
    T.scaled("-(1/2) ln q", Fraction(-1, 2), lq)
    T.scaled("ln q/(4q)", 1 / (4 * qn), lq)
    T.scaled("ln Gamma(q)/(2q)", 1 / (2 * qn), _lgamma(ctx, q))
    T.scaled("-ln sqrt(2 pi)/(2q)", -1 / (2 * qn), _ln_sqrt_2pi(ctx))
    return T


def _negapsi_block(T, ctx, n, q, outer, half_power=None, shift=0):
    """sum_{j=0}^{n} (-1)^j n!/(n-j)! / q^{j+1} [psi^(-1-j)(q) - psi^(-1-j)(2q)/2^(j+shift)] * outer."""
    qn = T.num(q)
    for j in range(n + 1):
        c = Fraction((-1) ** j * math.factorial(n), math.factorial(n - j)) * outer
        qpow = qn ** (j + 1)
        v, e = _negapsi(ctx, j + 1, q)
        T.scaled("negapolygamma[%d](q)" % (j + 1), c, (v / qpow, e / qpow))
        if half_power is not None:
            v, e = _negapsi(ctx, j + 1, 2 * q)
            T.scaled("negapolygamma[%d](2q)" % (j + 1), -c / 2 ** (j + shift), (v / qpow, e / qpow))


def _b_T_even(ctx, k, q):
    T = _Terms(ctx)
    qn = T.num(q)
    T.add("1/(2(2k+1)^2)", T.num(Fraction(1, 2 * (2 * k + 1) ** 2)))
    T.scaled("-ln q/(2(2k+1))", Fraction(-1, 2 * (2 * k + 1)), _log(ctx, q))
    T.add("1/(8kq)", T.num(Fraction(1, 8 * k)) / qn)
    for j in range(k):
        c = bernoulli_number(2 * j + 2) / (4 * (j + 1) * (2 * k - 2 * j - 1))
        T.add("bernoulli[%d]" % (2 * j + 2), T.num(c) / qn ** (2 * j + 2))
    _negapsi_block(T, ctx, 2 * k, q, Fraction(1, 2))
    return T.negate() if k % 2 else T


def _b_T_even_variant(ctx, k, q, kernel):
    T = _Terms(ctx)
    qn = T.num(q)
    ln2 = _log(ctx, 2)
    if kernel is FERMI:
        T.add("-1/(2(2k+1)^2)", T.num(Fraction(-1, 2 * (2 * k + 1) ** 2)))
        T.scaled("ln 2/(2k+1)", Fraction(1, 2 * k + 1), ln2)
        T.scaled("ln q/(2(2k+1))", Fraction(1, 2 * (2 * k + 1)), _log(ctx, q))
        bfac, bshift, outer, shift = Fraction(1, 4), 1, Fraction(1, 2), 0
    else:
        T.scaled("ln 2/(2k+1)", Fraction(1, 2 * k + 1), ln2)
        T.add("1/(8kq)", T.num(Fraction(1, 8 * k)) / qn)
        bfac, bshift, outer, shift = Fraction(1, 2), 2, Fraction(1), 1
    for j in range(k):
        c = bfac * bernoulli_number(2 * j + 2) * (1 - Fraction(1, 2 ** (2 * j + bshift))) / ((j + 1) * (2 * k - 2 * j - 1))
        T.add("bernoulli[%d]" % (2 * j + 2), T.num(c) / qn ** (2 * j + 2))
    _negapsi_block(T, ctx, 2 * k, q, outer, half_power=True, shift=shift)
    return T.negate() if k % 2 else T


# ---------------------------------------------------------------- L family

def _b_L1(ctx, q):
    T = _Terms(ctx)
    qn = T.num(q)
    v, e = _zeta_prime_minus1(ctx, q)
    q2 = qn * qn
    T.add("zeta'(-1,q)/q^2", v / q2, e / q2)
    T.scaled("-ln Gamma(q)/q", -1 / qn, _lgamma(ctx, q))
    T.scaled("ln sqrt(2 pi)/q", 1 / qn, _ln_sqrt_2pi(ctx))
    T.scaled("-(1/(12 q^2) - 1/2) ln q", T.num(Fraction(1, 2)) - 1 / (12 * q2), _log(ctx, q))
    T.add("-3/4", T.num(Fraction(-3, 4)))
    return T


def _b_L_odd(ctx, k, q):
    T = _Terms(ctx)
    qn = T.num(q)
    lq = _log(ctx, q)
    T.add("1/(2k+2)^2", T.num(Fraction(1, (2 * k + 2) ** 2)))
    T.scaled("-ln q/(2k+2)", Fraction(-1, 2 * k + 2), lq)
    T.add("1/(2q(2k+1))", T.num(Fraction(1, 2 * (2 * k + 1))) / qn)
    for j in range(k):
        c = bernoulli_number(2 * j + 2) / (2 * (j + 1) * (2 * k - 2 * j))
        T.add("bernoulli[%d]" % (2 * j + 2), T.num(c) / qn ** (2 * j + 2))
    top = T.num(bernoulli_number(2 * k + 2) / (2 * k + 2)) / qn ** (2 * k + 2)
    T.scaled("bernoulli[%d] ln q" % (2 * k + 2), top, lq)
    T.add("bernoulli[%d] harmonic" % (2 * k + 2), -top * T.num(harmonic(2 * k + 1)))
    _negapsi_block(T, ctx, 2 * k + 1, q, Fraction(1))
    return T if k % 2 else T.negate()


def _b_L_odd_variant(ctx, k, q, kernel):
    T = _Terms(ctx)
    qn = T.num(q)
    lq = _log(ctx, q)
    ln2 = _log(ctx, 2)
    if kernel is FERMI:
        T.add("-1/(2k+2)^2", T.num(Fraction(-1, (2 * k + 2) ** 2)))
        T.scaled("2 ln 2/(2k+2)", Fraction(2, 2 * k + 2), ln2)
        T.scaled("ln q/(2k+2)", Fraction(1, 2 * k + 2), lq)
        bfac, bshift, top_fac, p, outer, shift = Fraction(1, 2), 1, 1, 2 * k + 1, Fraction(1), 0
    else:
        T.scaled("2 ln 2/(2k+2)", Fraction(2, 2 * k + 2), ln2)
        T.add("1/(2q(2k+1))", T.num(Fraction(1, 2 * (2 * k + 1))) / qn)
        bfac, bshift, top_fac, p, outer, shift = Fraction(1), 2, 2, 2 * k + 2, Fraction(2), 1
    for j in range(k):
        c = bfac * bernoulli_number(2 * j + 2) * (1 - Fraction(1, 2 ** (2 * j + bshift))) / ((j + 1) * (2 * k - 2 * j))
        T.add("bernoulli[%d]" % (2 * j + 2), T.num(c) / qn ** (2 * j + 2))
    cfac = 1 - Fraction(1, 2 ** p)
    top = T.num(top_fac * bernoulli_number(2 * k + 2) / (2 * k + 2)) / qn ** (2 * k + 2)
    T.scaled("bernoulli[%d] ln q" % (2 * k + 2), top * T.num(cfac), lq)
    T.scaled("bernoulli[%d] ln 2" % (2 * k + 2), -top * T.num(Fraction(1, 2 ** p)), ln2)
    T.add("bernoulli[%d] harmonic" % (2 * k + 2), -top * T.num(cfac * harmonic(2 * k + 1)))
    _negapsi_block(T, ctx, 2 * k + 1, q, outer, half_power=True, shift=shift)
    return T if k % 2 else T.negate()


# ---------------------------------------------------------------- transforms

def _b_transform(ctx, builder, args, q, kernel):
    a = 1 if kernel is FERMI else 2
    T = _Terms(ctx)
    T.extend(builder(ctx, *args, q), a, prefix="F(q): ")
    T.extend(builder(ctx, *args, 2 * q), -2, prefix="F(2q): ")
    return T


def _b_T0_prime(ctx, q):
    # d/dq of the T_0 closed form
    T = _Terms(ctx)
    qn = T.num(q)
    q2 = qn * qn
    lq, lqe = _log(ctx, q)
    T.add("-1/(2q)", -1 / (2 * qn))
    T.add("(1 - ln q)/(4q^2)", (1 - lq) / (4 * q2), lqe / (4 * q2))
    T.scaled("psi(q)/(2q)", 1 / (2 * qn), _psi(ctx, 0, q))
    T.scaled("-ln Gamma(q)/(2q^2)", -1 / (2 * q2), _lgamma(ctx, q))
    T.scaled("ln sqrt(2 pi)/(2q^2)", 1 / (2 * q2), _ln_sqrt_2pi(ctx))
    return T


def _b_sinh_sq(ctx, q):
    T = _Terms(ctx)
    T.extend(_b_T0_prime(ctx, q), 1, prefix="T0'(q): ")
    f = -2 / ctx.pi
    T.items = [(l, f * v, abs(f) * e + 2 * ctx.eps * abs(f * v)) for l, v, e in T.items]
    return T


# ---------------------------------------------------------------- public API

def I_closed(k, q):
    """I_k(q) with the Bose kernel, k >= 0."""
    k = _check_index(k, "I_closed")
    return _evaluate(_b_I, k, _check_q(q, "I_closed"))


def T0_closed(q):
    """T_0(q) = int_0^inf arctan(t) / (e^{2 pi q t} - 1) dt."""
    return _evaluate(_b_T0, _check_q(q, "T0_closed"))


def T_even_closed(k, q):
    """T_2k(q) with the Bose kernel, k >= 1 (k = 0 is :func:`T0_closed`)."""
    k = _check_index(k, "T_even_closed", low=1)
    return _evaluate(_b_T_even, k, _check_q(q, "T_even_closed"))


def L1_closed(q):
    """L_1(q) = int_0^inf t ln(1+t^2) / (e^{2 pi q t} - 1) dt."""
    return _evaluate(_b_L1, _check_q(q, "L1_closed"))


def L_odd_closed(k, q):
    """L_{2k+1}(q) with the Bose kernel; k = 0 delegates to :func:`L1_closed`."""
    k = _check_index(k, "L_odd_closed")
    q = _check_q(q, "L_odd_closed")
    if k == 0:
        return L1_closed(q)
    return _evaluate(_b_L_odd, k, q)


def _L_odd_general(k, q):
    # the general-k formula, also at k = 0 (used to check the delegation)
    return _evaluate(_b_L_odd, k, q)


def _target(kernel):
    kernel = KernelKind.parse(kernel)
    if kernel is BOSE:
        raise DomainError("variant formulas need the fermi or csch kernel")
    return kernel


def I_variant_closed(k, q, target):
    """I_k(q) with the Fermi or csch kernel.  k = 0 goes through :func:`transform_kernel`."""
    k = _check_index(k, "I_variant_closed")
    q = _check_q(q, "I_variant_closed")
    target = _target(target)
    if k == 0:
        return _evaluate(_b_transform, _b_I, (0,), q, target)
    return _evaluate(_b_I_variant, k, q, target)


def T_even_variant_closed(k, q, target):
    """T_2k(q) with the Fermi or csch kernel.  k = 0 goes through :func:`transform_kernel`."""
    k = _check_index(k, "T_even_variant_closed")
    q = _check_q(q, "T_even_variant_closed")
    target = _target(target)
    if k == 0:
        return _evaluate(_b_transform, lambda ctx, q: _b_T0(ctx, q), (), q, target)
    return _evaluate(_b_T_even_variant, k, q, target)


def L_odd_variant_closed(k, q, target):
    """L_{2k+1}(q) with the Fermi or csch kernel."""
    k = _check_index(k, "L_odd_variant_closed")
    q = _check_q(q, "L_odd_variant_closed")
    return _evaluate(_b_L_odd_variant, k, q, _target(target))


def transform_kernel(base, q, target):
    """Kernel transform of a Bose-kernel evaluator ``base(q)``.

    Fermi: F(q) - 2F(2q);  csch: 2F(q) - 2F(2q).
    """
    q = _check_q(q, "transform_kernel")
    target = _target(target)
    a, b = float(base(q)), float(base(2 * q))
    return (a if target is FERMI else 2 * a) - 2 * b


def sinh_sq_closed(q):
    """int_0^inf t arctan(t) / sinh^2(pi q t) dt  =  -(2/pi) T_0'(q)."""
    return _evaluate(_b_sinh_sq, _check_q(q, "sinh_sq_closed"))


def sinh_sq_integrals():
    """The sinh^2 integrals at q = 1 and q = 2: (int t atan t/sinh^2(pi t), int t atan t/sinh^2(2 pi t))."""
    return sinh_sq_closed(1.0).value, sinh_sq_closed(2.0).value


def sinh_sq_oracle(q, rel_tol=1e-12):
    """Direct quadrature of t arctan(t) / sinh^2(pi q t)."""
    a = math.pi * q

    def g(t):
        x = a * t
        if x > 350.0:
            return 4.0 * t * math.atan(t) * math.exp(-2.0 * x)
        return t * math.atan(t) / math.sinh(x) ** 2

    return quadrature.integrate_semi_infinite(g, 2.0 * a, rel_tol)


def closed_form(fid, q):
    """Dispatch a :class:`FamilyId` to its closed form."""
    if not fid.has_closed_form:
        raise NoClosedFormError("no closed form for %s, use oracle" % fid)
    k = fid.index
    if fid.family == "I":
        return I_closed(k, q) if fid.kernel is BOSE else I_variant_closed(k, q, fid.kernel)
    if fid.family == "T":
        k //= 2
        if fid.kernel is BOSE:
            return T0_closed(q) if k == 0 else T_even_closed(k, q)
        return T_even_variant_closed(k, q, fid.kernel)
    k = (k - 1) // 2
    return L_odd_closed(k, q) if fid.kernel is BOSE else L_odd_variant_closed(k, q, fid.kernel)


def integrand_spec(fid):
    if fid.family == "I":
        return IntegrandSpec.rational(fid.index)
    if fid.family == "T":
        return IntegrandSpec.atan_power(fid.index)
    return IntegrandSpec.log_power(fid.index)


def oracle(fid, q, rel_tol=1e-12):
    """Quadrature value of the family member (works with or without a closed form)."""
    return quadrature.integrate(integrand_spec(fid), fid.kernel, q, rel_tol)


# ---------------------------------------------------------------- identities

def I_recursion_check(m, q, source="oracle"):
    """Relative residual of the recursion linking I_p(q), p = ceil(m/2)..m, to psi^(m)(q).

    ``source`` selects where the I_p values come from: ``"oracle"``
    (quadrature, an independent check) or ``"closed"``.
    """
    m = _check_index(m, "I_recursion_check", low=1)
    q = _check_q(q, "I_recursion_check")
    if source not in ("oracle", "closed"):
        raise DomainError("source must be 'oracle' or 'closed', got %r" % (source,))
    terms = []
    for p in range((m + 1) // 2, m + 1):
        fid = FamilyId("I", p, BOSE)
        ip = oracle(fid, q).value if source == "oracle" else I_closed(p, q).value
        terms.append((-1) ** p * 2 ** (2 * p) * binomial(p, m - p) * ip)
    s = (-1) ** m
    tail = 2 ** (m - 1)
    terms += [tail * q ** m * polygamma(m, q) / math.factorial(m), tail * s / (2 * q), tail * s / m]
    return abs(math.fsum(terms)) / max(abs(t) for t in terms)


def jplusk_residual(m, q):
    """Relative residual of the relation tying T_0..T_2k and L_1..L_{2k+1} to A_{m+1}(q)."""
    m = _check_index(m, "jplusk_residual")
    q = _check_q(q, "jplusk_residual")
    terms = []
    for k in range(m // 2 + 1):
        t = T0_closed(q) if k == 0 else T_even_closed(k, q)
        terms.append(2 * (-1) ** k * binomial(m, 2 * k) * t.value)
    for k in range((m - 1) // 2 + 1):
        terms.append((-1) ** k * binomial(m, 2 * k + 1) * L_odd_closed(k, q).value)
    scale = 1.0 / ((m + 1) * q ** (m + 1))
    terms.append(-scale * balanced_A(m + 1, q))
    terms.append(scale * bernoulli_polynomial(m + 1, q) * math.log(q))
    terms.append(-1.0 / (m + 1) ** 2)
    return abs(math.fsum(terms)) / max(abs(t) for t in terms)


def bernoulli_from_hurwitz_check(m, q):
    """|-(m+1) zeta(-m, q) - B_{m+1}(q)| with zeta from Hermite's formula at z = -m.

    At z = -m the numerator sin(-m atan t)(1+t^2)^(m/2) is the terminating
    polynomial -sum_k (-1)^k C(m, 2k+1) t^(2k+1); each power is integrated
    against the Bose kernel by the quadrature oracle.
    """
    m = _check_index(m, "bernoulli_from_hurwitz_check")
    q = _check_q(q, "bernoulli_from_hurwitz_check")
    from .expansions import trig_poly_in_t

    integral = 0.0
    if m >= 1:
        poly = trig_poly_in_t(m, "sin")
        parts = [
            c * quadrature.integrate(IntegrandSpec.power(2 * k + 1), BOSE, q, 1e-13).value
            for k, c in enumerate(poly.coeffs)
        ]
        integral = -math.fsum(parts)
    zeta = math.fsum([0.5 * q ** m, -(q ** (m + 1)) / (m + 1), 2 * q ** (m + 1) * integral])
    return abs(-(m + 1) * zeta - bernoulli_polynomial(m + 1, q))


def intpoly_check(n, q, relative=False):
    """|int_0^q r^n psi(r) dr - (negapolygamma expression)| for n >= 1.

    With ``relative`` the residual is divided by max(1, |integral|).
    """
    n = _check_index(n, "intpoly_check", low=1)
    q = _check_q(q, "intpoly_check")
    rhs = []
    for j in range(n + 1):
        c = math.factorial(n) * (-1) ** j / math.factorial(n - j) * q ** (n - j)
        rhs.append(c * _negapolygamma(j + 1, q)[0])
    rhs.append(-math.factorial(n) * (-1) ** n * _negapolygamma_at_zero_ctx(n, FLOAT)[0])
    lhs = quadrature.integrate_interval(
        lambda r: r ** n * digamma(r), 0.0, q, rel_tol=1e-13, breakpoints=[q * 2.0 ** -i for i in range(1, 12)]
    )
    r = abs(lhs.value - math.fsum(rhs))
    return r / max(1.0, abs(lhs.value)) if relative else r


def small_q_limit(k):
    """lim_{q->0+} q^(2k+1) T_2k(q) = (2k)! zeta(2k+1) / (4 (2 pi)^(2k))."""
    k = _check_index(k, "small_q_limit", low=1)
    return math.factorial(2 * k) * riemann_zeta(2 * k + 1) / (4 * (2 * math.pi) ** (2 * k))


def small_q_scaled(k, q, extrapolate=True):
    """q^(2k+1) T_2k(q); with ``extrapolate`` the O(q) correction is removed
    by combining q and q/2."""
    k = _check_index(k, "small_q_scaled", low=1)

    def f(x):
        return x ** (2 * k + 1) * T_even_closed(k, x).value

    return 2 * f(q / 2) - f(q) if extrapolate else f(q)


# ---------------------------------------------------------------- special values

@dataclass(frozen=True)
class SpecialValue:
    key: str
    integral: str
    expression: str
    closed: Callable[[], float]
    symbolic: Callable[[], float]
    oracle: Callable[[], tuple]
    q: float


def _quad(fid, q):
    r = oracle(fid, q)
    return r.value, r.abs_error_estimate


def _zp_oracle(q):
    return hurwitz_zeta_prime_with_error(-1, q, HurwitzBackend.HERMITE_QUADRATURE)


def _zp_closed(q):
    return _zeta_prime_minus1(FLOAT, q)[0]


def _sinh_oracle(q):
    r = sinh_sq_oracle(q)
    return r.value, r.abs_error_estimate


def _special_values():
    c = CONSTANTS
    ln2, lnpi, G, zp, g = c.ln2, c.ln_pi, c.catalan, c.zeta_prime_minus1, c.euler_gamma
    lg4, ls = c.ln_gamma_quarter, c.ln_sqrt_2pi
    pi = math.pi
    T0 = FamilyId("T", 0, BOSE)
    T0f = FamilyId("T", 0, FERMI)
    T0c = FamilyId("T", 0, CSCH)
    L1 = FamilyId("L", 1, BOSE)
    L1c = FamilyId("L", 1, CSCH)
    q1, q2, q4 = 1.0, 0.5, 0.25
    rows = [
        ("T0(1)", "int atan t/(e^{2 pi t}-1)", "1/2 - ln sqrt(2 pi)/2",
         lambda: T0_closed(q1).value, lambda: 0.5 - ls / 2, lambda: _quad(T0, q1)),
        ("T0(1/2)", "int atan t/(e^{pi t}-1)", "1/2 - ln 2/2",
         lambda: T0_closed(q2).value, lambda: 0.5 - ln2 / 2, lambda: _quad(T0, q2)),
        ("T0(1/4)", "int atan t/(e^{pi t/2}-1)", "1/2 - ln pi - 2 ln 2 + 2 ln Gamma(1/4)",
         lambda: T0_closed(q4).value, lambda: 0.5 - lnpi - 2 * ln2 + 2 * lg4, lambda: _quad(T0, q4)),
        ("zeta'(-1,1/2)", "zeta'(-1, 1/2)", "-zeta'(-1)/2 - ln 2/24",
         lambda: _zp_closed(q2), lambda: -zp / 2 - ln2 / 24, lambda: _zp_oracle(q2)),
        ("zeta'(-1,1/4)", "zeta'(-1, 1/4)", "-zeta'(-1)/8 + G/(4 pi)",
         lambda: _zp_closed(q4), lambda: -zp / 8 + G / (4 * pi), lambda: _zp_oracle(q4)),
        ("L1(1)", "int t ln(1+t^2)/(e^{2 pi t}-1)", "zeta'(-1) + ln sqrt(2 pi) - 3/4",
         lambda: L1_closed(q1).value, lambda: zp + ls - 0.75, lambda: _quad(L1, q1)),
        ("L1(1/2)", "int t ln(1+t^2)/(e^{pi t}-1)", "-2 zeta'(-1) + (2/3) ln 2 - 3/4",
         lambda: L1_closed(q2).value, lambda: -2 * zp + 2 * ln2 / 3 - 0.75, lambda: _quad(L1, q2)),
        ("L1(1/4)", "int t ln(1+t^2)/(e^{pi t/2}-1)",
         "-2 zeta'(-1) + (5/3) ln 2 - 3/4 + 4G/pi - 4 ln Gamma(1/4) + 4 ln sqrt(2 pi)",
         lambda: L1_closed(q4).value,
         lambda: -2 * zp + 5 * ln2 / 3 - 0.75 + 4 * G / pi - 4 * lg4 + 4 * ls, lambda: _quad(L1, q4)),
        ("T0+(1)", "int atan t/(e^{2 pi t}+1)", "(3/4) ln 2 - 1/2",
         lambda: T_even_variant_closed(0, q1, FERMI).value, lambda: 0.75 * ln2 - 0.5, lambda: _quad(T0f, q1)),
        ("T0+(1/2)", "int atan t/(e^{pi t}+1)", "(1/2) ln pi - 1/2",
         lambda: T_even_variant_closed(0, q2, FERMI).value, lambda: lnpi / 2 - 0.5, lambda: _quad(T0f, q2)),
        ("T0+(1/4)", "int atan t/(e^{pi t/2}+1)", "-1/2 - ln 2 + 2 ln Gamma(1/4) - ln pi",
         lambda: T_even_variant_closed(0, q4, FERMI).value, lambda: -0.5 - ln2 + 2 * lg4 - lnpi,
         lambda: _quad(T0f, q4)),
        ("T0s(1)", "int atan t/sinh(2 pi t)", "(1/2) ln 2 - (1/4) ln pi",
         lambda: T_even_variant_closed(0, q1, CSCH).value, lambda: ln2 / 2 - lnpi / 4, lambda: _quad(T0c, q1)),
        ("T0s(1/2)", "int atan t/sinh(pi t)", "(1/2) ln pi - (1/2) ln 2",
         lambda: T_even_variant_closed(0, q2, CSCH).value, lambda: lnpi / 2 - ln2 / 2, lambda: _quad(T0c, q2)),
        ("T0s(1/4)", "int atan t/sinh(pi t/2)", "4 ln Gamma(1/4) - 2 ln pi - 3 ln 2",
         lambda: T_even_variant_closed(0, q4, CSCH).value, lambda: 4 * lg4 - 2 * lnpi - 3 * ln2,
         lambda: _quad(T0c, q4)),
        ("L1s(1)", "int t ln(1+t^2)/sinh(2 pi t)", "-(11/24) ln 2 + (1/2) ln pi + (3/2) zeta'(-1)",
         lambda: L_odd_variant_closed(0, q1, CSCH).value, lambda: -11 * ln2 / 24 + lnpi / 2 + 1.5 * zp,
         lambda: _quad(L1c, q1)),
        ("L1s(1/2)", "int t ln(1+t^2)/sinh(pi t)", "(1/3) ln 2 - ln pi - 6 zeta'(-1)",
         lambda: L_odd_variant_closed(0, q2, CSCH).value, lambda: ln2 / 3 - lnpi - 6 * zp,
         lambda: _quad(L1c, q2)),
        ("L1s(1/4)", "int t ln(1+t^2)/sinh(pi t/2)", "6 ln 2 + 4 ln pi + 8G/pi - 8 ln Gamma(1/4)",
         lambda: L_odd_variant_closed(0, q4, CSCH).value, lambda: 6 * ln2 + 4 * lnpi + 8 * G / pi - 8 * lg4,
         lambda: _quad(L1c, q4)),
        ("sinh2(1)", "int t atan t/sinh^2(pi t)", "1/(2 pi) + gamma/pi - ln sqrt(2 pi)/pi",
         lambda: sinh_sq_closed(1.0).value, lambda: 1 / (2 * pi) + g / pi - ls / pi, lambda: _sinh_oracle(1.0)),
        ("sinh2(2)", "int t atan t/sinh^2(2 pi t)", "-1/(8 pi) + gamma/(2 pi) - ln pi/(8 pi)",
         lambda: sinh_sq_closed(2.0).value, lambda: -1 / (8 * pi) + g / (2 * pi) - lnpi / (8 * pi),
         lambda: _sinh_oracle(2.0)),
    ]
    qs = [q1, q2, q4, q2, q4, q1, q2, q4, q1, q2, q4, q1, q2, q4, q1, q2, q4, 1.0, 2.0]
    return tuple(SpecialValue(*r, q=q) for r, q in zip(rows, qs))


SPECIAL_VALUES = _special_values()
