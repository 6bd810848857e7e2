"""Exact combinatorial primitives and classical real special functions.

Bernoulli numbers, harmonic numbers and binomials are exact
(:class:`fractions.Fraction` / int).  The floating functions work in
binary64; the private ``_*`` variants take an arithmetic context and are
reused by the extended-precision paths in :mod:`closed_forms`.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import _bernoulli
from ._em import zeta_em
from ._numeric import FLOAT
from .errors import DomainError, PoleError


@dataclass(frozen=True)
class SpecialConstants:
    ln2: float
    ln_pi: float
    euler_gamma: float
    catalan: float
    zeta_prime_minus1: float
    ln_gamma_quarter: float
    ln_sqrt_2pi: float


_LN2 = 0.6931471805599453094
_LN_PI = 1.1447298858494001741

# reference digits from an independent 40-digit mpmath evaluation
CONSTANTS = SpecialConstants(
    ln2=_LN2,
    ln_pi=_LN_PI,
    euler_gamma=0.57721566490153286061,
    catalan=0.91596559417721901505,
    zeta_prime_minus1=-0.16542114370045092921,
    ln_gamma_quarter=1.2880225246980774573,
    ln_sqrt_2pi=(_LN2 + _LN_PI) / 2,
)


def _is_exact(x):
    return isinstance(x, Rational)


def bernoulli_number(k):
    """B_k as an exact Fraction (B_1 = -1/2 convention)."""
    if k < 0:
        raise DomainError("bernoulli_number needs k >= 0, got %r" % k)
    return _bernoulli.bernoulli(k)


def bernoulli_polynomial(m, q):
    """B_m(q).  Exact when q is an int or Fraction, binary64 otherwise."""
    if m < 0:
        raise DomainError("bernoulli_polynomial needs m >= 0, got %r" % m)
    if _is_exact(q):
        return _bernoulli_polynomial_exact(m, q)
    return _bernoulli_polynomial(m, q, FLOAT)


def _bernoulli_polynomial_exact(m, q):
    q = Fraction(q)
    return sum((math.comb(m, k) * bernoulli_number(k) * q ** (m - k) for k in range(m + 1)), Fraction(0))


def _bernoulli_polynomial(m, q, ctx):
    q = ctx.num(q)
    # Horner in q over the exact coefficients C(m,k) B_k, highest power first
    acc = ctx.num(0)
    for k in range(m + 1):
        acc = acc * q + ctx.num(math.comb(m, k) * _bernoulli.bernoulli(k))
    return acc


def harmonic(n):
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError("harmonic needs n >= 0, got %r" % n)
    return sum((Fraction(1, r) for r in range(1, n + 1)), Fraction(0))


def binomial(n, k):
    """Exact C(n, k); zero outside 0 <= k <= n.

    Negative ``n`` uses the generalized definition n(n-1)...(n-k+1)/k!.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def pochhammer(z, n):
    """Rising factorial (z)_n = z (z+1) ... (z+n-1); exact for rational z."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0, got %r" % n)
    acc = 1 if _is_exact(z) else 1.0
    for i in range(n):
        acc *= z + i
    return acc


def _check_positive(name, q):
    if not q > 0 or math.isinf(q):
        raise DomainError("%s needs a finite argument > 0, got %r" % (name, q))


def log_gamma(q):
    """ln Gamma(q) for q > 0."""
    _check_positive("log_gamma", q)
    return math.lgamma(q)


def _asymptotic_shift(ctx, m=0):
    return max(10.0, ctx.dps * 0.3665 + 4.0, 0.5 * m + 6.0)


def _digamma(q, ctx):
    q = ctx.num(q)
    x = q
    shift = []
    while x < _asymptotic_shift(ctx):
        shift.append(-1 / x)
        x += 1
    inv2 = 1 / (x * x)
    terms = [ctx.log(x), -1 / (2 * x)]
    pw = inv2
    for k in range(1, 200):
        b = ctx.num(_bernoulli.bernoulli(2 * k))
        t = -b * pw / (2 * k)
        terms.append(t)
        if abs(t) <= ctx.eps * abs(terms[0]):
            break
        pw *= inv2
    return ctx.fsum(terms + shift)


def digamma(q):
    """psi(q) = d/dq ln Gamma(q), by upward recurrence plus the asymptotic series."""
    _check_positive("digamma", q)
    return _digamma(q, FLOAT)


def _polygamma(m, q, ctx):
    q = ctx.num(q)
    x = q
    shift = []
    while x < _asymptotic_shift(ctx, m):
        shift.append(x ** -(m + 1))
        x += 1
    # zeta(m+1, x) ~ x^-m/m + x^-(m+1)/2 + sum_k B_2k/(2k)! (m+1)_{2k-1} x^-(m+2k)
    xm = x ** -m
    terms = [xm / m, xm / (2 * x)]
    poch = m + 1
    pw = xm / (x * x)
    prev = None
    inv2 = 1 / (x * x)
    for k in range(1, 300):
        c = _bernoulli.tail_coefficient(k)
        t = ctx.num(c) * poch * pw
        if prev is not None and abs(t) > prev:
            break  # smallest term reached
        terms.append(t)
        if abs(t) <= ctx.eps * abs(terms[0]):
            break
        prev = abs(t)
        poch *= (m + 2 * k) * (m + 2 * k + 1)
        pw *= inv2
    zeta = ctx.fsum(terms + shift)
    sign = 1 if m % 2 == 1 else -1
    return sign * math.factorial(m) * zeta


def polygamma(m, q):
    """psi^(m)(q) = d^{m+1}/dq^{m+1} ln Gamma(q) for m >= 1."""
    if m < 1 or int(m) != m:
        raise DomainError("polygamma needs an integer order m >= 1 (use digamma for m = 0), got %r" % m)
    _check_positive("polygamma", q)
    return _polygamma(int(m), q, FLOAT)


def _sin_half_pi(s):
    """sin(pi s / 2), exact at integers."""
    if float(s).is_integer():
        return (0.0, 1.0, 0.0, -1.0)[int(s) % 4]
    return math.sin(math.pi * s / 2)


def riemann_zeta(s):
    """zeta(s) for real s != 1."""
    if s == 1:
        raise PoleError("riemann_zeta has a pole at s = 1")
    if s <= 0 and float(s).is_integer():
        n = 1 - int(s)
        # zeta(1 - n) = -B_n(1)/n, rounded once from the exact rational
        return float(-_bernoulli_polynomial_exact(n, 1) / n)
    if s >= 0:
        return zeta_em(s, 1.0)[0]
    sn = _sin_half_pi(s)
    if sn == 0.0:
        return 0.0
    # functional equation zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    log_mag = s * _LN2 + (s - 1) * _LN_PI + math.lgamma(1 - s)
    return sn * math.exp(log_mag) * zeta_em(1 - s, 1.0)[0]


def zeta_prime_neg(n):
    """zeta'(-n) for integer n >= 0."""
    if n < 0 or int(n) != n:
        raise DomainError("zeta_prime_neg needs an integer n >= 0, got %r" % n)
    n = int(n)
    if n == 0:
        return -CONSTANTS.ln_sqrt_2pi
    log_2pi = _LN2 + _LN_PI
    if n % 2 == 0:
        k = n // 2
        mag = math.exp(math.lgamma(n + 1) - n * log_2pi)
        return (-1) ** k * mag * riemann_zeta(n + 1) / 2
    # derivative of the functional equation at s = -n (odd n: cot term vanishes)
    chi = _sin_half_pi(-n) * math.exp(-n * _LN2 + (-n - 1) * _LN_PI + math.lgamma(n + 1))
    zeta_v, _, dzeta_v, _ = zeta_em(n + 1, 1.0, derivative=True)
    return chi * ((log_2pi - digamma(n + 1)) * zeta_v - dzeta_v)
