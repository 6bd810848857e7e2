"""Hurwitz zeta, its z-derivative, and the balanced negapolygamma functions.

Two independent routes are offered for zeta(z, q) and its derivative:
Euler-Maclaurin summation (term-wise differentiated for the derivative)
and Hermite's integral representation evaluated by the quadrature oracle,

    zeta(z, q) = q^-z / 2 + q^(1-z)/(z-1)
                 + 2 q^(1-z) int_0^inf sin(z atan t) (1+t^2)^(-z/2) / (e^{2 pi q t} - 1) dt.
"""
import enum
import math
import warnings
from fractions import Fraction

from . import quadrature
from ._em import zeta_em, zeta_em_checked
from ._numeric import FLOAT
from .errors import DomainError, PoleError
from .special_core import _bernoulli_polynomial, harmonic, zeta_prime_neg, bernoulli_number

POLE_GUARD = 1e-6
_HERMITE_TOL = 1e-13


class HurwitzBackend(enum.Enum):
    EULER_MACLAURIN = "em"
    HERMITE_QUADRATURE = "hermite"


def _check_args(z, q, name):
    if not q > 0 or math.isinf(q):
        raise DomainError("%s needs a finite q > 0, got %r" % (name, q))
    if math.isnan(z) or math.isinf(z):
        raise DomainError("%s needs a finite real z, got %r" % (name, z))
    if abs(z - 1) < POLE_GUARD:
        raise PoleError("%s refuses |z - 1| < %g (pole at z = 1), got z = %r" % (name, POLE_GUARD, z))


def _hermite_zeta(z, q):
    r = quadrature.integrate(quadrature.IntegrandSpec.hermite_sin(z), "bose", q, _HERMITE_TOL)
    a = q ** (1 - z)
    head = 0.5 * q ** -z + a / (z - 1)
    value = head + 2 * a * r.value
    err = 2 * a * r.abs_error_estimate + 4 * FLOAT.eps * (abs(head) + abs(2 * a * r.value))
    return value, err


def _hermite_zeta_prime(z, q):
    S = quadrature.integrate(quadrature.IntegrandSpec.hermite_sin(z), "bose", q, _HERMITE_TOL)
    C = quadrature.integrate(quadrature.IntegrandSpec.hermite_cos_atan(z), "bose", q, _HERMITE_TOL)
    SL = quadrature.integrate(quadrature.IntegrandSpec.hermite_sin_log(z), "bose", q, _HERMITE_TOL)
    lq = math.log(q)
    a = q ** (1 - z)
    terms = [
        -0.5 * lq * q ** -z,
        -lq * a / (z - 1),
        -a / (z - 1) ** 2,
        -2 * lq * a * S.value,
        2 * a * C.value,
        -a * SL.value,
    ]
    err = 2 * a * (abs(lq) * S.abs_error_estimate + C.abs_error_estimate) + a * SL.abs_error_estimate
    return math.fsum(terms), err + 4 * FLOAT.eps * sum(abs(t) for t in terms)


def _zeta_with_error(z, q, backend):
    if backend is HurwitzBackend.HERMITE_QUADRATURE:
        return _hermite_zeta(z, q)
    v, e, _, _ = zeta_em_checked(z, q)
    return v, e


def hurwitz_zeta(z, q, backend=HurwitzBackend.EULER_MACLAURIN):
    """zeta(z, q) for real z != 1 and q > 0."""
    backend = HurwitzBackend(backend)
    _check_args(z, q, "hurwitz_zeta")
    return _zeta_with_error(z, q, backend)[0]


def hurwitz_zeta_with_error(z, q, backend=HurwitzBackend.EULER_MACLAURIN):
    """``(zeta(z, q), absolute error estimate)``."""
    backend = HurwitzBackend(backend)
    _check_args(z, q, "hurwitz_zeta")
    return _zeta_with_error(z, q, backend)


def hurwitz_zeta_prime_with_error(z, q, backend=HurwitzBackend.EULER_MACLAURIN):
    """``(d/dz zeta(z, q), absolute error estimate)``."""
    backend = HurwitzBackend(backend)
    _check_args(z, q, "hurwitz_zeta_prime")
    if backend is HurwitzBackend.HERMITE_QUADRATURE:
        if abs(z) > 10:
            warnings.warn(
                "Hermite derivative representation is only validated for |z| <= 10 (z = %r)" % z,
                RuntimeWarning,
                stacklevel=3,
            )
        return _hermite_zeta_prime(z, q)
    _, _, d, e = zeta_em_checked(z, q, derivative=True)
    return d, e


def hurwitz_zeta_prime(z, q, backend=HurwitzBackend.EULER_MACLAURIN):
    """d/dz zeta(z, q).

    The default backend differentiates the Euler-Maclaurin expansion term
    by term; ``HERMITE_QUADRATURE`` uses the three-integral form obtained
    by differentiating Hermite's representation under the integral sign.
    """
    return hurwitz_zeta_prime_with_error(z, q, backend)[0]


def _check_order(m, name, low=1):
    if int(m) != m or m < low:
        raise DomainError("%s needs an integer order >= %d, got %r" % (name, low, m))
    return int(m)


def _balanced_A(m, q, ctx):
    if ctx is FLOAT:
        _, _, d, e = zeta_em_checked(1 - m, q, derivative=True)
    else:
        _, _, d, e = zeta_em(1 - m, q, ctx, derivative=True)
    return m * d, m * e


def balanced_A(m, q):
    """A_m(q) = m zeta'(1-m, q)."""
    m = _check_order(m, "balanced_A")
    _check_args(1 - m, q, "balanced_A")
    return _balanced_A(m, q, FLOAT)[0]


def _negapolygamma(m, q, ctx=FLOAT):
    """``(psi^(-m)(q), error estimate)`` evaluated in ``ctx``."""
    a, a_err = _balanced_A(m, q, ctx)
    h = harmonic(m - 1)
    b = _bernoulli_polynomial(m, ctx.num(q), ctx)
    fact = math.factorial(m)
    hb = ctx.num(h) * b
    value = (a - hb) / fact
    err = (a_err + 4 * ctx.eps * (abs(a) + abs(hb))) / fact
    return value, err


def negapolygamma(m, q):
    """Balanced negapolygamma psi^(-m)(q) = [A_m(q) - H_{m-1} B_m(q)] / m!.

    ``q == 0`` returns the boundary value :func:`negapolygamma_at_zero`.
    """
    m = _check_order(m, "negapolygamma")
    if q == 0:
        return negapolygamma_at_zero(m - 1)
    _check_args(1 - m, q, "negapolygamma")
    return _negapolygamma(m, q)[0]


def _negapolygamma_at_zero_exact_part(n):
    # H_n B_{n+1} / (n+1), exact
    return harmonic(n) * bernoulli_number(n + 1) / (n + 1)


def negapolygamma_at_zero(n):
    """psi^(-1-n)(0) = [zeta'(-n) - H_n B_{n+1}/(n+1)] / n!.

    For n >= 1 this is the limit q -> 0+ of psi^(-1-n)(q).  For n = 0 the
    function ln Gamma(q) - ln sqrt(2 pi) diverges at 0 and the value is the
    boundary convention zeta'(0) only.
    """
    n = _check_order(n, "negapolygamma_at_zero", low=0)
    return (zeta_prime_neg(n) - float(_negapolygamma_at_zero_exact_part(n))) / math.factorial(n)


def _negapolygamma_at_zero_ctx(n, ctx):
    if ctx is FLOAT:
        return negapolygamma_at_zero(n), 4 * FLOAT.eps * (abs(zeta_prime_neg(n)) + 1)
    mp = ctx.mp
    zp = mp.zeta(-n, 1, 1) if n > 0 else -mp.log(2 * mp.pi) / 2
    v = (zp - ctx.num(Fraction(_negapolygamma_at_zero_exact_part(n)))) / math.factorial(n)
    return v, ctx.eps * (abs(v) + 1)


def digamma_limit_check(q, steps=(0.1, 0.05, 0.025)):
    """Extrapolate 1/(z-1) - zeta(z, q) to z -> 1 from both sides.

    Symmetric pairs z = 1 +- h cancel the odd powers of h; the even part is
    removed by Richardson extrapolation in h^2.
    """
    if not q > 0:
        raise DomainError("digamma_limit_check needs q > 0, got %r" % (q,))
    col = []
    for h in steps:
        up = 1.0 / h - zeta_em(1 + h, q)[0]
        dn = -1.0 / h - zeta_em(1 - h, q)[0]
        col.append(0.5 * (up + dn))
    hs = [h * h for h in steps]
    # Neville table in the variable h^2, evaluated at 0
    for level in range(1, len(col)):
        col = [
            (hs[i] * col[i + 1] - hs[i + level] * col[i]) / (hs[i] - hs[i + level])
            for i in range(len(col) - 1)
        ]
    return col[0]
