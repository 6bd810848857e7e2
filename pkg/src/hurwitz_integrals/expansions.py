"""Taylor coefficients of sin/cos(z arctan t)(1+t^2)^(-z/2) and the
terminating trigonometric polynomials for integer order.

For integer m,

    cos(m atan t) = (1+t^2)^(-m/2) sum_k (-1)^k C(m, 2k) t^(2k)
    sin(m atan t) = (1+t^2)^(-m/2) sum_k (-1)^k C(m, 2k+1) t^(2k+1)

and both sums can be rewritten as polynomials in u = 1 + t^2.  All
coefficients here are exact (int or Fraction).
"""
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .special_core import binomial, pochhammer


class Basis(enum.Enum):
    POWERS_OF_T = "t"
    POWERS_OF_ONE_PLUS_T2 = "1+t^2"


class Parity(enum.Enum):
    SINE_LIKE = "sin"
    COSINE_LIKE = "cos"


def _exact(z):
    if isinstance(z, float):
        return Fraction(z)
    return z


def taylor_coeff_sin(z, k):
    """Coefficient of t^(2k+1) in sin(z atan t)(1+t^2)^(-z/2)."""
    if k < 0:
        raise DomainError("taylor_coeff_sin needs k >= 0, got %r" % k)
    c = Fraction(pochhammer(_exact(z), 2 * k + 1)) / math.factorial(2 * k + 1)
    c = -c if k % 2 else c
    return c if not isinstance(z, float) else float(c)


def taylor_coeff_cos(z, k):
    """Coefficient of t^(2k) in cos(z atan t)(1+t^2)^(-z/2)."""
    if k < 0:
        raise DomainError("taylor_coeff_cos needs k >= 0, got %r" % k)
    c = Fraction(pochhammer(_exact(z), 2 * k)) / math.factorial(2 * k)
    c = -c if k % 2 else c
    return c if not isinstance(z, float) else float(c)


@dataclass(frozen=True)
class TrigPolynomial:
    """cos(m atan t) or sin(m atan t) as an exact polynomial.

    ``POWERS_OF_T``: coefficient i multiplies t^(2i) (cosine) or t^(2i+1) (sine).
    ``POWERS_OF_ONE_PLUS_T2``: coefficient i multiplies (1+t^2)^i, with an
    extra factor t for the sine.  In both bases the sum is finally scaled
    by (1+t^2)^(-m/2).
    """

    m: int
    coeffs: tuple
    basis: Basis
    parity: Parity

    def polynomial(self, t):
        """The bare polynomial part at t (no (1+t^2)^(-m/2) factor)."""
        if self.basis is Basis.POWERS_OF_T:
            x = t * t
            lead = t if self.parity is Parity.SINE_LIKE else 1
        else:
            x = 1 + t * t
            lead = t if self.parity is Parity.SINE_LIKE else 1
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return lead * acc

    def __call__(self, t):
        """sin or cos of m atan t.

        The polynomial is summed exactly (the u = 1+t^2 basis cancels
        badly in floating point); only the final scaling is rounded.
        """
        t = float(t)
        return float(self.polynomial(Fraction(t))) * (1.0 + t * t) ** (-self.m / 2.0)


def _check_order(m):
    if int(m) != m or m < 1:
        raise DomainError("trigonometric polynomial order must be an integer >= 1, got %r" % m)
    return int(m)


def trig_poly_in_t(m, parity):
    """Exact coefficients of the terminating expansion in powers of t."""
    m = _check_order(m)
    parity = Parity(parity)
    if parity is Parity.COSINE_LIKE:
        coeffs = [(-1) ** k * binomial(m, 2 * k) for k in range(m // 2 + 1)]
    else:
        coeffs = [(-1) ** k * binomial(m, 2 * k + 1) for k in range((m - 1) // 2 + 1)]
    return TrigPolynomial(m, tuple(coeffs), Basis.POWERS_OF_T, parity)


def trig_poly_in_1pt2(m, parity):
    """Exact coefficients of the expansion in powers of 1 + t^2."""
    m = _check_order(m)
    parity = Parity(parity)
    coeffs = []
    if parity is Parity.COSINE_LIKE:
        for p in range(m // 2 + 1):
            c = Fraction(m, m - p) * binomial(m - p, p) * Fraction(2) ** (m - 2 * p - 1)
            coeffs.append((-1) ** p * c)
    else:
        for p in range((m - 1) // 2 + 1):
            coeffs.append((-1) ** p * binomial(m - p - 1, p) * Fraction(2) ** (m - 2 * p - 1))
    return TrigPolynomial(m, tuple(_normalize(c) for c in coeffs), Basis.POWERS_OF_ONE_PLUS_T2, parity)


def _normalize(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def to_one_plus_t2_basis(poly):
    """Rewrite a POWERS_OF_T polynomial via t^2 = (1+t^2) - 1, exactly."""
    if poly.basis is Basis.POWERS_OF_ONE_PLUS_T2:
        return poly
    out = [0] * len(poly.coeffs)
    for k, c in enumerate(poly.coeffs):
        # (u - 1)^k = sum_j C(k, j) u^j (-1)^(k-j)
        for j in range(k + 1):
            out[j] += c * binomial(k, j) * (-1) ** (k - j)
    return TrigPolynomial(poly.m, tuple(_normalize(c) for c in out), Basis.POWERS_OF_ONE_PLUS_T2, poly.parity)


def binomial_collapse_identity(m, j):
    """Both sides of  sum_{k=j}^{(m-1)//2} C(m,2k+1) C(k,j) = C(m-j-1, j) 2^(m-2j-1)."""
    m = _check_order(m)
    top = (m - 1) // 2
    if int(j) != j or not 0 <= j <= top:
        raise DomainError("binomial_collapse_identity needs 0 <= j <= %d for m = %d, got %r" % (top, m, j))
    lhs = sum(binomial(m, 2 * k + 1) * binomial(k, j) for k in range(j, top + 1))
    rhs = binomial(m - j - 1, j) * 2 ** (m - 2 * j - 1)
    return lhs, rhs


def orthogonality_sum(k, p):
    """sum_{j=1}^k (-1)^j j C(2k-j-1, k-j) C(p, j-p); equals (-1)^k k if p == k else 0."""
    if k < 1 or p < 1:
        raise DomainError("orthogonality_sum needs k, p >= 1, got (%r, %r)" % (k, p))
    return sum((-1) ** j * j * binomial(2 * k - j - 1, k - j) * binomial(p, j - p) for j in range(1, k + 1))


def evaluation_sums(k):
    """(sum_j 2^j C(2k-j-1, k-j),  sum_j j 2^j C(2k-j-1, k-j)) over j = 1..k."""
    if k < 1:
        raise DomainError("evaluation_sums needs k >= 1, got %r" % k)
    w = [2 ** j * binomial(2 * k - j - 1, k - j) for j in range(1, k + 1)]
    return sum(w), sum(j * x for j, x in enumerate(w, start=1))


def ode_residual(z, t, n_terms=30):
    """(1+t^2) g'' + 2t(z+1) g' + z(z+1) g for the truncated sine series g.

    g(t) = sum_{k<n_terms} a_k t^(2k+1) with a_k = taylor_coeff_sin(z, k).
    The arithmetic is exact (floats are converted to their exact binary
    value), so the result only reflects truncation; it is rounded to a
    float at the end.
    """
    if not abs(t) < 1:
        raise DomainError("ode_residual needs |t| < 1, got %r" % (t,))
    if n_terms < 1:
        raise DomainError("ode_residual needs n_terms >= 1, got %r" % n_terms)
    zq = _exact(z)
    tq = _exact(t)
    g = d1 = d2 = Fraction(0)
    a = Fraction(zq)  # a_0 = z
    t2 = tq * tq
    pw = Fraction(1)  # t^(2k)
    for k in range(n_terms):
        n = 2 * k + 1
        g += a * pw * tq
        d1 += a * n * pw
        if k > 0:
            d2 += a * n * (n - 1) * pw / tq
        # a_{k+1} = -a_k (z+2k+1)(z+2k+2) / ((2k+2)(2k+3))
        a = -a * (zq + n) * (zq + n + 1) / ((n + 1) * (n + 2))
        pw *= t2
        if a == 0:
            break
    return float((1 + t2) * d2 + 2 * tq * (zq + 1) * d1 + zq * (zq + 1) * g)
