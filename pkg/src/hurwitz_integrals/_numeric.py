"""Arithmetic contexts shared by the evaluators.

Everything runs in binary64 by default.  ``Extended`` wraps a private
mpmath context so the same generic code can be re-run with more digits
when an error estimate says binary64 is not enough.
"""
import math
from fractions import Fraction

import mpmath


class Binary64:
    name = "binary64"
    dps = 15
    eps = 2.0 ** -52
    pi = math.pi

    log = staticmethod(math.log)
    exp = staticmethod(math.exp)
    sqrt = staticmethod(math.sqrt)
    fsum = staticmethod(math.fsum)
    loggamma = staticmethod(math.lgamma)

    def num(self, x):
        return float(x)

    def to_float(self, x):
        return x


class Extended:
    """mpmath-backed context with ``dps`` decimal digits."""

    name = "extended"

    def __init__(self, dps):
        self.dps = int(dps)
        self.mp = mpmath.MPContext()
        self.mp.dps = self.dps
        self.eps = self.mp.mpf(10) ** (-self.dps)
        self.pi = +self.mp.pi
        self.log = self.mp.log
        self.exp = self.mp.exp
        self.sqrt = self.mp.sqrt
        self.fsum = self.mp.fsum
        self.loggamma = self.mp.loggamma

    def num(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def to_float(self, x):
        return float(x)


FLOAT = Binary64()


def extended(dps):
    return Extended(dps)


def digits_needed(rel_err, target=1e-15, floor=20, cap=120):
    """Decimal digits required to bring a binary64 relative error down to ``target``."""
    if math.isnan(rel_err) or math.isinf(rel_err):
        return cap
    if rel_err <= target:
        return floor
    extra = math.log10(rel_err / target)
    return int(min(cap, max(floor, math.ceil(16 + extra + 6))))
