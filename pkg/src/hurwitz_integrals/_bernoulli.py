"""Exact Bernoulli numbers, filled on demand and shared by all modules."""
import threading
from fractions import Fraction
from math import comb, factorial

_lock = threading.Lock()
_numbers = [Fraction(1)]
# B_{2j}/(2j)! as Fractions, index j; used by the asymptotic tails
_tail_coeffs = [Fraction(1)]


def _extend(n):
    with _lock:
        # recheck under the lock; another thread may have filled it
        for k in range(len(_numbers), n + 1):
            acc = Fraction(0)
            for j in range(k):
                acc += comb(k + 1, j) * _numbers[j]
            _numbers.append(-acc / (k + 1))


def bernoulli(n):
    if n >= len(_numbers):
        _extend(n)
    return _numbers[n]


def tail_coefficient(j):
    """B_{2j} / (2j)!"""
    if j >= len(_tail_coeffs):
        bernoulli(2 * j)
        with _lock:
            for i in range(len(_tail_coeffs), j + 1):
                _tail_coeffs.append(_numbers[2 * i] / factorial(2 * i))
    return _tail_coeffs[j]


_tail_floats = []


def tail_coefficient_float(j):
    if j >= len(_tail_floats):
        tail_coefficient(j)
        with _lock:
            for i in range(len(_tail_floats), j + 1):
                _tail_floats.append(float(_tail_coeffs[i]))
    return _tail_floats[j]
