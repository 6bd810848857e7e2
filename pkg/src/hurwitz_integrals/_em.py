"""Euler-Maclaurin evaluation of the Hurwitz zeta function and its z-derivative.

Both quantities come out of one pass: the derivative is the term-wise
z-derivative of the same expansion.  The argument is shifted by direct
summation until ``x = q + N`` is large enough for the Bernoulli tail to
reach the context's epsilon; the tail is stopped at the first term below
epsilon (or restarted with a larger shift if it starts growing first).
"""
import math

from . import _bernoulli
from ._numeric import FLOAT, Extended, digits_needed
from .errors import AccuracyError


def _shift_target(z, ctx):
    base = 10.0 if ctx is FLOAT else ctx.dps * math.log(10) / (2 * math.pi) + 4.0
    return base + max(z, 0.0) / 3.0


def _coeff(j, ctx):
    if ctx is FLOAT:
        return _bernoulli.tail_coefficient_float(j)
    return ctx.num(_bernoulli.tail_coefficient(j))


def zeta_em(z, q, ctx=FLOAT, derivative=False):
    """Return ``(zeta, zeta_err, dzeta, dzeta_err)`` for real z != 1, q > 0.

    The error figures are estimates of rounding plus truncation error in
    the same units as the values.  ``dzeta`` and ``dzeta_err`` are None
    unless ``derivative`` is set.
    """
    zf = float(z)
    target = _shift_target(zf, ctx)
    z = ctx.num(z)
    q = ctx.num(q)
    eps = ctx.eps
    for _attempt in range(8):
        n_direct = max(0, int(math.ceil(target - float(q))))
        vals = []
        dvals = []
        for n in range(n_direct):
            y = q + n
            ly = ctx.log(y)
            v = ctx.exp(-z * ly)
            vals.append(v)
            if derivative:
                dvals.append(-v * ly)
        x = q + n_direct
        lx = ctx.log(x)
        xz = ctx.exp(-z * lx)
        zm1 = z - 1
        vals.append(xz * x / zm1)
        vals.append(xz / 2)
        if derivative:
            dvals.append(-lx * xz * x / zm1 - xz * x / (zm1 * zm1))
            dvals.append(-lx * xz / 2)
        scale = sum(abs(v) for v in vals)
        dscale = sum(abs(v) for v in dvals) if derivative else 0.0

        poch = z          # (z)_{2j-1}
        dpoch = ctx.num(1)  # d/dz (z)_{2j-1}
        pw = xz / x       # x^{1-z-2j}
        inv_x2 = 1 / (x * x)
        prev = prev_d = None
        converged = False
        for j in range(1, 400):
            c = _coeff(j, ctx)
            t = c * poch * pw
            at = abs(t)
            if derivative:
                dt = c * (dpoch - poch * lx) * pw
                adt = abs(dt)
            else:
                dt = adt = 0
            done = at <= eps * scale and (not derivative or adt <= eps * dscale)
            growing = prev is not None and j > 2 and at > prev and (not derivative or adt > prev_d)
            if growing and not done:
                break
            vals.append(t)
            if derivative:
                dvals.append(dt)
            if done:
                converged = True
                break
            prev, prev_d = at, adt
            # (z)_{2j+1} = (z)_{2j-1} (z+2j-1)(z+2j)
            f1 = z + (2 * j - 1)
            f2 = z + 2 * j
            dpoch = dpoch * f1 * f2 + poch * (f1 + f2)
            poch = poch * f1 * f2
            pw = pw * inv_x2
        if converged:
            value = ctx.fsum(vals)
            err = 4 * eps * scale + at
            if derivative:
                dvalue = ctx.fsum(dvals)
                derr = 4 * eps * (dscale + abs(dvalue)) + adt
                return value, err, dvalue, derr
            return value, err, None, None
        target *= 1.5
    raise AccuracyError("Euler-Maclaurin tail did not converge for z=%r, q=%r" % (zf, float(q)))


def zeta_em_checked(z, q, derivative=False, rel_target=1e-14, abs_floor=1e-30):
    """Binary64 results from :func:`zeta_em`, re-run with more digits when needed.

    For negative z the direct sum cancels heavily against a small result;
    the error estimate detects this and the evaluation is repeated in an
    extended context until the estimate drops below ``rel_target``.
    Returns floats in the same layout as :func:`zeta_em`.
    """
    res = zeta_em(z, q, FLOAT, derivative)

    def ok(r):
        good = r[1] <= max(rel_target * abs(r[0]), abs_floor)
        if derivative:
            good = good and r[3] <= max(rel_target * abs(r[2]), abs_floor)
        return good

    if ok(res):
        return res
    rel = max(res[1] / max(abs(res[0]), abs_floor), (res[3] / max(abs(res[2]), abs_floor)) if derivative else 0.0)
    dps = digits_needed(rel)
    while True:
        ctx = Extended(dps)
        r = zeta_em(z, q, ctx, derivative)
        out = tuple(None if v is None else float(v) for v in r)
        if ok(out) or dps >= 200:
            return out
        rel = max(out[1] / max(abs(out[0]), abs_floor), (out[3] / max(abs(out[2]), abs_floor)) if derivative else 0.0)
        dps = min(200, dps + max(10, digits_needed(rel, target=rel_target) - 16))
