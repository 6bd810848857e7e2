# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature core for the builtin integrand families.

Same algorithm, same constants and same summation order as
``_quadcore_py``; only the interpreter overhead is gone.
"""
from libc.math cimport atan, cos, exp, expm1, fabs, isfinite, log1p, pow, sin, sinh
from libc.stdlib cimport free, malloc, realloc

cdef double[11] XGK
cdef double[11] WGK
cdef double[5] WG

XGK[:] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
]
WGK[:] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208798726690,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
]
WG[:] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
]

cdef double EPMACH = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308
cdef double TWO_PI = 6.283185307179586
cdef double LAURENT_CUTOFF = 1e-8
cdef double EXP_MAX = 700.0


cdef struct Spec:
    int fam
    double p
    int kern
    double q


cdef inline double f_over_t(const Spec* s, double t) nogil:
    cdef double p = s.p
    cdef double a, l1
    if s.fam == 0:
        return pow(t, p - 1.0)
    elif s.fam == 1:
        return exp(-(p + 1.0) * log1p(t * t))
    elif s.fam == 2:
        return pow(t, p) * (atan(t) / t)
    elif s.fam == 3:
        return pow(t, p) * (log1p(t * t) / t)
    elif s.fam == 4:
        return sin(p * atan(t)) * exp(-0.5 * p * log1p(t * t)) / t
    elif s.fam == 5:
        l1 = log1p(t * t)
        return sin(p * atan(t)) * exp(-0.5 * p * l1) * (l1 / t)
    else:
        a = atan(t)
        return cos(p * a) * exp(-0.5 * p * log1p(t * t)) * (a / t)


cdef inline double t_kernel(const Spec* s, double t) nogil:
    cdef double q = s.q
    cdef double x = TWO_PI * q * t
    if s.kern == 0:
        if t < LAURENT_CUTOFF:
            return (1.0 - 0.5 * x) / (TWO_PI * q)
        if x > EXP_MAX:
            return t * exp(-x)
        return t / expm1(x)
    elif s.kern == 1:
        if x > EXP_MAX:
            return t * exp(-x)
        return t / (exp(x) + 1.0)
    elif s.kern == 2:
        if t < LAURENT_CUTOFF:
            return (1.0 - x * x / 6.0) / (TWO_PI * q)
        if x > EXP_MAX:
            return 2.0 * t * exp(-x)
        return t / sinh(x)
    return t


cdef inline double g(const Spec* s, double t) nogil:
    return f_over_t(s, t) * t_kernel(s, t)


cdef int qk21(const Spec* s, double a, double b, double* result, double* abserr, double* absres) nogil:
    cdef double centr = 0.5 * (a + b)
    cdef double hlgth = 0.5 * (b - a)
    cdef double dhlgth = fabs(hlgth)
    cdef double fc = g(s, centr)
    cdef double resg = 0.0
    cdef double resk = WGK[10] * fc
    cdef double resabs = fabs(resk)
    cdef double fv1[10]
    cdef double fv2[10]
    cdef double absc, f1, f2, fsum, reskh, resasc, err
    cdef int j, jtw, jtwm1
    for j in range(5):
        jtw = 2 * j + 1
        absc = hlgth * XGK[jtw]
        f1 = g(s, centr - absc)
        f2 = g(s, centr + absc)
        fv1[jtw] = f1
        fv2[jtw] = f2
        fsum = f1 + f2
        resg += WG[j] * fsum
        resk += WGK[jtw] * fsum
        resabs += WGK[jtw] * (fabs(f1) + fabs(f2))
    for j in range(5):
        jtwm1 = 2 * j
        absc = hlgth * XGK[jtwm1]
        f1 = g(s, centr - absc)
        f2 = g(s, centr + absc)
        fv1[jtwm1] = f1
        fv2[jtwm1] = f2
        fsum = f1 + f2
        resk += WGK[jtwm1] * fsum
        resabs += WGK[jtwm1] * (fabs(f1) + fabs(f2))
    reskh = resk * 0.5
    resasc = WGK[10] * fabs(fc - reskh)
    for j in range(10):
        resasc += WGK[j] * (fabs(fv1[j] - reskh) + fabs(fv2[j] - reskh))
    result[0] = resk * hlgth
    resabs *= dhlgth
    resasc *= dhlgth
    err = fabs((resk - resg) * hlgth)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, pow(200.0 * err / resasc, 1.5))
    if resabs > UFLOW / (50.0 * EPMACH):
        err = max(EPMACH * 50.0 * resabs, err)
    abserr[0] = err
    absres[0] = resabs
    if not isfinite(result[0]) or not isfinite(err):
        return -1
    return 0


def adaptive_builtin(int fam, double p, int kern, double q, breakpoints,
                     double epsabs, double epsrel, int limit):
    """Globally adaptive GK21; returns ``(result, abserr, neval, ier, npanels)``."""
    if fam < 0 or fam > 6:
        raise ValueError("unknown integrand family %r" % fam)
    if kern < 0 or kern > 3:
        raise ValueError("unknown kernel %r" % kern)
    cdef Spec spec
    spec.fam = fam
    spec.p = p
    spec.kern = kern
    spec.q = q
    cdef list bp = [float(x) for x in breakpoints]
    cdef int n0 = len(bp) - 1
    cdef int cap = max(limit, n0) + 2
    cdef double* left = <double*> malloc(cap * sizeof(double))
    cdef double* right = <double*> malloc(cap * sizeof(double))
    cdef double* res = <double*> malloc(cap * sizeof(double))
    cdef double* err = <double*> malloc(cap * sizeof(double))
    cdef double* absres = <double*> malloc(cap * sizeof(double))
    cdef char* frozen = <char*> malloc(cap * sizeof(char))
    cdef int n = 0, i, worst, ier = 0, rc = 0
    cdef long neval = 0
    cdef double result = 0.0, abserr = 0.0, floor, worst_err, a, b, mid, r1, e1, r2, e2, ra1, ra2
    try:
        for i in range(n0):
            a = bp[i]
            b = bp[i + 1]
            with nogil:
                rc = qk21(&spec, a, b, &res[n], &err[n], &absres[n])
            if rc != 0:
                raise FloatingPointError("non-finite integrand value on [%r, %r]" % (a, b))
            left[n] = a
            right[n] = b
            frozen[n] = 0
            n += 1
        neval = 21 * n
        with nogil:
            while True:
                result = 0.0
                for i in range(n):
                    result += res[i]
                abserr = 0.0
                for i in range(n):
                    abserr += err[i]
                if abserr <= max(epsabs, epsrel * fabs(result)):
                    break
                floor = 0.0
                for i in range(n):
                    floor += absres[i]
                if abserr <= 100.0 * EPMACH * floor:
                    ier = 3
                    break
                if n >= limit:
                    ier = 1
                    break
                worst = -1
                worst_err = -1.0
                for i in range(n):
                    if err[i] > worst_err and not frozen[i]:
                        worst = i
                        worst_err = err[i]
                if worst < 0:
                    ier = 2
                    break
                a = left[worst]
                b = right[worst]
                mid = 0.5 * (a + b)
                if not (a < mid and mid < b) or (b - a) <= 1e3 * EPMACH * max(fabs(a), fabs(b)):
                    frozen[worst] = 1
                    continue
                rc = qk21(&spec, a, mid, &r1, &e1, &ra1)
                if rc != 0:
                    break
                rc = qk21(&spec, mid, b, &r2, &e2, &ra2)
                if rc != 0:
                    break
                neval += 42
                right[worst] = mid
                res[worst] = r1
                err[worst] = e1
                absres[worst] = ra1
                left[n] = mid
                right[n] = b
                res[n] = r2
                err[n] = e2
                absres[n] = ra2
                frozen[n] = 0
                n += 1
        if rc != 0:
            raise FloatingPointError("non-finite integrand value near [%r, %r]" % (a, b))
        return result, abserr, neval, ier, n
    finally:
        free(left)
        free(right)
        free(res)
        free(err)
        free(absres)
        free(frozen)
