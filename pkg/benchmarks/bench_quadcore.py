"""Compare the compiled and pure-Python quadrature cores.

    python benchmarks/bench_quadcore.py [--repeat N]

Both cores run the same adaptive Gauss-Kronrod algorithm with the same
summation order, so besides timing this also confirms the results are
bit-identical.
"""
import argparse
import math
import time

from hurwitz_integrals import _quadcore_py
from hurwitz_integrals import quadrature as Q

try:
    from hurwitz_integrals import _quadcore as compiled
except ImportError:
    compiled = None

CASES = [
    ("t^3 bose q=1", _quadcore_py.FAM_POWER, 3.0, _quadcore_py.KERN_BOSE, 1.0),
    ("t/(1+t^2)^9 fermi q=0.25", _quadcore_py.FAM_RATIONAL, 8.0, _quadcore_py.KERN_FERMI, 0.25),
    ("t^10 atan t bose q=0.25", _quadcore_py.FAM_ATAN, 10.0, _quadcore_py.KERN_BOSE, 0.25),
    ("t^11 ln(1+t^2) csch q=4", _quadcore_py.FAM_LOG, 11.0, _quadcore_py.KERN_CSCH, 4.0),
    ("hermite sin z=-5 bose q=0.25", _quadcore_py.FAM_HSIN, -5.0, _quadcore_py.KERN_BOSE, 0.25),
    ("hermite cos atan z=7.5 bose q=0.25", _quadcore_py.FAM_HCOS_ATAN, 7.5, _quadcore_py.KERN_BOSE, 0.25),
]


def _breakpoints(q, p):
    a = 2 * math.pi * q
    T = (2 * max(p, 0) + 40) / a
    return Q._breakpoints(a, T, p)


def _time(fn, repeat):
    best = math.inf
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled core not built; only the pure-Python core is available")
    print("%-36s %12s %12s %8s %s" % ("case", "python [ms]", "compiled [ms]", "speedup", "identical"))
    for name, fam, p, kern, q in CASES:
        bps = _breakpoints(q, p)

        def run(core):
            return core.adaptive_builtin(fam, p, kern, q, bps, 0.0, 1e-13, 10000)

        tp, rp = _time(lambda: run(_quadcore_py), args.repeat)
        if compiled is None:
            print("%-36s %12.3f %12s %8s %s" % (name, tp * 1e3, "-", "-", "-"))
            continue
        tc, rc = _time(lambda: run(compiled), args.repeat)
        print("%-36s %12.3f %12.3f %7.1fx %s" % (name, tp * 1e3, tc * 1e3, tp / tc, rp == rc))


if __name__ == "__main__":
    main()
