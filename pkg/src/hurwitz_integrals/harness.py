"""Batch verification of the closed forms against the quadrature oracle.

A run produces a list of :class:`VerificationRecord` in a fixed order and
a summary.  Reports are JSON lines (header, records, summary) or CSV, with
every float written to 17 significant digits so binary64 values
round-trip exactly and two runs of the same configuration are
byte-identical.
"""
import csv
import io
import json
import math
import os
from dataclasses import dataclass, field, fields

from . import closed_forms as cf
from . import expansions as ex
from .closed_forms import FamilyId
from .errors import AccuracyError, DomainError, NoClosedFormError
from .quadrature import KernelKind
from .special_core import bernoulli_number, bernoulli_polynomial

REPORT_SCHEMA = "hurwitz-integrals/verify-report"
REPORT_VERSION = 1
CONFIG_ENV = "HURWITZ_INTEGRALS_CONFIG"

SUITES = ("closed_forms", "special_values", "recursions", "identities")

PASS, FAIL, NO_CLOSED_FORM = "pass", "fail", "no_closed_form"

RECORD_FIELDS = (
    "suite", "check", "family", "index", "kernel", "q",
    "closed_value", "oracle_value", "abs_diff", "rel_diff",
    "oracle_error_estimate", "tolerance", "status",
)


@dataclass(frozen=True)
class VerificationRecord:
    suite: str
    check: str
    family: object  # FamilyId or None
    q: object  # float or None
    closed_value: object
    oracle_value: object
    abs_diff: object
    rel_diff: object
    oracle_error_estimate: object
    tolerance: float
    status: str

    def as_dict(self):
        fam = self.family
        return {
            "suite": self.suite,
            "check": self.check,
            "family": fam.family if fam else None,
            "index": fam.index if fam else None,
            "kernel": fam.kernel.value if fam else None,
            "q": self.q,
            "closed_value": self.closed_value,
            "oracle_value": self.oracle_value,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "oracle_error_estimate": self.oracle_error_estimate,
            "tolerance": self.tolerance,
            "status": self.status,
        }


@dataclass(frozen=True)
class SuiteConfig:
    rel_tol: float = 1e-9
    safety_factor: float = 10.0
    q_grid: tuple = (0.25, 0.5, 1.0, 2.0, 4.0)
    k_max: dict = field(default_factory=lambda: {"I": 8, "T": 5, "L": 5, "variant": 3, "open": 3})
    output_format: str = "json"
    suites: tuple = SUITES

    def __post_init__(self):
        if not 1e-13 <= self.rel_tol <= 1e-3:
            raise DomainError("rel_tol must lie in [1e-13, 1e-3], got %r" % (self.rel_tol,))
        if not self.safety_factor > 0:
            raise DomainError("safety_factor must be > 0, got %r" % (self.safety_factor,))
        grid = tuple(float(q) for q in self.q_grid)
        if any(not q > 0 or math.isinf(q) for q in grid):
            raise DomainError("q_grid entries must be finite and > 0, got %r" % (self.q_grid,))
        object.__setattr__(self, "q_grid", grid)
        merged = {"I": 8, "T": 5, "L": 5, "variant": 3, "open": 3}
        merged.update({k: int(v) for k, v in dict(self.k_max).items()})
        if any(v < 0 for v in merged.values()):
            raise DomainError("k_max entries must be >= 0, got %r" % (merged,))
        object.__setattr__(self, "k_max", merged)
        if self.output_format not in ("json", "csv"):
            raise DomainError("output_format must be json or csv, got %r" % (self.output_format,))
        suites = tuple(self.suites)
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise DomainError("unknown suites %r (choose from %s)" % (unknown, ", ".join(SUITES)))
        object.__setattr__(self, "suites", tuple(s for s in SUITES if s in suites))

    @classmethod
    def from_mapping(cls, data):
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise DomainError("unknown config keys: %s" % ", ".join(sorted(extra)))
        kw = dict(data)
        for key in ("q_grid", "suites"):
            if key in kw:
                kw[key] = tuple(kw[key])
        return cls(**kw)

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_mapping(json.load(fh))

    @classmethod
    def default(cls):
        """Config from the file named by $HURWITZ_INTEGRALS_CONFIG, else the built-in defaults."""
        path = os.environ.get(CONFIG_ENV)
        return cls.from_file(path) if path else cls()

    def as_dict(self):
        return {
            "rel_tol": self.rel_tol,
            "safety_factor": self.safety_factor,
            "q_grid": list(self.q_grid),
            "k_max": dict(sorted(self.k_max.items())),
            "output_format": self.output_format,
            "suites": list(self.suites),
        }


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    records: tuple

    @property
    def summary(self):
        counts = {PASS: 0, FAIL: 0, NO_CLOSED_FORM: 0}
        for r in self.records:
            counts[r.status] += 1
        return {"total": len(self.records), "passed": counts[PASS], "failed": counts[FAIL],
                "no_closed_form": counts[NO_CLOSED_FORM]}

    @property
    def ok(self):
        return self.summary["failed"] == 0


# ---------------------------------------------------------------- comparisons

def _rel(d, ref):
    return d / abs(ref) if ref != 0 else (0.0 if d == 0 else math.inf)


def compare(suite, check, fid, q, closed, oracle_value, oracle_err, config):
    d = abs(closed - oracle_value)
    tol = max(config.rel_tol * abs(closed), config.safety_factor * oracle_err)
    return VerificationRecord(suite, check, fid, q, closed, oracle_value, d, _rel(d, closed),
                              oracle_err, tol, PASS if d <= tol else FAIL)


def _residual_record(suite, check, q, residual, tol):
    return VerificationRecord(suite, check, None, q, residual, 0.0, abs(residual), None, None, tol,
                              PASS if abs(residual) <= tol else FAIL)


def _exact_record(check, lhs, rhs):
    ok = lhs == rhs
    d = 0.0 if ok else float(abs(lhs - rhs))
    return VerificationRecord("identities", check, None, None, _num(lhs), _num(rhs), d, None, None, 0.0,
                              PASS if ok else FAIL)


def _num(x):
    return int(x) if isinstance(x, int) else str(x)


def _grid_families(config):
    km = config.k_max
    out = [FamilyId("I", k) for k in range(km["I"] + 1)]
    out += [FamilyId("T", 2 * k) for k in range(km["T"] + 1)]
    out += [FamilyId("L", 2 * k + 1) for k in range(km["L"] + 1)]
    for kern in (KernelKind.FERMI_PLUS, KernelKind.CSCH):
        out += [FamilyId("I", k, kern) for k in range(km["variant"] + 1)]
        out += [FamilyId("T", 2 * k, kern) for k in range(km["variant"] + 1)]
        out += [FamilyId("L", 2 * k + 1, kern) for k in range(km["variant"] + 1)]
    # members without a closed form: reported with the oracle value only
    out += [FamilyId("T", 2 * k + 1) for k in range(km["open"] + 1)]
    out += [FamilyId("L", 2 * k) for k in range(km["open"] + 1)]
    return sorted(set(out), key=FamilyId.sort_key)


def evaluate_record(fid, q, config, mode="both"):
    """One family member at one q.  ``mode`` is closed, oracle or both."""
    closed = oracle = None
    if mode in ("closed", "both"):
        try:
            closed = cf.closed_form(fid, q)
        except NoClosedFormError:
            if mode == "closed":
                raise
    if mode in ("oracle", "both"):
        oracle = cf.oracle(fid, q, max(1e-14, min(1e-12, config.rel_tol * 1e-2)))
    check = str(fid)
    if closed is None:
        return VerificationRecord("closed_forms", check, fid, q, None, oracle.value, None, None,
                                  oracle.abs_error_estimate, config.rel_tol, NO_CLOSED_FORM)
    if oracle is None:
        return VerificationRecord("closed_forms", check, fid, q, closed.value, None, None, None, None,
                                  config.rel_tol, PASS)
    return compare("closed_forms", check, fid, q, closed.value, oracle.value, oracle.abs_error_estimate, config)


def _closed_form_suite(config):
    for fid in _grid_families(config):
        for q in config.q_grid:
            try:
                yield evaluate_record(fid, q, config)
            except AccuracyError as exc:
                yield VerificationRecord("closed_forms", str(fid), fid, q, None, exc.estimate, None, None,
                                         exc.error_estimate, config.rel_tol, FAIL)


def _special_value_suite(config):
    grid = set(config.q_grid)
    sym_tol = 1e-10
    for sv in cf.SPECIAL_VALUES:
        q = sv.q
        if q not in grid:
            continue
        closed = sv.closed()
        sym = sv.symbolic()
        d = abs(closed - sym)
        yield VerificationRecord("special_values", sv.key + " symbolic", None, q, closed, sym, d, _rel(d, closed),
                                 None, sym_tol, PASS if d <= sym_tol else FAIL)
        o, oe = sv.oracle()
        yield compare("special_values", sv.key + " oracle", None, q, closed, o, oe, config)


def _recursion_suite(config):
    tol = config.rel_tol
    for q in config.q_grid:
        for m in range(9):
            yield _residual_record("recursions", "jplusk m=%d" % m, q, cf.jplusk_residual(m, q), tol)
        for m in range(1, 9):
            yield _residual_record("recursions", "I recursion m=%d" % m, q, cf.I_recursion_check(m, q), tol)
        for m in range(9):
            scale = 1.0 + abs(bernoulli_polynomial(m + 1, q))
            r = cf.bernoulli_from_hurwitz_check(m, q) / scale
            yield _residual_record("recursions", "bernoulli from hurwitz m=%d" % m, q, r, tol)
        for n in range(1, 7):
            yield _residual_record("recursions", "negapolygamma integral n=%d" % n, q, cf.intpoly_check(n, q, relative=True), tol)


def _identity_suite(config):
    for m in range(1, 41):
        for j in range((m - 1) // 2 + 1):
            lhs, rhs = ex.binomial_collapse_identity(m, j)
            yield _exact_record("binomial collapse m=%d j=%d" % (m, j), lhs, rhs)
    for k in range(1, 26):
        for p in range(1, k + 1):
            expected = (-1) ** k * k if p == k else 0
            yield _exact_record("orthogonality k=%d p=%d" % (k, p), ex.orthogonality_sum(k, p), expected)
    for k in range(1, 26):
        s1, s2 = ex.evaluation_sums(k)
        yield _exact_record("evaluation sum 1 k=%d" % k, s1, 2 ** (2 * k - 1))
        yield _exact_record("evaluation sum 2 k=%d" % k, s2, k * ex.binomial(2 * k, k))
    for m in range(1, 21):
        for parity in ex.Parity:
            a = ex.to_one_plus_t2_basis(ex.trig_poly_in_t(m, parity)).coeffs
            b = ex.trig_poly_in_1pt2(m, parity).coeffs
            yield _exact_record("basis conversion %s m=%d" % (parity.value, m), str(list(a)), str(list(b)))


_SUITE_RUNNERS = {
    "closed_forms": _closed_form_suite,
    "special_values": _special_value_suite,
    "recursions": _recursion_suite,
    "identities": _identity_suite,
}


def verify_suite(config=None):
    """Run the selected suites and return a :class:`SuiteReport`.

    Records are evaluated serially; closed-form records are ordered by
    (family, index, kernel, q) and the suites follow in a fixed order.
    """
    config = config or SuiteConfig()
    records = []
    for name in config.suites:
        records.extend(_SUITE_RUNNERS[name](config))
    return SuiteReport(config, tuple(records))


# ---------------------------------------------------------------- serialization

def format_float(x):
    if x is None:
        return None
    if isinstance(x, float):
        if math.isinf(x) or math.isnan(x):
            return None
        return "%.17g" % x
    return x


def _json_value(v):
    if isinstance(v, float):
        s = format_float(v)
        return "null" if s is None else s
    return json.dumps(v, sort_keys=True)


def _json_line(obj):
    return "{" + ", ".join("%s: %s" % (json.dumps(k), _json_value(v)) for k, v in obj.items()) + "}"


def render_json(report):
    lines = [_json_line({"type": "header", "schema": REPORT_SCHEMA, "version": REPORT_VERSION,
                         "config": report.config.as_dict()})]
    for r in report.records:
        d = {"type": "record"}
        d.update(r.as_dict())
        lines.append(_json_line(d))
    summary = {"type": "summary"}
    summary.update(report.summary)
    lines.append(_json_line(summary))
    return "\n".join(lines) + "\n"


def render_csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else (format_float(v) if isinstance(v, float) else v) for v in row])
    return buf.getvalue()


def render_report(report, fmt=None):
    fmt = fmt or report.config.output_format
    if fmt == "json":
        return render_json(report)
    rows = [[r.as_dict()[k] for k in RECORD_FIELDS] for r in report.records]
    return render_csv(rows, RECORD_FIELDS)


# ---------------------------------------------------------------- tables

def table_rows(which):
    """(header, rows) for one of special_values, bernoulli, constants."""
    if which == "special_values":
        rows = [[sv.key, sv.integral, sv.expression, sv.closed(), sv.symbolic()] for sv in cf.SPECIAL_VALUES]
        return ("key", "integral", "expression", "closed_form", "symbolic"), rows
    if which == "bernoulli":
        rows = []
        for n in range(21):
            b = bernoulli_number(n)
            rows.append([n, str(b), float(b)])
        return ("n", "exact", "value"), rows
    if which == "constants":
        from .special_core import CONSTANTS as C
        rows = [
            ["euler_gamma", "Euler's constant gamma", C.euler_gamma],
            ["catalan", "Catalan's constant G", C.catalan],
            ["zeta_prime_minus1", "zeta'(-1)", C.zeta_prime_minus1],
            ["ln_gamma_quarter", "ln Gamma(1/4)", C.ln_gamma_quarter],
            ["ln_sqrt_2pi", "ln sqrt(2 pi)", C.ln_sqrt_2pi],
            ["ln2", "ln 2", C.ln2],
            ["ln_pi", "ln pi", C.ln_pi],
        ]
        return ("name", "description", "value"), rows
    raise DomainError("unknown table %r (choose special_values, bernoulli or constants)" % (which,))


def render_table(which, fmt="json"):
    header, rows = table_rows(which)
    if fmt == "csv":
        return render_csv(rows, header)
    return "".join(_json_line(dict(zip(header, row))) + "\n" for row in rows)
