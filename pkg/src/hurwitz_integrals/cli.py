"""Command-line front end: ``hurwitz-integrals {eval,verify,table}``.

Exit codes: 0 success, 1 verification or accuracy failure, 2 bad
arguments or domain error, 3 no closed form for the requested member.
"""
import argparse
import sys

from . import harness
from .closed_forms import FamilyId
from .errors import AccuracyError, DomainError, NoClosedFormError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NO_CLOSED_FORM = 0, 1, 2, 3


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args):
    if args.config:
        config = harness.SuiteConfig.from_file(args.config)
    else:
        config = harness.SuiteConfig.default()
    overrides = {}
    if getattr(args, "rel_tol", None) is not None:
        overrides["rel_tol"] = args.rel_tol
    if getattr(args, "format", None):
        overrides["output_format"] = args.format
    if getattr(args, "q_grid", None) is not None:
        overrides["q_grid"] = tuple(float(x) for x in args.q_grid.split(",") if x.strip())
    if getattr(args, "suites", None):
        overrides["suites"] = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    if overrides:
        data = config.as_dict()
        data.update(overrides)
        config = harness.SuiteConfig.from_mapping(data)
    return config


def cmd_eval(args):
    config = _config(args)
    fid = FamilyId(args.family, args.k, args.kernel)
    record = harness.evaluate_record(fid, args.q, config, args.mode)
    if config.output_format == "csv":
        d = record.as_dict()
        text = harness.render_csv([[d[k] for k in harness.RECORD_FIELDS]], harness.RECORD_FIELDS)
    else:
        text = harness._json_line(record.as_dict()) + "\n"
    _emit(text, args.out)
    return EXIT_FAIL if record.status == harness.FAIL else EXIT_OK


def cmd_verify(args):
    config = _config(args)
    report = harness.verify_suite(config)
    _emit(harness.render_report(report), args.out)
    s = report.summary
    print("verify: %d records, %d passed, %d failed, %d without closed form"
          % (s["total"], s["passed"], s["failed"], s["no_closed_form"]), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_table(args):
    _emit(harness.render_table(args.which, args.format or "json"), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="hurwitz-integrals", description="Closed forms of Hurwitz-type integrals and their verification.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), help="output format (default from config: json)")
        sp.add_argument("--out", help="write output to this path instead of stdout")

    e = sub.add_parser("eval", help="evaluate one family member")
    e.add_argument("--family", required=True, choices=("I", "T", "L"))
    e.add_argument("--k", required=True, type=int, help="family index n, as in T_n or L_n")
    e.add_argument("--kernel", default="bose", choices=("bose", "fermi", "csch"))
    e.add_argument("--q", required=True, type=float)
    e.add_argument("--mode", default="both", choices=("closed", "oracle", "both"))
    e.add_argument("--rel-tol", type=float)
    e.add_argument("--config", help="JSON config file (default: $%s)" % harness.CONFIG_ENV)
    common(e)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--rel-tol", type=float)
    v.add_argument("--config", help="JSON config file (default: $%s)" % harness.CONFIG_ENV)
    v.add_argument("--q-grid", help="comma-separated q values, overrides the config")
    v.add_argument("--suites", help="comma-separated subset of: %s" % ", ".join(harness.SUITES))
    common(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a reference table")
    t.add_argument("which", choices=("special_values", "bernoulli", "constants"))
    common(t)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoClosedFormError as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return EXIT_NO_CLOSED_FORM
    except (DomainError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except AccuracyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
