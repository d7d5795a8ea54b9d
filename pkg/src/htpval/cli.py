"""Command-line harness: ``htpval <suite> [flags]``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
parameter errors (message on standard error).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import suites
from .elliptic import DEFAULT_CURVE, WeierstrassCurve
from .errors import HtpvalError, InvalidParameter, UnknownSubcommand
from .exprparse import ExpressionError, parse_entries
from .forms import DiagonalForm, witness_search
from .report import RunReport

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUBCOMMANDS = (
    "xy-asymptotics",
    "cusp-check",
    "zxz-verify",
    "qf-isotropy",
    "qf-residue-check",
    "qf-hensel-lift",
    "valuation-axioms",
    "divform-g",
    "divform-ledger",
    "all",
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _curve(text: str) -> WeierstrassCurve:
    try:
        curve = WeierstrassCurve.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not curve.is_nonsingular():
        raise argparse.ArgumentTypeError(f"singular curve {text!r}")
    return curve


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _form(text: str) -> DiagonalForm:
    try:
        return DiagonalForm(parse_entries(text))
    except (ExpressionError, HtpvalError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad form {text!r}: {exc}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InvalidParameter(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="htpval", description="Exact verification suites.")
    parser.add_argument("subcommand", metavar="SUITE", help="one of: " + ", ".join(SUBCOMMANDS))
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--precision-t", type=int, default=None, dest="precision_t",
                        help="T-adic precision (default 12; 10 for qf-hensel-lift)")
    parser.add_argument("--precision-z", type=int, default=8, dest="precision_z")
    parser.add_argument("--lambda", type=_rational, default=Fraction(1), dest="lam")
    parser.add_argument("--curve", type=_curve, default=DEFAULT_CURVE)
    parser.add_argument("--height-bound", type=int, default=None, dest="height_bound")
    parser.add_argument("--range", type=int, default=12, dest="n_range")
    parser.add_argument("--box", type=int, default=None)
    parser.add_argument("--nmax", type=int, default=6)
    parser.add_argument("--m", type=_int_list, default=None, help="comma-separated odd integers")
    parser.add_argument("--form", type=_form, default=None, help='entries such as "1,1,-3" or "1,-(1+T)"')
    parser.add_argument("--samples", type=int, default=None)
    return parser


def _check_args(args) -> None:
    if args.subcommand not in SUBCOMMANDS:
        raise UnknownSubcommand(f"unknown suite {args.subcommand!r}; choose from {', '.join(SUBCOMMANDS)}")
    positive = {
        "--precision-z": args.precision_z,
        "--range": args.n_range,
        "--nmax": args.nmax,
    }
    for opt in ("precision_t", "height_bound", "box", "samples"):
        if getattr(args, opt) is not None:
            positive["--" + opt.replace("_", "-")] = getattr(args, opt)
    for flag, value in positive.items():
        if value < 1:
            raise InvalidParameter(f"{flag} must be positive, got {value}")
    if args.lam == 0:
        raise InvalidParameter("--lambda must be nonzero")
    if args.m is not None:
        if not args.m or any(m <= 0 or m % 2 == 0 for m in args.m):
            raise InvalidParameter(f"--m needs positive odd integers, got {args.m}")
    if args.subcommand.startswith("divform") and args.curve.a6 == 0:
        raise InvalidParameter("the divisibility scene needs a6 != 0")


def _form_report(form: DiagonalForm, height: int) -> RunReport:
    """A single form with non-rational entries: bounded search only, never an anisotropy proof."""
    verdict = witness_search(form, height)
    report = RunReport("qf-isotropy", {"form": str(form), "height_bound": height})
    report.add("witness search", "search only", verdict.witness if verdict.isotropic else "none found", True)
    if verdict.isotropic:
        ok = form.evaluate(verdict.witness) == 0
        report.add("witness zeroes the form", True, ok, ok)
    return report


def run_suite(name: str, args) -> RunReport:
    seed = args.seed
    if name == "xy-asymptotics":
        return suites.xy_asymptotics(args.curve, args.nmax)
    if name == "cusp-check":
        return suites.cusp_check(args.curve, args.nmax)
    if name == "zxz-verify":
        return suites.zxz_verify(args.n_range, args.box)
    if name == "qf-isotropy":
        form = args.form
        if form is not None and not all(isinstance(a, Fraction) for a in form.entries):
            return _form_report(form, args.height_bound or 30)
        return suites.qf_isotropy(form, args.samples or 200, seed, anisotropy_height=args.height_bound or 50)
    if name == "qf-residue-check":
        return suites.qf_residue_check(args.samples or 200, seed, args.height_bound or 30)
    if name == "qf-hensel-lift":
        return suites.qf_hensel_lift(args.samples or 100, seed, args.precision_t or 10)
    if name == "valuation-axioms":
        return suites.valuation_axioms(args.samples or 500, seed)
    if name == "divform-g":
        return suites.divform_g(args.curve, args.lam, tuple(args.m or (1, 3, 5)), args.precision_t or 12)
    if name == "divform-ledger":
        return suites.divform_ledger(args.curve, args.lam, tuple(args.m or (1, 3)), args.precision_t or 12, args.precision_z)
    raise UnknownSubcommand(name)


def run(argv) -> tuple[argparse.Namespace, list[RunReport], int]:
    """Parse ``argv``, run the selected suites and return the reports with the exit code."""
    args = build_parser().parse_args(argv)
    _check_args(args)
    names = SUBCOMMANDS[:-1] if args.subcommand == "all" else (args.subcommand,)
    reports = []
    for name in names:
        try:
            report = run_suite(name, args)
        except HtpvalError as exc:
            raise InvalidParameter(f"{name}: {exc}") from exc
        report.parameters["seed"] = args.seed
        reports.append(report)
    code = EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL
    return args, reports, code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args, reports, code = run(argv)
    except (InvalidParameter, UnknownSubcommand) as exc:
        print(f"htpval: error: {exc}", file=sys.stderr)
        if isinstance(exc, UnknownSubcommand):
            build_parser().print_usage(sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return code


if __name__ == "__main__":
    sys.exit(main())
