"""Command-line front end.

Exit status: 0 success / in cone / all checks passed, 1 out of cone or a
failed check, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .decompose import ConvexCanonicalForm, decompose, membership
from .errors import ConeError, DimensionMismatch, MalformedEntry, NotInCone, ZeroDenominator
from .exactnum import format_rational, parse_rational
from .generators import ConeKind, generators
from .matrices import MATRIX_NAMES, closed_form
from .serialize import (
    generators_to_csv,
    generators_to_json,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_text,
)
from .shapes import PREDICATES, classify
from .verify import run_verification

KINDS = [k.value for k in ConeKind]


def parse_vector(text: str) -> tuple:
    """Parse ``"1,2/3,0.25"``; positions in errors are 1-based."""
    if not text.strip():
        raise MalformedEntry(1, text, "empty vector")
    out = []
    for pos, tok in enumerate(text.split(","), start=1):
        try:
            out.append(parse_rational(tok))
        except ZeroDivisionError:
            raise ZeroDenominator(pos, tok) from None
        except ValueError:
            raise MalformedEntry(pos, tok) from None
    return tuple(out)


def _read_vector(args):
    text = sys.stdin.read().strip() if args.vector == "-" else args.vector
    v = parse_vector(text)
    if args.n is not None and len(v) != args.n:
        raise DimensionMismatch(args.n, len(v))
    return v


def _dimension(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("dimension must be >= 1")
    return n


def _eps(text):
    try:
        e = parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    if e < 0:
        raise argparse.ArgumentTypeError("eps must be >= 0")
    return e


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shapecones", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit the generators of a cone")
    g.add_argument("--cone", required=True, choices=KINDS)
    g.add_argument("--n", required=True, type=_dimension)
    g.add_argument("--format", choices=["text", "json", "csv"], default="text")
    g.add_argument("--common-denominator", action="store_true")

    m = sub.add_parser("matrix", help="emit a basis-change matrix")
    m.add_argument("--which", required=True, choices=MATRIX_NAMES)
    m.add_argument("--n", required=True, type=_dimension)
    m.add_argument("--format", choices=["text", "json", "csv"], default="text")
    m.add_argument("--common-denominator", action="store_true")

    for name, help_ in (("check", "membership certificate"), ("decompose", "conic coefficients")):
        c = sub.add_parser(name, help=help_)
        c.add_argument("--cone", required=True, choices=KINDS)
        c.add_argument("--vector", required=True, help="comma-separated entries, or - for stdin")
        c.add_argument("--n", type=_dimension, default=None, help="expected length")
        if name == "decompose":
            c.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("predicates", help="shape report of a vector")
    s.add_argument("--vector", required=True)
    s.add_argument("--eps", type=_eps, default=0)
    s.add_argument("--n", type=_dimension, default=None)
    s.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="structural and extreme-ray self-check")
    v.add_argument("--n", required=True, type=_dimension)
    v.add_argument("--max-extreme-n", type=_dimension, default=8)
    return p


def _emit_table(rows, labels, fmt, common, out, gens=None):
    if common and fmt != "text":
        raise ValueError("--common-denominator applies to --format text only")
    if fmt == "json":
        out.write((generators_to_json(gens) if gens else matrix_to_json(rows)) + "\n")
    elif fmt == "csv":
        out.write(generators_to_csv(gens) if gens else matrix_to_csv(rows))
    else:
        out.write(matrix_to_text(rows, common, labels))


def _cmd_gen(args, out):
    gens = generators(args.cone, args.n)
    _emit_table(gens.matrix(), list(gens.labels), args.format, args.common_denominator, out, gens)
    return 0


def _cmd_matrix(args, out):
    a = closed_form(args.which, args.n)
    _emit_table(a, None, args.format, args.common_denominator, out)
    return 0


def _cmd_check(args, out):
    cert = membership(_read_vector(args), args.cone)
    out.write(json.dumps(cert.as_dict()) + "\n")
    return 0 if cert.in_cone else 1


def _cmd_decompose(args, out):
    res = decompose(_read_vector(args), args.cone)
    if args.format == "json":
        out.write(json.dumps(res.as_dict()) + "\n")
        return 0
    pairs = res.labelled() if isinstance(res, ConvexCanonicalForm) else zip(res.labels, res.coefficients)
    for label, x in pairs:
        out.write(f"{label}\t{format_rational(x)}\n")
    return 0


def _cmd_predicates(args, out):
    rep = classify(_read_vector(args), args.eps)
    if args.format == "json":
        out.write(json.dumps({"predicates": rep.as_dict(), "witnesses": rep.witnesses}) + "\n")
        return 0
    for kind in PREDICATES:
        val = getattr(rep, kind)
        if val is None:
            out.write(f"{kind}: not-applicable\n")
        elif val:
            out.write(f"{kind}: true\n")
        else:
            out.write(f"{kind}: false (index {rep.witnesses[kind]})\n")
    return 0


def _cmd_verify(args, out):
    checks = run_verification(args.n, args.max_extreme_n)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 1 if failed else 0


COMMANDS = {
    "gen": _cmd_gen,
    "matrix": _cmd_matrix,
    "check": _cmd_check,
    "decompose": _cmd_decompose,
    "predicates": _cmd_predicates,
    "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage error
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except NotInCone as exc:
        err.write(f"out_of_cone: {exc}\n")
        return 1
    except (ConeError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
