"""Command-line front end.

Subcommands: compute, bound, invert, verify, scan, decompose.  Measures
come from JSON or CSV files in the formats of :mod:`divbound.measure`.
Exit codes: 0 success, 2 usage or parse errors, 3 domain violations.
Floating-point output uses 9 significant digits unless overridden with
--precision or the DIVBOUND_PRECISION environment variable; "inf" is the
textual form of +infinity everywhere.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .bounds import invert, lower_bound
from .divergence import d_f
from .errors import (
    AbsoluteContinuityViolation,
    DomainError,
    InvalidMeasure,
    NonMonotoneGenerator,
    UnknownGenerator,
)
from .extreal import format_extended, parse_extended
from .generator import builtin
from .jointrange import scan_binary, scan_to_csv, verify_bound
from .measure import hahn_jordan, read_probability_measure, read_signed_measure

_GENERATOR_CHOICES = ("he", "tv", "kl", "pe", "sh")
_DEFAULT_PRECISION = 9


def _extended_value(text: str) -> float:
    try:
        return parse_extended(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'inf', got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divbound",
        description="f-divergences between finite discrete measures and "
        "certified total-variation bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gen(p: argparse.ArgumentParser) -> None:
        p.add_argument("--gen", required=True, type=str.lower, choices=_GENERATOR_CHOICES,
                       help="generator name")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--precision", type=int, default=None,
                       help="significant digits for printed numbers (default 9)")

    p = sub.add_parser("compute", help="divergence of two probability measure files")
    add_gen(p)
    p.add_argument("--mu", required=True, help="file with the first measure")
    p.add_argument("--nu", required=True, help="file with the second measure")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    add_common(p)

    p = sub.add_parser("bound", help="divergence floor implied by a total variation value")
    add_gen(p)
    p.add_argument("--tv", required=True, type=float, help="total variation in [0, 2]")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    add_common(p)

    p = sub.add_parser("invert", help="certified TV upper bound from a divergence value")
    add_gen(p)
    p.add_argument("--d", required=True, type=_extended_value,
                   help="divergence value (nonnegative number or 'inf')")
    add_common(p)

    p = sub.add_parser("verify", help="soundness sweep of the bound over random pairs")
    add_gen(p)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--max-support", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    p = sub.add_parser("scan", help="CSV scan of the bound over binary measure pairs")
    add_gen(p)
    p.add_argument("--resolution", type=int, default=100, help="grid points per axis")
    add_common(p)

    p = sub.add_parser("decompose", help="Hahn-Jordan decomposition of a signed measure file")
    p.add_argument("--nu", required=True, help="file with the signed measure")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    add_common(p)

    return parser


def _resolve_precision(args: argparse.Namespace) -> int:
    if args.precision is not None:
        value = args.precision
    else:
        env = os.environ.get("DIVBOUND_PRECISION")
        if env is None:
            return _DEFAULT_PRECISION
        try:
            value = int(env)
        except ValueError:
            raise DomainError(f"DIVBOUND_PRECISION must be an integer, got {env!r}") from None
    if value < 1:
        raise DomainError(f"precision must be at least 1, got {value}")
    return value


def _encode(x: float, precision: int):
    if math.isinf(x):
        return "inf"
    return float(f"{x:.{precision}g}")


def _cmd_compute(args: argparse.Namespace, precision: int) -> int:
    gen = builtin(args.gen)
    mu = read_probability_measure(args.mu)
    nu = read_probability_measure(args.nu)
    value = d_f(gen, mu, nu).value
    if args.format == "json":
        print(json.dumps({"divergence": gen.name, "value": _encode(value, precision)}))
    else:
        print(format_extended(value, precision))
    return 0


def _cmd_bound(args: argparse.Namespace, precision: int) -> int:
    gen = builtin(args.gen)
    value = lower_bound(gen, args.tv)
    if args.format == "json":
        print(json.dumps({"divergence": gen.name, "tv": args.tv,
                          "lower_bound": _encode(value, precision)}))
    else:
        print(format_extended(value, precision))
    return 0


def _cmd_invert(args: argparse.Namespace, precision: int) -> int:
    cert = invert(builtin(args.gen), args.d)
    print(json.dumps(cert.to_json_dict(precision)))
    return 0


def _cmd_verify(args: argparse.Namespace, precision: int) -> int:
    report = verify_bound(builtin(args.gen), args.trials, args.max_support, args.seed)
    print(json.dumps(report.to_json_dict(precision)))
    return 0


def _cmd_scan(args: argparse.Namespace, precision: int) -> int:
    records = scan_binary(builtin(args.gen), args.resolution)
    scan_to_csv(records, sys.stdout, precision)
    return 0


def _cmd_decompose(args: argparse.Namespace, precision: int) -> int:
    nu = read_signed_measure(args.nu)
    parts = hahn_jordan(nu)
    upper_total = parts.upper.total()
    lower_total = parts.lower.total()
    if args.format == "plain":
        print("P:", " ".join(a for a in nu.atoms if a in parts.positive_set))
        print("N:", " ".join(a for a in nu.atoms if a in parts.negative_set))
        print("upper_total:", format_extended(upper_total, precision))
        print("lower_total:", format_extended(lower_total, precision))
        print("total_variation:", format_extended(upper_total + lower_total, precision))
    else:
        print(json.dumps({
            "positive_set": [a for a in nu.atoms if a in parts.positive_set],
            "negative_set": [a for a in nu.atoms if a in parts.negative_set],
            "upper": parts.upper.to_json_dict(),
            "lower": parts.lower.to_json_dict(),
            "upper_total": _encode(upper_total, precision),
            "lower_total": _encode(lower_total, precision),
            "total_variation": _encode(upper_total + lower_total, precision),
        }))
    return 0


_DISPATCH = {
    "compute": _cmd_compute,
    "bound": _cmd_bound,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "decompose": _cmd_decompose,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        precision = _resolve_precision(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args, precision)
    except (InvalidMeasure, UnknownGenerator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AbsoluteContinuityViolation, DomainError, NonMonotoneGenerator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
