"""Command-line surface: chain generation, solution enumeration,
certificate verification, the errata audit, brute-force search, and a
report path that writes CSV tables plus growth figures.

All numeric content is serialized as exact decimal or "num/den" strings;
the values outgrow every fixed-width numeric type within a few steps.
Exit codes: 0 ok, 1 usage error, 2 verification failure (verify
subcommand on a non-solution).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .chain import constraint_residual, generate_chain
from .exact import format_rational, fourth_root, isqrt, parse_integer
from .oracle import brute_force_search, errata_audit
from .report import render_report
from .solutions import enumerate_solutions

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad arguments; we reserve 2 for
    verification failures, so usage errors exit 1 instead."""

    def error(self, message: str) -> Any:
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _integer_arg(text: str) -> int:
    try:
        return parse_integer(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def _rat(q: Fraction) -> str:
    return format_rational(q)


def _flatten(value: Any, prefix: str, lines: list[str]) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(sub, f"{prefix}.{key}" if prefix else key, lines)
    elif isinstance(value, list):
        for i, sub in enumerate(value):
            _flatten(sub, f"{prefix}[{i}]", lines)
    else:
        lines.append(f"{prefix} = {value}")


def _emit(report: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        lines: list[str] = []
        _flatten(report, "", lines)
        print("\n".join(lines))


def _report(command: str, inputs: dict[str, Any], results: Any) -> dict[str, Any]:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "status": "ok",
        "error_message": None,
    }


def _solution_payload(sol) -> dict[str, str]:
    return {
        "X": str(sol.X),
        "Y": str(sol.Y),
        "R": str(sol.R),
        "S": str(sol.S),
        "a": str(sol.a),
        "b": str(sol.b),
    }


def _cmd_chain(args: argparse.Namespace) -> int:
    nodes = generate_chain(args.steps)
    results = [
        {
            "index": node.index,
            "t": _rat(node.t),
            "u": _rat(node.u),
            "produced_by": node.produced_by,
            "residual": _rat(constraint_residual(node.t, node.u)),
        }
        for node in nodes
    ]
    _emit(_report("chain", {"steps": str(args.steps)}, results), args.format)
    return EXIT_OK


def _cmd_solutions(args: argparse.Namespace) -> int:
    sols = enumerate_solutions(args.steps, args.positive_only)
    results = [_solution_payload(s) for s in sols]
    inputs = {"steps": str(args.steps), "positive_only": args.positive_only}
    _emit(_report("solutions", inputs, results), args.format)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    x, y = args.x, args.y
    inputs = {"x": str(x), "y": str(y)}
    s = x + y
    reason = None
    a = b = None
    if s < 0:
        reason = f"sum {s} is negative"
    else:
        a, exact = isqrt(s)
        if not exact:
            reason = f"sum {s} is not a perfect square"
    if reason is None:
        q = x * x + y * y
        b, exact = fourth_root(q)
        if not exact:
            reason = f"sum of squares {q} is not a perfect fourth power"
    if reason is None:
        results = {"verified": True, "a": str(a), "b": str(b)}
        _emit(_report("verify", inputs, results), args.format)
        return EXIT_OK
    results = {"verified": False, "reason": reason}
    _emit(_report("verify", inputs, results), args.format)
    return EXIT_VERIFY_FAILED


def _cmd_audit(args: argparse.Namespace) -> int:
    results = [
        {
            "location": f.location,
            "description": f.description,
            "printed": _rat(f.printed_value),
            "recomputed": _rat(f.recomputed_value),
            "verdict": f.verdict,
            "evidence": _rat(f.evidence),
        }
        for f in errata_audit()
    ]
    _emit(_report("audit", {}, results), args.format)
    return EXIT_OK


def _cmd_brute(args: argparse.Namespace) -> int:
    if args.max_b < 1:
        raise _UsageError("argument --max-b: must be at least 1")
    hits = brute_force_search(args.max_b)
    results = [{"x": str(x), "y": str(y), "b": str(b)} for x, y, b in hits]
    _emit(_report("brute", {"max_b": str(args.max_b)}, results), args.format)
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    nodes = generate_chain(args.steps)
    sols = enumerate_solutions(args.steps, args.positive_only)
    paths = render_report(nodes, sols, Path(args.out_dir))
    inputs = {
        "steps": str(args.steps),
        "positive_only": args.positive_only,
        "out_dir": args.out_dir,
    }
    results = {"artifacts": [str(p) for p in paths]}
    _emit(_report("report", inputs, results), args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="biquadsum",
        description=(
            "Generate and verify integer pairs whose sum is a perfect "
            "square and whose sum of squares is a perfect fourth power."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("chain", help="walk the Vieta-jump chain of (t, u) pairs")
    p.add_argument("--steps", type=_integer_arg, default=4)
    add_format(p)
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("solutions", help="enumerate certified integer solutions")
    p.add_argument("--steps", type=_integer_arg, default=4)
    p.add_argument("--positive-only", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_solutions)

    p = sub.add_parser("verify", help="check a candidate pair's certificates")
    p.add_argument("--x", type=_integer_arg, required=True)
    p.add_argument("--y", type=_integer_arg, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="recompute the historically printed values")
    add_format(p)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("brute", help="exhaustive search below a fourth-root bound")
    p.add_argument("--max-b", type=_integer_arg, default=100)
    add_format(p)
    p.set_defaults(func=_cmd_brute)

    p = sub.add_parser("report", help="write CSV tables and growth figures")
    p.add_argument("--steps", type=_integer_arg, default=4)
    p.add_argument("--positive-only", action="store_true")
    p.add_argument("--out-dir", default="report")
    add_format(p)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        report = {
            "command": "usage",
            "inputs": {},
            "results": None,
            "status": "error",
            "error_message": str(exc),
        }
        print(json.dumps(report, indent=2), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
