"""``delta-laplace`` command line.

Exit status: 0 verified solve, 1 parse/semantic error, 2 solver error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .dsl import parse_equation, parse_sequence
from .errors import InputError, SemanticError, SolverError, VerificationError
from .formatting import format_report, seq_to_text
from .oracle import DEFAULT_S_GRID
from .solver import solve_ivp
from .transform import TABLE, transform

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3

MAX_CHECK_TO = 100_000


@dataclass(frozen=True)
class CliRequest:
    equation_text: str
    check_to: int = 1000
    s_grid: tuple = DEFAULT_S_GRID
    format: str = "text"

    def validate(self, eq) -> None:
        if not 1 <= self.check_to <= MAX_CHECK_TO:
            raise SemanticError(f"--check-to must be between 1 and {MAX_CHECK_TO}")
        if self.check_to < eq.max_ic_index:
            raise SemanticError(f"--check-to {self.check_to} is below the largest initial-condition index {eq.max_ic_index}")
        if not self.s_grid or any(not s > 0 for s in self.s_grid):
            raise SemanticError("--s-grid values must be positive")


def _s_grid(text: str) -> tuple:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delta-laplace",
        description="Solve difference-equation IVPs with the discrete Laplace transform.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve and verify an IVP")
    solve.add_argument("equation", help='e.g. "D f = n ; f(1) = 1"')
    solve.add_argument("--check-to", type=int, default=1000, help="oracle check range (default 1000)")
    solve.add_argument("--s-grid", type=_s_grid, default=DEFAULT_S_GRID, help="numeric check points, e.g. 0.5,1,2")
    solve.add_argument("--format", choices=("text", "latex", "json"), default="text")

    sub.add_parser("table", help="print the transform-pair table")

    tr = sub.add_parser("transform", help="print the image of a sequence term")
    tr.add_argument("term", help='e.g. "n^2" or "1/n"')
    return parser


def _solve(args, out, err) -> int:
    request = CliRequest(args.equation, args.check_to, tuple(args.s_grid), args.format)
    eq = parse_equation(request.equation_text)
    request.validate(eq)
    report = solve_ivp(eq, check_to=request.check_to, s_grid=request.s_grid)
    print(format_report(report, request.format), file=out)
    return EXIT_OK


def _table(out) -> int:
    width = max(len(p.name) for p in TABLE)
    for pair in TABLE:
        print(f"{pair.name:<{width}}  <->  {pair.image}", file=out)
    print("(x = e^s, L = s - ln(e^s - 1), D = Li2(e^-s))", file=out)
    return EXIT_OK


def _transform(args, out) -> int:
    f = parse_sequence(args.term)
    print(f"l{{{seq_to_text(f)}}} = {transform(f)}", file=out)
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        if args.command == "solve":
            return _solve(args, out, err)
        if args.command == "table":
            return _table(out)
        return _transform(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=err)
        return EXIT_VERIFY
    except SolverError as exc:
        print(f"solver error ({type(exc).__name__}): {exc}", file=err)
        return EXIT_SOLVER
    except (ArithmeticError, RecursionError, ValueError) as exc:
        print(f"internal error ({type(exc).__name__}): {exc}", file=err)
        return EXIT_SOLVER


def main() -> None:
    sys.exit(run())
