"""Command-line front end.

Usage::

    python -m lagrinv [--json] solve --phi "1+z^2" --n 7
    python -m lagrinv coeff --h "z" --phi "1+z^2" --n 5
    python -m lagrinv verify --h "z^3" --phi "1+z+z^2" --max-n 6
    python -m lagrinv inverse --f "z - z^2" --n 5
    python -m lagrinv count-trees --t 2 --max-n 11
    python -m lagrinv count-forests --t 2 --k 2 --max-n 10

Exit status is 0 on success, 1 when ``verify`` finds a failing row and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import lagrange
from .enumeration import count_forests, count_trees
from .exactnum import format_rational
from .parsing import parse_series
from .series import format_coeffs

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lagrinv", description="Lagrange inversion on exact power series")
    p.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="coefficients of A solving A = z*phi(A)")
    s.add_argument("--phi", required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("coeff", help="[z^n] H(A) by the inversion formula")
    s.add_argument("--h", required=True)
    s.add_argument("--phi", required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("verify", help="check n[z^n]H(A) = [z^(n-1)]H' phi^n for n <= max-n")
    s.add_argument("--h", required=True)
    s.add_argument("--phi", required=True)
    s.add_argument("--max-n", type=int, required=True)

    s = sub.add_parser("inverse", help="compositional inverse of f")
    s.add_argument("--f", required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("count-trees", help="brute-force t-ary tree counts")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)

    s = sub.add_parser("count-forests", help="brute-force ordered k-forest counts")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    return p


def _nonneg(value: int, flag: str) -> int:
    if value < 0:
        raise ValueError(f"{flag} must be nonnegative, got {value}")
    return value


def _emit_series(series, as_json: bool) -> None:
    if as_json:
        print(json.dumps([format_rational(c) for c in series.coeffs]))
    else:
        print(format_coeffs(series))


def _emit_counts(table, as_json: bool) -> None:
    if as_json:
        print(json.dumps(table.to_json()))
    else:
        print("[" + ", ".join(str(c) for c in table.counts) + "]")


def _verify(args) -> int:
    max_n = _nonneg(args.max_n, "--max-n")
    h = parse_series(args.h, max_n)
    phi = parse_series(args.phi, max_n)
    reports = lagrange.lif_verify(h, phi, max_n)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        rows = [("n", "lhs_times_n", "rhs", "status")]
        rows += [
            (str(r.n), format_rational(r.lhs_times_n), format_rational(r.rhs),
             "holds" if r.holds else "FAILS")
            for r in reports
        ]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "solve":
        n = _nonneg(args.n, "--n")
        _emit_series(lagrange.solve_functional_equation(parse_series(args.phi, n), n), args.json)
    elif cmd == "coeff":
        n = _nonneg(args.n, "--n")
        value = lagrange.lif_coefficient(parse_series(args.h, n), parse_series(args.phi, n), n)
        text = format_rational(value)
        print(json.dumps(text) if args.json else text)
    elif cmd == "verify":
        return _verify(args)
    elif cmd == "inverse":
        n = _nonneg(args.n, "--n")
        _emit_series(lagrange.compositional_inverse(parse_series(args.f, n)), args.json)
    elif cmd == "count-trees":
        _emit_counts(count_trees(args.t, args.max_n), args.json)
    elif cmd == "count-forests":
        _emit_counts(count_forests(args.t, args.k, args.max_n), args.json)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    """Run one command and return its exit status."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("warning: %(message)s"))
    pkg_log = logging.getLogger("lagrinv")
    pkg_log.addHandler(handler)
    try:
        try:
            args = _build_parser().parse_args(argv)
        except SystemExit as exc:
            return EXIT_USAGE if exc.code else EXIT_OK
        try:
            return _dispatch(args)
        except (ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    finally:
        pkg_log.removeHandler(handler)


def main() -> None:
    sys.exit(run())
