"""Command-line entry point: ``bellforge {band,bounds,classify,fine,forge}``.

Exit codes: 0 success, 2 file I/O failure, 3 usage error, 4 forge
verification failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from .errors import BellForgeError, VerificationFailed
from .forge import CommutingSeed, PairingScheme, classify, forge
from .lhv import CorrelationTable, enumerate_lhv, fine_feasible, fine_inequalities
from .pauli import family_S, family_T
from .polynomial import chsh_polynomial, t_polynomial
from .quantum import DEFAULT_GRID, band_scan, global_quantum_range, quantum_band

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3, 4

OPERATORS = {
    "s": (chsh_polynomial, family_S),
    "t": (t_polynomial, family_T),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_num(x: float) -> str:
    """At most 12 significant digits, trailing zeros dropped; |x| < 1e-12 prints as 0."""
    if abs(x) < 1e-12:
        return "0"
    return format(x, ".12g")


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bellforge-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _operator(name: str):
    poly_fn, fam_fn = OPERATORS[name]
    return poly_fn(), fam_fn()


def band_csv(operator: str, steps: int) -> str:
    poly, fam = _operator(operator)
    h = enumerate_lhv(poly).bounds
    lines = ["theta,q_lo,q_hi,h_lo,h_hi,singlet,chi"]
    for sample in band_scan(poly, fam, steps):
        e = sample.expectations
        row = (sample.theta, sample.q.lo, sample.q.hi, h.lo, h.hi, e["singlet"], e["chi"])
        lines.append(",".join(fmt_num(v) for v in row))
    return "\n".join(lines) + "\n"


def cmd_band(args) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    text = band_csv(args.operator, args.steps)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        write_atomic(args.out, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    poly, fam = _operator(args.operator)
    verdict = enumerate_lhv(poly)
    q = global_quantum_range(poly, fam, args.grid)
    q4 = quantum_band(poly, fam, math.pi / 4)
    print(f"operator: {args.operator.upper()} = {poly}")
    print(f"hlv: [{fmt_num(verdict.bounds.lo)}, {fmt_num(verdict.bounds.hi)}]")
    print(f"hlv value set: {{{', '.join(fmt_num(v) for v in verdict.value_set)}}}")
    print(f"quantum (union over {args.grid} angles): [{fmt_num(q.lo)}, {fmt_num(q.hi)}]")
    print(f"quantum at theta=pi/4: [{fmt_num(q4.lo)}, {fmt_num(q4.hi)}]")
    return EXIT_OK


def cmd_classify(args) -> int:
    theta = math.radians(args.theta) if args.degrees else args.theta
    poly, fam = _operator(args.operator)
    h = enumerate_lhv(poly).bounds
    q = quantum_band(poly, fam, theta)
    print(f"theta: {fmt_num(theta)}")
    print(f"hlv: [{fmt_num(h.lo)}, {fmt_num(h.hi)}]")
    print(f"quantum: [{fmt_num(q.lo)}, {fmt_num(q.hi)}]")
    print(f"type: {classify(h, q)}")
    return EXIT_OK


def witness_csv(witness, scenario) -> str:
    m, n = scenario
    header = [f"a{i}" for i in range(1, m + 1)] + [f"b{j}" for j in range(1, n + 1)] + ["weight"]
    lines = [",".join(header)]
    for strat, w in witness.items():
        vals = [str(v) for v in strat.a_values + strat.b_values]
        lines.append(",".join(vals + [fmt_num(w)]))
    return "\n".join(lines) + "\n"


def cmd_fine(args) -> int:
    table = CorrelationTable.from_csv(_read(args.corr))
    result = fine_feasible(table)
    print("FEASIBLE" if result.feasible else "INFEASIBLE")
    if table.scenario == (2, 2) and len(table.values) == 4:
        combos = fine_inequalities(table)
        for k, v in enumerate(combos, 1):
            status = "ok" if abs(v) <= 2 + 1e-9 else "violated"
            print(f"combination {k}: {fmt_num(v)} ({status})")
    if result.feasible:
        text = witness_csv(result.witness, table.scenario)
        if args.witness:
            write_atomic(args.witness, text)
            print(f"witness: {args.witness}")
        else:
            sys.stdout.write(text)
    return EXIT_OK


def cmd_forge(args) -> int:
    seed = CommutingSeed.from_text(_read(args.seed))
    scheme = PairingScheme.from_text(_read(args.scheme))
    try:
        report = forge(seed, scheme)
    except VerificationFailed as exc:
        print(f"verification: FAILED ({exc})")
        return EXIT_VERIFY
    print(f"polynomial: {report.polynomial}")
    print(f"scenario: {report.polynomial.scenario.m_a} A settings, {report.polynomial.scenario.n_b} B settings")
    for line in report.describe_settings():
        print(f"  {line}")
    print(report.polynomial.to_text(), end="")
    print(f"verification: OK (max deviation {report.max_deviation:.1e})")
    h, q = report.hlv_bounds, report.quantum_bounds
    print(f"hlv: [{fmt_num(h.lo)}, {fmt_num(h.hi)}]")
    print(f"quantum: [{fmt_num(q.lo)}, {fmt_num(q.hi)}]")
    print(f"type: {report.test_type}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bellforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    op = dict(choices=sorted(OPERATORS), required=True, type=str.lower)

    p = sub.add_parser("band", help="quantum band, LHV range and state curves as CSV")
    p.add_argument("--operator", **op)
    p.add_argument("--steps", type=int, default=DEFAULT_GRID)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("bounds", help="hidden-variable and quantum bounds")
    p.add_argument("--operator", **op)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="test type at a detector angle")
    p.add_argument("--operator", **op)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--degrees", action="store_true", help="read --theta in degrees")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fine", help="LHV feasibility of a correlation table")
    p.add_argument("corr", help="CSV with header aIndex,bIndex,value")
    p.add_argument("--witness", help="write the witness distribution here instead of stdout")
    p.set_defaults(func=cmd_fine)

    p = sub.add_parser("forge", help="rewrite a commuting seed into a Bell polynomial")
    p.add_argument("seed", help="lines '<coeff> <A-axis> <B-axis>'")
    p.add_argument("scheme", help="lines '<p-axis> <q-axis>'")
    p.set_defaults(func=cmd_forge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bellforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"bellforge: {exc}", file=sys.stderr)
        return EXIT_IO
    except (BellForgeError, ValueError) as exc:
        print(f"bellforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
