"""Command-line front end: representations, values, letters, tables, automata and oracle sweeps.

Negative integers go after `--` (`dtnum.py rep --system gamma -- -5`) or as `--n=-5`.
"""

import argparse
import logging
import sys

import catalogue
import compat
import multidim
import oracle_checks
from automaton import build_dfao, export_dot, letter_at
from datatypes import RepMatrix
from numeration import rep, val
from periodic import PeriodicPoint, enumerate_seeds, make_periodic_point
from substitution import Substitution
from utils import format_digits, parse_digits

PROG = "dtnum.py"


def _add_system_args(parser: argparse.ArgumentParser, required: bool = True, seed: bool = True) -> None:
    parser.add_argument(
        "--system",
        type=str,
        required=required,
        help="Catalogue point (gamma), bundled substitution (fibonacci) or substitution config path",
    )
    if seed:
        parser.add_argument("--seed", type=str, default=None, help='Seed "L|R" (default: catalogue seed)')


def _add_position_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("n", nargs="?", type=int, help="The integer, negative values after --")
    parser.add_argument("--n", dest="n_option", type=int, help="The integer, e.g. --n=-5")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digit-sep", type=str, default=None, help="Separator between digits (default: none below 10)")
    common.add_argument("--verbose", action="store_true", help="Print debug messages")

    parser = argparse.ArgumentParser(prog=PROG, description="Complement numeration systems of two-sided periodic points.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("rep", parents=[common], help="Representation of an integer")
    _add_system_args(p)
    _add_position_args(p)

    p = commands.add_parser("val", parents=[common], help="Value of a digit word")
    _add_system_args(p)
    p.add_argument("word", type=str, help="Digit word, e.g. 0010010 or 1,0,11")

    p = commands.add_parser("letter-at", parents=[common], help="Letter of the periodic point at an integer")
    _add_system_args(p)
    _add_position_args(p)

    p = commands.add_parser("seeds", parents=[common], help="Seeds and minimal periods of a substitution")
    _add_system_args(p, seed=False)

    p = commands.add_parser("table", parents=[common], help="Representations over a range, one row per integer")
    _add_system_args(p, required=False)
    p.add_argument("--from", dest="lo", type=int, default=-10, help="Smallest integer (default: -10)")
    p.add_argument("--to", dest="hi", type=int, default=10, help="Largest integer (default: 10)")

    p = commands.add_parser("dot", parents=[common], help="DOT source of the automaton")
    _add_system_args(p)

    p = commands.add_parser("pad", parents=[common], help="Representation padded with neutral blocks")
    _add_system_args(p)
    _add_position_args(p)
    p.add_argument("--width", type=int, required=True, help="Target length, 1 mod the period")

    p = commands.add_parser("zd", parents=[common], help="Representation of an integer vector")
    _add_system_args(p)
    p.add_argument("--n", dest="ns", type=int, action="append", required=True, help="One coordinate, repeatable")
    p.add_argument("--point", dest="points", type=str, action="append", help='Seed "L|R" per coordinate (default: --seed)')

    p = commands.add_parser("compat", parents=[common], help="Two's complement and Fibonacci complement systems")
    p.add_argument("--system", type=str, required=True, choices=["2c", "fc"], help="2c or fc")
    compat_commands = p.add_subparsers(dest="compat_command", required=True)
    q = compat_commands.add_parser("rep", parents=[common], help="Representation of an integer")
    _add_position_args(q)
    q = compat_commands.add_parser("val", parents=[common], help="Value of a binary word")
    q.add_argument("word", type=str)
    q = compat_commands.add_parser("verify", parents=[common], help="Compare with the matching periodic point")
    q.add_argument("--range", dest="radius", type=int, default=10_000, help="Sweep over [-M, M] (default: 10000)")

    p = commands.add_parser("check", parents=[common], help="Oracle sweep: letters, round trip and order")
    _add_system_args(p, required=False)
    p.add_argument("--range", dest="radius", type=int, default=2000, help="Sweep over [-M, M] (default: 2000)")
    p.add_argument("--workers", type=int, default=1, help="Number of processes (default: 1)")

    args = parser.parse_args(argv)
    if hasattr(args, "n_option") and args.n is None:
        if args.n_option is None:
            parser.error(f"{args.command}: an integer is required, e.g. -- -5 or --n=-5")
        args.n = args.n_option
    return args


def _point(args: argparse.Namespace) -> PeriodicPoint:
    return catalogue.resolve_system(args.system, args.seed)


def _write(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_rep(args: argparse.Namespace) -> int:
    _write(format_digits(rep(_point(args), args.n), args.digit_sep))
    return 0


def cmd_val(args: argparse.Namespace) -> int:
    _write(str(val(_point(args), parse_digits(args.word, args.digit_sep))))
    return 0


def cmd_letter_at(args: argparse.Namespace) -> int:
    _write(letter_at(_point(args), args.n))
    return 0


def _substitution(args: argparse.Namespace) -> Substitution:
    entries = catalogue.load_catalogue()
    name = entries[args.system]["substitution"] if args.system in entries else args.system
    return catalogue.load_substitution(name)


def cmd_seeds(args: argparse.Namespace) -> int:
    for seed, period in enumerate_seeds(_substitution(args)):
        _write(f"{seed}\t{period}")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.lo > args.hi:
        raise ValueError(f"out of range: --from {args.lo} is above --to {args.hi}")
    if args.system is not None:
        columns = [("rep", _point(args))]
    else:
        columns = catalogue.table_points()
    _write("\t".join(["n"] + [name for name, _ in columns]))
    for n in range(args.hi, args.lo - 1, -1):
        _write("\t".join([str(n)] + [format_digits(rep(pp, n), args.digit_sep) for _, pp in columns]))
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    sys.stdout.write(export_dot(build_dfao(_point(args))))
    return 0


def cmd_pad(args: argparse.Namespace) -> int:
    pp = _point(args)
    _write(format_digits(multidim.pad(pp, rep(pp, args.n), args.width), args.digit_sep))
    return 0


def format_columns(m: RepMatrix) -> str:
    return " ".join("(" + ",".join(str(d) for d in column) + ")" for column in m.columns)


def cmd_zd(args: argparse.Namespace) -> int:
    if args.points:
        if len(args.points) != len(args.ns):
            raise ValueError(f"mismatched dimensions: {len(args.points)} --point for {len(args.ns)} --n")
        s = _substitution(args)
        pps = [make_periodic_point(s, seed) for seed in args.points]
    else:
        pps = [_point(args)] * len(args.ns)
    m = multidim.rep_zd(pps, args.ns)
    for row in m.rows:
        _write(format_digits(row, args.digit_sep))
    _write(format_columns(m))
    return 0


def _verify_compat(system: str, radius: int) -> list[str]:
    point_name, rep_ref, val_ref, canonical = {
        "2c": ("beta", compat.rep_2c, compat.val_2c, compat.is_canonical_2c),
        "fc": ("gamma", compat.rep_fc, compat.val_fc, compat.is_canonical_fc),
    }[system]
    pp = catalogue.resolve_system(point_name)
    failures = []
    for n in range(-radius, radius + 1):
        w = rep_ref(n)
        if rep(pp, n) != w:
            failures.append(f"{n}: {format_digits(w)} differs from {point_name} {format_digits(rep(pp, n))}")
        if val_ref(w) != n:
            failures.append(f"{n}: value of {format_digits(w)} is {val_ref(w)}")
        if not canonical(w):
            failures.append(f"{n}: {format_digits(w)} is not canonical")
    return failures


def cmd_compat(args: argparse.Namespace) -> int:
    if args.compat_command == "rep":
        rep_ref = compat.rep_2c if args.system == "2c" else compat.rep_fc
        _write(format_digits(rep_ref(args.n), args.digit_sep))
        return 0
    if args.compat_command == "val":
        val_ref = compat.val_2c if args.system == "2c" else compat.val_fc
        _write(str(val_ref(parse_digits(args.word, args.digit_sep))))
        return 0
    failures = _verify_compat(args.system, args.radius)
    if failures:
        _write(f"FAIL ({len(failures)} failures over {2 * args.radius + 1} points)")
        for failure in failures[: oracle_checks.MAX_REPORTED_FAILURES]:
            _write(failure)
        return 1
    _write(f"OK ({2 * args.radius + 1} points)")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    if args.system is not None:
        points = [(args.system, _point(args))]
    else:
        points = catalogue.table_points()
    status = 0
    for name, pp in points:
        result = oracle_checks.check_point(pp, args.radius, name=name, workers=args.workers)
        prefix = f"{name}: " if len(points) > 1 else ""
        _write(prefix + oracle_checks.format_result(result))
        if not result.ok:
            status = 1
    return status


COMMANDS = {
    "rep": cmd_rep,
    "val": cmd_val,
    "letter-at": cmd_letter_at,
    "seeds": cmd_seeds,
    "table": cmd_table,
    "dot": cmd_dot,
    "pad": cmd_pad,
    "zd": cmd_zd,
    "compat": cmd_compat,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format=f"{PROG}: %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
