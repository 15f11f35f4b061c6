# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

"""Command line front end

Exit codes: 0 success, 1 oracle mismatch, 2 parse or usage error,
3 oracle budget exceeded.
"""

import argparse
import csv
import logging
import sys

from iex import __version__
from iex.comp import CompSpec, bounded_comp, dp_oracle, genfun_oracle
from iex.config import get_config, log_level, oracle_budget, threads
from iex.dnf import BENCH_COLUMNS, CnfSpec, DnfSpec, bench_dnf, cnf, dnf, read_dimacs
from iex.errors import BudgetExceeded, ParseError
from iex.exclusion import n_algorithm, read_generators
from iex.facecount import union_face_numbers, union_parity_weight
from iex.oracles import brute_cnf, brute_dnf, brute_permutations, brute_set_ideal
from iex.perm import BlockSpec, block_perm, constrained_maps, read_perm_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class OracleMismatch(Exception):
    pass


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"Invalid list {text!r}. Expected comma separated integers"
        ) from None


def _add_checks(p):
    p.add_argument(
        "--oracle",
        action="store_true",
        help="Also run the brute-force oracle and fail on mismatch",
    )
    p.add_argument("--rows-out", help="Write the relevant rows to a file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="iex",
        description="Exact counting by inclusion-exclusion over relevant faces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument(
        "--threads", type=int, help="Worker count for row scans (default 1)"
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=0,
        help="Increase logging verbosity; repeat for more",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    faces = sub.add_parser("faces", help="Face numbers of the relevant set ideal")
    faces.add_argument("path", help="Generator file: 'h m' then m index lines")
    faces.add_argument(
        "--weights", type=_int_list, help="a1,...,ah: print the parity-weight table"
    )

    perm = sub.add_parser("count-perm", help="Count constrained permutations/maps")
    perm.add_argument("path", help="Spec file with 'perm n' or 'maps n m' header")

    comp = sub.add_parser("count-comp", help="Count bounded compositions")
    comp.add_argument("--bounds", type=_int_list, required=True, help="a1,...,ah")
    comp.add_argument("--target", type=int, required=True, help="t")

    for name, help_text in (
        ("count-dnf", "Count models of a DNF file"),
        ("count-cnf", "Count models of a CNF file"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="DIMACS-style 'p dnf n h' / 'p cnf n h' file")
        p.add_argument("--k", type=int, help="Only count models with k true variables")

    for p in sub.choices.values():
        _add_checks(p)

    bench = sub.add_parser("bench-dnf", help="Random DNF benchmark, CSV output")
    bench.add_argument("--n", type=int, default=50)
    bench.add_argument("--n1", type=int, default=5)
    bench.add_argument("--n0", type=int, default=4)
    bench.add_argument("--h", type=int, default=50)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--trials", type=int, default=1)
    bench.add_argument("--out", help="CSV file (default: standard output)")
    return parser


def _read(path):
    with open(path, "r") as stream:
        return stream.read()


def _write_rows(args, rows):
    if args.rows_out:
        with open(args.rows_out, "w") as stream:
            stream.write(rows.render() + "\n")
        logger.info("Wrote %d rows to %s", len(rows), args.rows_out)


def _check(name, value, expected):
    if value != expected:
        logger.warning("%s: oracle gives %d, count gives %d", name, expected, value)
        raise OracleMismatch(f"{name}: oracle {expected} != count {value}")


def _faces(args, ctx, out):
    generators = read_generators(_read(args.path), args.path)
    rows = n_algorithm(generators)
    _write_rows(args, rows)
    total = rows.cardinality()
    if args.weights is not None:
        table = union_parity_weight(rows, args.weights)
        out.write("even: " + " ".join(f"{v}:{n}" for v, n in table.c.items()) + "\n")
        out.write("odd: " + " ".join(f"{v}:{n}" for v, n in table.d.items()) + "\n")
    else:
        out.write(f"f: {union_face_numbers(rows)}\n")
    out.write(f"total: {total}\n")
    if args.oracle:
        _check("faces", total, len(brute_set_ideal(generators, ctx["budget"])))


def _count_perm(args, ctx, out):
    spec = read_perm_spec(_read(args.path), args.path)
    if isinstance(spec, BlockSpec):
        counter = block_perm(spec)
    else:
        counter = constrained_maps(spec.constraints, spec.n, spec.m, spec.mode)
    counter.threads = ctx["threads"]
    result = counter.count()
    _write_rows(args, counter.rows)
    out.write(f"{result}\n")
    if args.oracle:
        _check("count-perm", result, brute_permutations(spec, ctx["budget"]))


def _count_comp(args, ctx, out):
    spec = CompSpec(args.bounds, args.target)
    counter = bounded_comp(spec)
    result = counter.count()
    _write_rows(args, counter.rows)
    out.write(f"{result}\n")
    if args.oracle:
        _check("count-comp", result, dp_oracle(spec, ctx["budget"]))
        _check("count-comp", result, genfun_oracle(spec, ctx["budget"]))


def _count_boolean(args, ctx, out, kind):
    spec = read_dimacs(_read(args.path), args.path)
    expected = DnfSpec if kind == "dnf" else CnfSpec
    if not isinstance(spec, expected):
        raise ParseError(f"Expected a 'p {kind}' file", 1, 1, args.path)
    if kind == "dnf":
        counter = dnf(spec, args.k)
    else:
        counter = cnf(spec, args.k)
    counter.threads = ctx["threads"]
    result = counter.count()
    if args.rows_out:
        _write_rows(args, counter.rows)
    out.write(f"{result}\n")
    if args.oracle:
        brute = brute_dnf if kind == "dnf" else brute_cnf
        _check(f"count-{kind}", result, brute(spec, args.k, ctx["budget"]))


def _bench(args, ctx, out):
    records = bench_dnf(
        args.n, args.n1, args.n0, args.h, args.seed, args.trials, ctx["threads"]
    )
    stream = open(args.out, "w", newline="") if args.out else out
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for record in records:
            writer.writerow(record.as_row())
    finally:
        if args.out:
            stream.close()


_COMMANDS = {
    "faces": _faces,
    "count-perm": _count_perm,
    "count-comp": _count_comp,
    "count-dnf": lambda args, ctx, out: _count_boolean(args, ctx, out, "dnf"),
    "count-cnf": lambda args, ctx, out: _count_boolean(args, ctx, out, "cnf"),
    "bench-dnf": _bench,
}


def execute(args, out=None, err=None) -> int:
    """Run a parsed command and map failures to exit codes"""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config = get_config(args.config)
        ctx = {
            "budget": oracle_budget(config),
            "threads": threads(config) if args.threads is None else args.threads,
        }
        _COMMANDS[args.command](args, ctx, out)
    except OracleMismatch as ex:
        err.write(f"error: {ex}\n")
        return EXIT_MISMATCH
    except BudgetExceeded as ex:
        err.write(f"error: {ex}\n")
        return EXIT_BUDGET
    except (ValueError, OSError) as ex:
        err.write(f"error: {ex}\n")
        return EXIT_USAGE
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    """Parse argv, execute one subcommand and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code == 0 else EXIT_USAGE
    return execute(args, out, err)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        default = log_level(get_config(args.config))
    except (ValueError, OSError):
        default = "WARNING"
    level = getattr(logging, default, logging.WARNING) - 10 * args.verbose
    logging.basicConfig(
        level=max(level, logging.DEBUG),
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    sys.exit(execute(args))
