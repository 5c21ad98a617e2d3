"""Command-line interface: verify, analyze, matrix, sigma."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .certify import INCONSISTENT, NOT_FORCED, certify, misc_matrix
from .dataio import DataFileError, dumps, load_data, render_rational
from .identities import FIXED_SUITES, SUITE_MAX_N, SUITE_MIN_N, SUITES
from .partition import enumerate_partition_maps, sigma_from_ratios
from .prodproj import ProdData, prod_column_labels, prod_matrix
from .schubert import GrassData, grass_column_labels, grass_matrix
from .verify import DEFAULT_SEEDS, run_suite, suite_passed

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_VIOLATED = 3
EXIT_NOT_CERTIFIED = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="picardrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify an identity suite over a range of n")
    v.add_argument("suite", help="one of: " + ", ".join(SUITES))
    v.add_argument("range", nargs="*", type=int, metavar="N", help="optional N_MIN [N_MAX]")
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="JSON-lines report file (default: stdout)")
    v.add_argument("--seed", type=int, default=0, help="base seed of the random evaluation cross-check")
    v.add_argument("--seeds", type=int, default=DEFAULT_SEEDS, help="random points per instance")
    v.add_argument("--force", action="store_true", help="allow n beyond the default limits")

    a = sub.add_parser("analyze", help="certify the rank of an intersection data file")
    a.add_argument("input")
    a.add_argument("--out", help="certificate JSON file (default: stdout)")

    m = sub.add_parser("matrix", help="print the intersection matrix of a data file")
    m.add_argument("input")
    m.add_argument("--json", action="store_true", help="print the matrix as JSON")

    s = sub.add_parser("sigma", help="list partition maps for n, or derive sigma from a data file")
    s.add_argument("target", help="an integer n or a product-case data file")
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    if len(args.range) > 2:
        print("at most two positional bounds: N_MIN [N_MAX]", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1 or args.seeds < 0:
        print("--jobs must be >= 1 and --seeds >= 0", file=sys.stderr)
        return EXIT_USAGE
    n_min = n_max = None
    if args.suite not in FIXED_SUITES:
        pos = list(args.range)
        n_min = args.n_min if args.n_min is not None else (pos[0] if pos else SUITE_MIN_N[args.suite])
        n_max = args.n_max if args.n_max is not None else (pos[1] if len(pos) > 1 else (pos[0] if pos else SUITE_MAX_N[args.suite]))
        least = SUITE_MIN_N[args.suite]
        if n_min < least or n_max < n_min:
            print(f"need {least} <= n_min <= n_max for suite {args.suite}", file=sys.stderr)
            return EXIT_USAGE
        if n_max > SUITE_MAX_N[args.suite] and not args.force:
            print(
                f"n_max = {n_max} exceeds the limit {SUITE_MAX_N[args.suite]} for suite {args.suite}; "
                "pass --force to run anyway",
                file=sys.stderr,
            )
            return EXIT_USAGE
    reports = run_suite(args.suite, n_min, n_max, jobs=args.jobs, seeds=args.seeds, seed=args.seed)
    _write("".join(dumps(r.to_dict()) + "\n" for r in reports), args.out)
    verified = sum(r.verified for r in reports)
    disagree = sum(r.oracle_agrees is False for r in reports)
    print(
        f"{args.suite}: {verified}/{len(reports)} verified, "
        f"random cross-check disagreements: {disagree}",
        file=sys.stderr,
    )
    return EXIT_OK if suite_passed(reports) else EXIT_FAILED


def _load(path: str):
    try:
        return load_data(path)
    except OSError as exc:
        print(f"{path}: {exc.strerror}", file=sys.stderr)
    except DataFileError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
    return None


def cmd_analyze(args) -> int:
    data = _load(args.input)
    if data is None:
        return EXIT_USAGE
    cert = certify(data)
    _write(json.dumps(json.loads(dumps(cert.to_dict())), indent=2, sort_keys=True) + "\n", args.out)
    if not cert.hypothesis.ok:
        return EXIT_VIOLATED
    if cert.conclusion.kind in (NOT_FORCED, INCONSISTENT):
        return EXIT_NOT_CERTIFIED
    return EXIT_OK


def _matrix_and_labels(data):
    if isinstance(data, GrassData):
        return grass_matrix(data), ["H", "D"], grass_column_labels(data.n)
    if isinstance(data, ProdData):
        return prod_matrix(data), ["H1", "H2", "D"], prod_column_labels(data.n)
    m = misc_matrix(data)
    rows = {
        "projective": ["H", "D"],
        "quadric_even": ["H", "D"],
        "quadric_odd": ["H", "D"],
        "blowup_p6": ["H", "E", "D"],
        "curve_x_p5": ["H", "F", "D"],
    }[data.kind.value]
    return m, rows, [f"c{j}" for j in range(1, len(m[0]) + 1)]


def format_matrix(matrix, row_labels, col_labels) -> str:
    cells = [[""] + list(col_labels)]
    for label, row in zip(row_labels, matrix):
        cells.append([label] + [str(render_rational(x)) for x in row])
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells) + "\n"


def cmd_matrix(args) -> int:
    data = _load(args.input)
    if data is None:
        return EXIT_USAGE
    matrix, rows, cols = _matrix_and_labels(data)
    if args.json:
        sys.stdout.write(dumps({"rows": rows, "columns": cols, "matrix": matrix}) + "\n")
    else:
        sys.stdout.write(format_matrix(matrix, rows, cols))
    return EXIT_OK


def cmd_sigma(args) -> int:
    try:
        n = int(args.target)
    except ValueError:
        n = None
    if n is not None:
        if n < 2:
            print("n must be at least 2", file=sys.stderr)
            return EXIT_USAGE
        for s in enumerate_partition_maps(n):
            print(s.render())
        return EXIT_OK
    data = _load(args.target)
    if data is None:
        return EXIT_USAGE
    if not isinstance(data, ProdData):
        print("sigma needs product-case data (ambient 'prod')", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(sigma_from_ratios(data.a).render())
    except ValueError as exc:
        print(f"{args.target}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "verify": cmd_verify,
        "analyze": cmd_analyze,
        "matrix": cmd_matrix,
        "sigma": cmd_sigma,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
