"""Command-line front door.

Exit codes: 0 success, 1 rule violation (a grid fails verification, or
the exhaustive search disagrees with the constructed grid), 2 usage or
input error, 3 refused (size above the search ceiling).

Data output goes to stdout and is byte-deterministic for fixed
arguments; elapsed times and warnings go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .errors import GridFormatError, GridParseError, PulsarError
from .formats import parse_document, render_ascii, render_structured, render_svg, render_text
from .geometry import layout
from .puzzle import solve, verify_all
from .search import DEFAULT_MAX_N, HARD_MAX_N, enumerate_solutions
from .sequence import sequence_prefix

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

_RENDERERS = {
    "text": render_text,
    "structured": render_structured,
    "svg": render_svg,
    "ascii": render_ascii,
}


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_seq(args: argparse.Namespace) -> int:
    if args.count < 0:
        return _usage_error(f"count must be >= 0, got {args.count}")
    terms = sequence_prefix(args.count)
    if args.pieces:
        groups = []
        a, i = 1, 0
        while i < len(terms):
            groups.append(",".join(map(str, terms[i : i + a])))
            i += a
            a += 1
        out = " | ".join(groups)
    else:
        out = ",".join(map(str, terms))
    if out:
        print(out)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _usage_error(f"size must be >= 1, got {args.n}")
    sys.stdout.write(_RENDERERS[args.format](solve(args.n)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return _usage_error(f"cannot read {args.path}: {exc}")
    try:
        grid = parse_document(text)
    except GridParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = verify_all(grid)
    except GridFormatError as exc:
        print(f"malformed grid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report.ok:
        print(f"OK: N={grid.n} grid satisfies all rules")
        return EXIT_OK
    print(f"FAIL: {len(report.violations)} violation(s)")
    for where, reason in report.violations:
        print(f"  {where}: {reason}")
    return EXIT_VIOLATION


def cmd_unique(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= HARD_MAX_N:
        return _usage_error(f"--max-n must be in 1..{HARD_MAX_N}, got {args.max_n}")
    if args.cap < 1:
        return _usage_error(f"--cap must be >= 1, got {args.cap}")
    if args.n < 1:
        return _usage_error(f"size must be >= 1, got {args.n}")
    if args.n > args.max_n:
        print(
            f"refused: size {args.n} exceeds the search ceiling {args.max_n} "
            f"(hard maximum {HARD_MAX_N})",
            file=sys.stderr,
        )
        return EXIT_REFUSED
    if args.n == HARD_MAX_N:
        print("warning: size 7 exhaustive searches can take a very long time", file=sys.stderr)
    report = enumerate_solutions(args.n, cap=args.cap, max_n=args.max_n)
    expected = solve(args.n)
    match = report.solution_count == 1 and report.solutions[0] == expected
    verdict = "MATCH" if match else "MISMATCH"
    print(f"solutions={report.solution_count} nodes={report.nodes_expanded} {verdict}")
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if match else EXIT_VIOLATION


def cmd_layout(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _usage_error(f"size must be >= 1, got {args.n}")
    lay = layout(args.n)
    tokens = {
        coord: f"{tag.spiral.value}({tag.a},{tag.b})" for coord, tag in lay.tags.items()
    }
    width = max(len(token) for token in tokens.values())
    for r in range(1, args.n + 1):
        line = " ".join(tokens[(r, c)].ljust(width) for c in range(1, args.n + 1))
        print(line.rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pulsar",
        description=(
            "Compute the spiral value sequence, build and verify self-counting "
            "circled-spiral Latin square puzzles, and check solution uniqueness "
            "at small sizes by exhaustive search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print the first COUNT sequence terms")
    p.add_argument("count", type=int, help="number of terms (>= 0)")
    p.add_argument("--pieces", action="store_true", help="group terms by piece")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("solve", help="print the solved grid of size N")
    p.add_argument("n", type=int, metavar="N", help="grid size (>= 1)")
    p.add_argument(
        "--format",
        choices=sorted(_RENDERERS),
        default="text",
        help="output format (default: text)",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a grid document against all rules")
    p.add_argument("path", help="text or structured grid document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "unique",
        help="exhaustively count solutions of size N and compare with the constructed grid",
    )
    p.add_argument("n", type=int, metavar="N", help="grid size (>= 1)")
    p.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_MAX_N,
        help=f"search ceiling (default {DEFAULT_MAX_N}, hard maximum {HARD_MAX_N})",
    )
    p.add_argument("--cap", type=int, default=2, help="solutions to record (default 2)")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("layout", help="print each cell's spiral tag, e.g. P(4,1) or D(5,3)")
    p.add_argument("n", type=int, metavar="N", help="grid size (>= 1)")
    p.set_defaults(func=cmd_layout)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except PulsarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
