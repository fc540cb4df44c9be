"""Command line entry point: ``seqalgo bench ...``."""

from __future__ import annotations

import argparse
import logging
import sys

from seqalgo.bench.harness import (
    DEFAULT_ITERATIONS,
    DEFAULT_PATTERN,
    EXTRA_ALGORITHMS,
    STANDARD_ALGORITHMS,
    BenchConfig,
    cli_name,
    run_bench,
)
from seqalgo.bench.report import emit_report
from seqalgo.errors import SeqAlgoError

log = logging.getLogger("seqalgo")

ALGORITHM_CHOICES = ["all", *map(cli_name, STANDARD_ALGORITHMS + EXTRA_ALGORITHMS)]


def _synthetic(value: str) -> tuple[int, int]:
    try:
        length, seed = value.split(":")
        parsed = int(length), int(seed)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LENGTH:SEED, got {value!r}") from None
    if parsed[0] < 0:
        raise argparse.ArgumentTypeError("synthetic length must be non-negative")
    return parsed


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqalgo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser(
        "bench",
        help="time repeated exact pattern search over one text",
        description="Time repeated exact pattern search; the report goes to stdout.",
    )
    bench.add_argument(
        "--algorithm", action="append", choices=ALGORITHM_CHOICES,
        help="algorithm to run; repeat for several ('all' = bndm, horspool, bom, shift-and)",
    )
    bench.add_argument("--pattern", default=DEFAULT_PATTERN.decode())
    source = bench.add_mutually_exclusive_group(required=True)
    source.add_argument("--text-file", help="FASTA file; its first record is searched")
    source.add_argument("--synthetic", type=_synthetic, metavar="LENGTH:SEED",
                        help="uniform random DNA text of LENGTH from RNG SEED")
    bench.add_argument("--iterations", type=_positive, default=DEFAULT_ITERATIONS)
    bench.add_argument("--no-init", action="store_true",
                       help="build each matcher once instead of once per iteration")
    bench.add_argument("--with-extra", action="store_true",
                       help="let 'all' also run kmp and naive")
    bench.add_argument("--format", choices=("tsv", "pretty"), default="tsv")
    bench.add_argument("--figure", metavar="PATH",
                       help="also render a bar chart of per-iteration times to PATH")
    return parser


def run_bench_command(args: argparse.Namespace) -> int:
    cfg = BenchConfig(
        algorithms=args.algorithm or ["all"],
        pattern=args.pattern.encode(),
        text_file=args.text_file,
        synthetic=args.synthetic,
        iterations=args.iterations,
        include_init=not args.no_init,
        include_extra=args.with_extra,
    )
    report = run_bench(cfg)
    sys.stdout.buffer.write(emit_report(report, args.format))
    sys.stdout.flush()
    for warning in report.ordering_warnings():
        log.warning(warning)
    if args.figure:
        from seqalgo.bench.figures import plot_report

        log.info("figure written to %s", plot_report(report, args.figure))
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return run_bench_command(args)
    except (SeqAlgoError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
