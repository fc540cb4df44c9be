from seqalgo.bench.harness import (
    DEFAULT_ITERATIONS,
    DEFAULT_PATTERN,
    BenchConfig,
    BenchReport,
    BenchRow,
    run_bench,
    synthetic_text,
)
from seqalgo.bench.report import TSV_HEADER, emit_report

__all__ = [
    "DEFAULT_ITERATIONS",
    "DEFAULT_PATTERN",
    "TSV_HEADER",
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "emit_report",
    "run_bench",
    "synthetic_text",
]
