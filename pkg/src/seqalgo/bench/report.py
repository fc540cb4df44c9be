"""Text renderings of a :class:`BenchReport`."""

from __future__ import annotations

from seqalgo.bench.harness import BenchReport, cli_name

TSV_HEADER = ("algorithm", "iterations", "total_ms", "mean_us", "matches")


def to_tsv(report: BenchReport) -> str:
    lines = ["\t".join(TSV_HEADER)]
    for row in report.rows:
        lines.append(
            f"{cli_name(row.algorithm)}\t{row.iterations}\t{row.total_ms:.3f}\t{row.mean_us:.3f}\t{row.matches}"
        )
    return "\n".join(lines) + "\n"


def to_pretty(report: BenchReport) -> str:
    header = ("Algorithm", "Total", "Per iteration", "Matches")
    body = [
        (r.display_name, f"{r.total_ms:.0f}ms", f"{r.mean_us:.1f}us", str(r.matches))
        for r in report.rows
    ]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]

    def fmt(row: tuple[str, ...]) -> str:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(row[1:], widths[1:])]
        return "  ".join([first, *rest])

    rule = "-" * len(fmt(header))
    return "\n".join([rule, fmt(header), rule, *map(fmt, body), rule]) + "\n"


def emit_report(report: BenchReport, fmt: str = "tsv") -> bytes:
    if fmt == "tsv":
        return to_tsv(report).encode()
    if fmt == "pretty":
        return to_pretty(report).encode()
    raise ValueError(f"unknown report format {fmt!r}")
