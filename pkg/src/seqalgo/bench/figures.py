"""Matplotlib rendering of benchmark reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from seqalgo.bench.harness import BenchReport  # noqa: E402


def plot_report(report: BenchReport, path: str | Path, title: str | None = None) -> Path:
    """Bar chart of the mean time per iteration, one bar per algorithm.

    The file format follows the suffix of ``path`` (png, pdf, svg, ...).
    """
    path = Path(path)
    names = [r.display_name for r in report.rows]
    means = [r.mean_us for r in report.rows]

    fig, ax = plt.subplots(figsize=(5, 3))
    bars = ax.bar(names, means, color="0.35")
    ax.bar_label(bars, fmt="%.1f", fontsize=8)
    ax.set_ylabel("mean time per iteration (us)")
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    if title is None:
        title = f"{report.pattern.decode()} in {report.text_length:,} bp"
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
