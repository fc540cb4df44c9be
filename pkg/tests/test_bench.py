import subprocess
import sys

import pytest

from seqalgo.bench import (
    TSV_HEADER,
    BenchConfig,
    BenchReport,
    BenchRow,
    emit_report,
    run_bench,
    synthetic_text,
)
from seqalgo.bench.harness import DEFAULT_ITERATIONS, DEFAULT_PATTERN, resolve_algorithms
from seqalgo.cli import main
from seqalgo.errors import InternalConsistencyError, PatternTooLong


def test_defaults():
    cfg = BenchConfig(synthetic=(100, 1))
    assert cfg.pattern == b"GCGCGTACACACCGCCCG" == DEFAULT_PATTERN
    assert cfg.iterations == DEFAULT_ITERATIONS == 10_000
    assert cfg.algorithms == ["bndm", "horspool", "bom", "shift_and"]
    assert cfg.include_init


def test_all_with_extra():
    assert resolve_algorithms(["all"], extra=True) == ["bndm", "horspool", "bom", "shift_and", "kmp", "naive"]
    assert resolve_algorithms(["kmp", "shift-and", "kmp"]) == ["kmp", "shift_and"]
    with pytest.raises(ValueError):
        resolve_algorithms(["grep"])


@pytest.mark.parametrize(
    "kwargs",
    [
        {"synthetic": (10, 1), "iterations": 0},
        {"synthetic": (10, 1), "pattern": b""},
        {},
        {"synthetic": (10, 1), "text_file": "x.fa"},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        BenchConfig(**kwargs)


def test_pattern_equal_to_text_matches_once(tmp_path):
    text = b"ACGTTGCAAC"
    path = tmp_path / "t.fa"
    path.write_bytes(b">t\n" + text + b"\n")
    report = run_bench(BenchConfig(["all"], text, text_file=path, iterations=1, include_extra=True))
    assert [r.matches for r in report.rows] == [1] * 6


def test_synthetic_is_deterministic():
    assert synthetic_text(500, 9) == synthetic_text(500, 9) != synthetic_text(500, 10)
    assert set(synthetic_text(500, 9)) == set(b"ACGT")
    cfg = dict(algorithms=["all"], pattern=b"ACG", synthetic=(4000, 3), iterations=2)
    first, second = run_bench(BenchConfig(**cfg)), run_bench(BenchConfig(**cfg))
    assert [r.matches for r in first.rows] == [r.matches for r in second.rows]
    assert first.rows[0].matches > 0


def test_timings_positive_and_consistent():
    report = run_bench(BenchConfig(["bndm"], b"ACGTAC", synthetic=(2000, 5), iterations=1000, include_init=False))
    row = report.row("bndm")
    assert row.total_ns > 0
    assert row.mean_us == pytest.approx(row.total_ms * 1000 / row.iterations)


def test_long_pattern_rejected_for_bit_parallel():
    with pytest.raises(PatternTooLong):
        run_bench(BenchConfig(["bndm"], b"A" * 65, synthetic=(100, 1), iterations=1))
    # BOM and Horspool have no word limit
    report = run_bench(BenchConfig(["bom", "horspool"], b"A" * 65, synthetic=(100, 1), iterations=1))
    assert [r.matches for r in report.rows] == [0, 0]


def test_disagreement_is_loud(monkeypatch):
    from seqalgo.bench import harness

    class Broken(harness.MATCHERS["naive"]):
        def find_all(self, text):
            yield 0

    monkeypatch.setitem(harness.MATCHERS, "naive", Broken)
    with pytest.raises(InternalConsistencyError):
        run_bench(BenchConfig(["kmp", "naive"], b"TTTT", synthetic=(50, 2), iterations=1))


def _report():
    rows = [
        BenchRow("bndm", 10, 7_700_000, 3),
        BenchRow("horspool", 10, 12_200_000, 3),
        BenchRow("bom", 10, 10_300_000, 3),
        BenchRow("shift_and", 10, 24_100_000, 3),
    ]
    return BenchReport(rows, 16_000, DEFAULT_PATTERN)


def test_tsv_layout():
    lines = emit_report(_report(), "tsv").decode().splitlines()
    assert lines[0] == "algorithm\titerations\ttotal_ms\tmean_us\tmatches"
    assert tuple(lines[0].split("\t")) == TSV_HEADER
    assert lines[1:] == [
        "bndm\t10\t7.700\t770.000\t3",
        "horspool\t10\t12.200\t1220.000\t3",
        "bom\t10\t10.300\t1030.000\t3",
        "shift-and\t10\t24.100\t2410.000\t3",
    ]


def test_pretty_lists_algorithms_in_table_order():
    text = emit_report(_report(), "pretty").decode()
    names = ["BNDM", "Horspool", "BOM", "Shift-And"]
    positions = [text.index(f"\n{n} ") for n in names]
    assert positions == sorted(positions)
    assert "770.0us" in text


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(_report(), "csv")


def test_ordering_warning():
    assert _report().ordering_warnings() == []
    slow = BenchReport([BenchRow("bndm", 1, 10, 0), BenchRow("shift_and", 1, 5, 0)], 1, b"A")
    assert len(slow.ordering_warnings()) == 1


def test_cli_tsv(capsys):
    assert main(["bench", "--algorithm", "all", "--synthetic", "3000:42", "--iterations", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t") == list(TSV_HEADER)
    assert [line.split("\t")[0] for line in lines[1:]] == ["bndm", "horspool", "bom", "shift-and"]


def test_cli_pretty_and_figure(tmp_path, capsys):
    fig = tmp_path / "bench.png"
    argv = ["bench", "--algorithm", "kmp", "--algorithm", "naive", "--pattern", "ACGT",
            "--synthetic", "1000:1", "--iterations", "2", "--format", "pretty", "--figure", str(fig)]
    assert main(argv) == 0
    assert "KMP" in capsys.readouterr().out
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_cli_unreadable_file(tmp_path, capsys, caplog):
    assert main(["bench", "--text-file", str(tmp_path / "missing.fa"), "--iterations", "1"]) != 0
    assert capsys.readouterr().out == ""
    assert "missing.fa" in caplog.text


def test_cli_pattern_too_long(caplog):
    assert main(["bench", "--pattern", "A" * 70, "--synthetic", "100:1", "--iterations", "1"]) != 0
    assert "64" in caplog.text


def test_cli_diagnostics_go_to_stderr(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "seqalgo", "bench", "--text-file", str(tmp_path / "nope.fa")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout == ""
    assert "nope.fa" in proc.stderr


@pytest.mark.parametrize(
    "argv",
    [
        ["bench", "--synthetic", "10"],
        ["bench", "--synthetic", "10:1", "--iterations", "0"],
        ["bench", "--synthetic", "10:1", "--algorithm", "grep"],
        ["bench"],
    ],
)
def test_cli_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code != 0
