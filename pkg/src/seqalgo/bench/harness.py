"""Repeated exact-search timing over one text.

Each iteration builds the matcher from the pattern (unless ``include_init``
is off) and consumes every match, mirroring a benchmark where pattern
preprocessing is part of the measured cost.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

from seqalgo.alphabets import as_bytes
from seqalgo.errors import FormatError, InternalConsistencyError
from seqalgo.exact import MATCHERS
from seqalgo.seqio import fasta_records

DEFAULT_PATTERN = b"GCGCGTACACACCGCCCG"
DEFAULT_ITERATIONS = 10_000
# ``all`` selects these, in this order; ``extra`` widens it
STANDARD_ALGORITHMS = ("bndm", "horspool", "bom", "shift_and")
EXTRA_ALGORITHMS = ("kmp", "naive")

DISPLAY_NAMES = {
    "bndm": "BNDM",
    "horspool": "Horspool",
    "bom": "BOM",
    "shift_and": "Shift-And",
    "kmp": "KMP",
    "naive": "Naive",
}


def canonical_name(name: str) -> str:
    key = name.lower().replace("-", "_")
    if key not in MATCHERS:
        raise ValueError(f"unknown algorithm {name!r}")
    return key


def cli_name(name: str) -> str:
    return name.replace("_", "-")


def resolve_algorithms(names: list[str] | str, extra: bool = False) -> list[str]:
    if isinstance(names, str):
        names = [names]
    out: list[str] = []
    for name in names:
        if name.lower() == "all":
            picked = list(STANDARD_ALGORITHMS) + (list(EXTRA_ALGORITHMS) if extra else [])
        else:
            picked = [canonical_name(name)]
        out.extend(p for p in picked if p not in out)
    return out


def synthetic_text(length: int, seed: int, symbols: bytes = b"ACGT") -> bytes:
    rng = random.Random(seed)
    return bytes(rng.choices(symbols, k=length))


def read_first_fasta(path: str | Path) -> bytes:
    for record in fasta_records(path):
        return record.seq
    raise FormatError(f"{path}: no FASTA record found")


@dataclass
class BenchConfig:
    algorithms: list[str] = field(default_factory=lambda: list(STANDARD_ALGORITHMS))
    pattern: bytes = DEFAULT_PATTERN
    text_file: str | Path | None = None
    synthetic: tuple[int, int] | None = None
    iterations: int = DEFAULT_ITERATIONS
    include_init: bool = True
    include_extra: bool = False

    def __post_init__(self) -> None:
        self.pattern = as_bytes(self.pattern)
        self.algorithms = resolve_algorithms(self.algorithms, self.include_extra)
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if not self.pattern:
            raise ValueError("pattern must not be empty")
        if (self.text_file is None) == (self.synthetic is None):
            raise ValueError("give exactly one of text_file and synthetic")

    def load_text(self) -> bytes:
        if self.text_file is not None:
            return read_first_fasta(self.text_file)
        length, seed = self.synthetic
        return synthetic_text(length, seed)


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    iterations: int
    total_ns: int
    matches: int

    @property
    def total_ms(self) -> float:
        return self.total_ns / 1e6

    @property
    def mean_us(self) -> float:
        return self.total_ns / self.iterations / 1e3

    @property
    def display_name(self) -> str:
        return DISPLAY_NAMES[self.algorithm]


@dataclass
class BenchReport:
    rows: list[BenchRow]
    text_length: int
    pattern: bytes

    def row(self, algorithm: str) -> BenchRow:
        key = canonical_name(algorithm)
        for row in self.rows:
            if row.algorithm == key:
                return row
        raise KeyError(algorithm)

    def ordering_warnings(self) -> list[str]:
        """Soft sanity check: BNDM should not be slower than Shift-And."""
        names = {r.algorithm: r for r in self.rows}
        if "bndm" in names and "shift_and" in names:
            b, s = names["bndm"], names["shift_and"]
            if b.mean_us > s.mean_us:
                return [f"BNDM mean {b.mean_us:.1f}us exceeds Shift-And mean {s.mean_us:.1f}us"]
        return []


def _time_search(cls: type, pattern: bytes, text: bytes, iterations: int, include_init: bool) -> int:
    drain = deque(maxlen=0).extend
    clock = time.perf_counter_ns
    if include_init:
        start = clock()
        for _ in range(iterations):
            drain(cls(pattern).find_all(text))
        return clock() - start
    matcher = cls(pattern)
    start = clock()
    for _ in range(iterations):
        drain(matcher.find_all(text))
    return clock() - start


def run_bench(cfg: BenchConfig) -> BenchReport:
    text = cfg.load_text()
    # build every matcher first so a pattern/algorithm mismatch fails before timing
    classes = {name: MATCHERS[name] for name in cfg.algorithms}
    counts = {name: sum(1 for _ in cls(cfg.pattern).find_all(text)) for name, cls in classes.items()}
    if len(set(counts.values())) > 1:
        detail = ", ".join(f"{cli_name(k)}={v}" for k, v in counts.items())
        raise InternalConsistencyError(f"algorithms disagree on the match count: {detail}")
    rows = [
        BenchRow(
            name,
            cfg.iterations,
            _time_search(cls, cfg.pattern, text, cfg.iterations, cfg.include_init),
            counts[name],
        )
        for name, cls in classes.items()
    ]
    return BenchReport(rows, len(text), cfg.pattern)
