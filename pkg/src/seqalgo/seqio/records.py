from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SeqRecord:
    """A FASTA or FASTQ record. ``qual`` is only set for FASTQ."""

    id: str
    seq: bytes
    desc: str | None = None
    qual: bytes | None = None

    def __len__(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class BedRecord:
    """One BED interval, zero-based and half-open.

    ``score`` is kept as the raw column text; columns past the sixth are kept
    verbatim in ``extra``.
    """

    chrom: str
    start: int
    end: int
    name: str | None = None
    score: str | None = None
    strand: str | None = None
    extra: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return self.end - self.start
