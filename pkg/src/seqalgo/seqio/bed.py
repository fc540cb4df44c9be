"""BED reading and writing."""

from __future__ import annotations

from typing import Iterable, Iterator

from seqalgo.errors import FormatError
from seqalgo.seqio._lines import Sink, Source, numbered_lines, open_sink, open_source
from seqalgo.seqio.records import BedRecord

_SKIP_PREFIXES = (b"#", b"track", b"browser")
STRANDS = ("+", "-", ".")


def parse_bed_line(line: bytes, number: int | None = None) -> BedRecord:
    fields = line.decode().split("\t")
    if len(fields) < 3:
        raise FormatError(f"expected at least 3 tab-separated columns, got {len(fields)}", number)
    try:
        start, end = int(fields[1]), int(fields[2])
    except ValueError:
        raise FormatError("coordinates must be integers", number) from None
    if start < 0:
        raise FormatError("start must be non-negative", number)
    if end <= start:
        raise FormatError(f"end {end} is not after start {start}", number)
    opt = fields[3:6] + [None] * (6 - len(fields[:6]))
    if opt[2] is not None and opt[2] not in STRANDS:
        raise FormatError(f"invalid strand {opt[2]!r}", number)
    return BedRecord(fields[0], start, end, opt[0], opt[1], opt[2], tuple(fields[6:]))


def bed_records(source: Source) -> Iterator[BedRecord]:
    """Stream BED records; blank, comment, ``track`` and ``browser`` lines are skipped."""
    with open_source(source) as fh:
        for number, line in numbered_lines(fh):
            if not line.strip() or line.startswith(_SKIP_PREFIXES):
                continue
            yield parse_bed_line(line, number)


def format_bed(record: BedRecord) -> bytes:
    optional = [record.name, record.score, record.strand]
    if record.extra:
        width = 3
    else:
        width = max((i + 1 for i, v in enumerate(optional) if v is not None), default=0)
    cols = [record.chrom, str(record.start), str(record.end)]
    cols += ["." if v is None else v for v in optional[:width]]
    cols += record.extra
    return "\t".join(cols).encode() + b"\n"


def bed_write(records: Iterable[BedRecord], sink: Sink) -> None:
    with open_sink(sink) as fh:
        for record in records:
            fh.write(format_bed(record))
