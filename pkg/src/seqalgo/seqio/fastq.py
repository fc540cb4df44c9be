"""FASTQ reading and writing (four lines per record)."""

from __future__ import annotations

from typing import Iterable, Iterator

from seqalgo.errors import FormatError, UnexpectedEof
from seqalgo.seqio._lines import Sink, Source, numbered_lines, open_sink, open_source
from seqalgo.seqio.fasta import parse_header
from seqalgo.seqio.records import SeqRecord


def fastq_records(source: Source) -> Iterator[SeqRecord]:
    with open_source(source) as fh:
        lines = numbered_lines(fh)
        for number, line in lines:
            if not line:
                continue
            if not line.startswith(b"@"):
                raise FormatError("expected '@' at the start of a record", number)
            ident, desc = parse_header(line, number)
            try:
                _, seq = next(lines)
                plus_no, plus = next(lines)
                qual_no, qual = next(lines)
            except StopIteration:
                raise UnexpectedEof(f"record {ident!r} is truncated", number) from None
            if not plus.startswith(b"+"):
                raise FormatError("expected '+' separator line", plus_no)
            if len(qual) != len(seq):
                raise FormatError(
                    f"quality length {len(qual)} differs from sequence length {len(seq)}", qual_no
                )
            yield SeqRecord(ident, seq, desc, qual)


def format_fastq(record: SeqRecord) -> bytes:
    if record.qual is None or len(record.qual) != len(record.seq):
        raise FormatError(f"record {record.id!r} needs one quality byte per base")
    head = record.id if record.desc is None else f"{record.id} {record.desc}"
    return b"@" + head.encode() + b"\n" + record.seq + b"\n+\n" + record.qual + b"\n"


def fastq_write(records: Iterable[SeqRecord], sink: Sink) -> None:
    with open_sink(sink) as fh:
        for record in records:
            fh.write(format_fastq(record))
