"""FASTA reading and writing."""

from __future__ import annotations

from typing import Iterable, Iterator

from seqalgo.errors import FormatError
from seqalgo.seqio._lines import Sink, Source, numbered_lines, open_sink, open_source
from seqalgo.seqio.records import SeqRecord

LINE_WIDTH = 60


def parse_header(line: bytes, number: int) -> tuple[str, str | None]:
    parts = line[1:].split(None, 1)
    if not parts:
        raise FormatError("record without an identifier", number)
    ident = parts[0].decode()
    desc = parts[1].decode() if len(parts) > 1 else None
    return ident, desc


def fasta_records(source: Source) -> Iterator[SeqRecord]:
    """Stream records from a FASTA file, path or binary stream.

    Sequence lines are joined without their line breaks. Only the record
    being assembled is held in memory.
    """
    with open_source(source) as fh:
        header: tuple[str, str | None] | None = None
        chunks: list[bytes] = []
        for number, line in numbered_lines(fh):
            if line.startswith(b">"):
                if header is not None:
                    yield SeqRecord(header[0], b"".join(chunks), header[1])
                header = parse_header(line, number)
                chunks = []
            elif header is None:
                if line.strip():
                    raise FormatError("expected '>' at the start of a record", number)
            else:
                chunks.append(line.strip())
        if header is not None:
            yield SeqRecord(header[0], b"".join(chunks), header[1])


def format_fasta(record: SeqRecord, width: int = LINE_WIDTH) -> bytes:
    head = record.id if record.desc is None else f"{record.id} {record.desc}"
    out = [b">" + head.encode()]
    seq = record.seq
    out.extend(seq[i : i + width] for i in range(0, len(seq), width))
    return b"\n".join(out) + b"\n"


def fasta_write(records: Iterable[SeqRecord], sink: Sink, width: int = LINE_WIDTH) -> None:
    with open_sink(sink) as fh:
        for record in records:
            fh.write(format_fasta(record, width))
