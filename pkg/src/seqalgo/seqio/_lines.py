from __future__ import annotations

import contextlib
import os
from typing import BinaryIO, Iterator, Union

Source = Union[BinaryIO, str, os.PathLike]
Sink = Union[BinaryIO, str, os.PathLike]


@contextlib.contextmanager
def open_source(source: Source) -> Iterator[BinaryIO]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            yield fh
    else:
        yield source


@contextlib.contextmanager
def open_sink(sink: Sink) -> Iterator[BinaryIO]:
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "wb") as fh:
            yield fh
    else:
        yield sink


def numbered_lines(stream: BinaryIO) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, line)`` with the ``\\n`` or ``\\r\\n`` ending removed."""
    for number, line in enumerate(stream, start=1):
        if line.endswith(b"\n"):
            line = line[:-1]
            if line.endswith(b"\r"):
                line = line[:-1]
        yield number, line
