"""Exception hierarchy shared by all seqalgo modules."""

from __future__ import annotations


class SeqAlgoError(Exception):
    """Base class for every error raised by seqalgo."""


class InvalidAlphabet(SeqAlgoError, ValueError):
    pass


class SymbolNotInAlphabet(SeqAlgoError, ValueError):
    """A byte outside the alphabet was found at ``position``."""

    def __init__(self, position: int, symbol: int | None = None) -> None:
        self.position = position
        self.symbol = symbol
        if symbol is None:
            msg = f"symbol at position {position} is not in the alphabet"
        else:
            msg = f"symbol {bytes([symbol])!r} at position {position} is not in the alphabet"
        super().__init__(msg)


class QTooLarge(SeqAlgoError, ValueError):
    pass


class InvalidSentinel(SeqAlgoError, ValueError):
    pass


class IndexTextMismatch(SeqAlgoError, ValueError):
    pass


class OutOfBounds(SeqAlgoError, IndexError):
    pass


class NotEnoughBits(SeqAlgoError, ValueError):
    pass


class BucketTableTooLarge(SeqAlgoError, MemoryError):
    pass


class LengthMismatch(SeqAlgoError, ValueError):
    pass


class EmptyPattern(SeqAlgoError, ValueError):
    pass


class PatternTooLong(SeqAlgoError, ValueError):
    pass


class FormatError(SeqAlgoError, ValueError):
    """Malformed sequence file; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnexpectedEof(FormatError):
    pass


class InternalConsistencyError(SeqAlgoError, RuntimeError):
    """Two algorithms that must agree produced different answers."""
