"""Byte alphabets, rank transforms and q-gram encoding.

Sequences are plain ``bytes`` in ASCII. An :class:`Alphabet` is a set of
byte values with an O(1) membership table; a :class:`RankTransform` maps
the members to dense ranks ordered by byte value, which is what the index
structures and the q-gram encoder work on.

>>> dna = Alphabet(b"ACGT")
>>> dna.is_word(b"GATTACA")
True
>>> list(RankTransform(dna).transform(b"TGCA"))
[3, 2, 1, 0]
"""

from __future__ import annotations

from typing import Iterator, Union

from seqalgo.errors import InvalidAlphabet, QTooLarge, SymbolNotInAlphabet

BytesLike = Union[bytes, bytearray, memoryview, str]


def as_bytes(seq: BytesLike) -> bytes:
    """Return ``seq`` as immutable bytes; ``str`` is encoded as ASCII."""
    if isinstance(seq, bytes):
        return seq
    if isinstance(seq, str):
        return seq.encode("ascii")
    return bytes(seq)


class Alphabet:
    """A finite, non-empty set of byte symbols."""

    __slots__ = ("_table", "_symbols", "_deletechars")

    def __init__(self, symbols: BytesLike) -> None:
        symbols = as_bytes(symbols)
        if not symbols:
            raise InvalidAlphabet("an alphabet needs at least one symbol")
        table = bytearray(256)
        for c in symbols:
            table[c] = 1
        self._table = bytes(table)
        self._symbols = bytes(c for c in range(256) if table[c])
        # bytes.translate(None, deletechars) strips members in one C-level pass
        self._deletechars = self._symbols

    @property
    def symbols(self) -> bytes:
        """Distinct members in ascending byte order."""
        return self._symbols

    @property
    def max_symbol(self) -> int:
        return self._symbols[-1]

    def __len__(self) -> int:
        return len(self._symbols)

    def __contains__(self, symbol: int | bytes | str) -> bool:
        if isinstance(symbol, (bytes, str)):
            if len(symbol) != 1:
                return False
            symbol = as_bytes(symbol)[0]
        return 0 <= symbol < 256 and self._table[symbol] == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self._symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and other._symbols == self._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self._symbols!r})"

    def is_word(self, text: BytesLike) -> bool:
        """True iff every byte of ``text`` is a member. Linear in ``len(text)``."""
        return not as_bytes(text).translate(None, self._deletechars)

    def first_foreign(self, text: BytesLike) -> int:
        """Index of the first non-member byte of ``text``, or -1."""
        table = self._table
        for i, c in enumerate(as_bytes(text)):
            if not table[c]:
                return i
        return -1

    def union(self, other: BytesLike | Alphabet) -> Alphabet:
        extra = other.symbols if isinstance(other, Alphabet) else as_bytes(other)
        return Alphabet(self._symbols + extra)


def alphabet_new(symbols: BytesLike) -> Alphabet:
    return Alphabet(symbols)


def is_word(alphabet: Alphabet, text: BytesLike) -> bool:
    return alphabet.is_word(text)


DNA_SYMBOLS = b"ACGTacgt"
IUPAC_SYMBOLS = b"ACGTRYSWKMBDHVN" + b"acgtryswkmbdhvn" + b"-"


def dna_alphabet() -> Alphabet:
    """Case-insensitive ``ACGT``."""
    return Alphabet(DNA_SYMBOLS)


def iupac_alphabet() -> Alphabet:
    """The 15 IUPAC nucleotide codes in both cases, plus the gap ``-``."""
    return Alphabet(IUPAC_SYMBOLS)


class RankTransform:
    """Dense lexicographic ranks of an alphabet's symbols.

    Ranks follow raw byte order, so a case-sensitive alphabet ranks ``'A'``
    and ``'a'`` differently. ``bits_per_symbol`` is ``ceil(log2(|A|))`` with
    a floor of 1.
    """

    __slots__ = ("alphabet", "_table", "_inverse", "bits_per_symbol")

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        table = bytearray(256)
        for rank, c in enumerate(alphabet.symbols):
            table[c] = rank
        self._table = bytes(table)
        self._inverse = alphabet.symbols
        self.bits_per_symbol = max(1, (len(alphabet) - 1).bit_length())

    def __len__(self) -> int:
        return len(self.alphabet)

    def rank(self, symbol: int) -> int:
        if symbol not in self.alphabet:
            raise SymbolNotInAlphabet(0, symbol)
        return self._table[symbol]

    def transform(self, text: BytesLike) -> bytes:
        """Replace every symbol by its rank. Returns one byte per rank."""
        text = as_bytes(text)
        if not self.alphabet.is_word(text):
            pos = self.alphabet.first_foreign(text)
            raise SymbolNotInAlphabet(pos, text[pos])
        return text.translate(self._table)

    def inverse(self, ranks: BytesLike | list[int]) -> bytes:
        return bytes(self._inverse[r] for r in ranks)

    def qgrams(self, text: BytesLike, q: int) -> Iterator[int]:
        """Yield the bit-packed code of every q-gram of ``text``, left to right.

        The leftmost symbol occupies the most significant bits. Yields
        ``max(0, len(text) - q + 1)`` codes.
        """
        bits = self.bits_per_symbol
        if q < 1:
            raise ValueError("q must be at least 1")
        if q * bits > 64:
            raise QTooLarge(f"q={q} needs {q * bits} bits, more than 64")
        ranks = self.transform(text)
        return _rolling_codes(ranks, q, bits)


def _rolling_codes(ranks: bytes, q: int, bits: int) -> Iterator[int]:
    if len(ranks) < q:
        return
    mask = (1 << (q * bits)) - 1
    code = 0
    for r in ranks[: q - 1]:
        code = (code << bits) | r
    for r in ranks[q - 1 :]:
        code = ((code << bits) | r) & mask
        yield code


def rank_transform(transform: RankTransform, text: BytesLike) -> bytes:
    return transform.transform(text)


def qgram_ranks(transform: RankTransform, text: BytesLike, q: int) -> Iterator[int]:
    return transform.qgrams(text, q)


_COMPLEMENT_PAIRS = [
    (b"A", b"T"), (b"C", b"G"), (b"R", b"Y"), (b"S", b"S"), (b"W", b"W"),
    (b"K", b"M"), (b"B", b"V"), (b"D", b"H"), (b"N", b"N"),
]


def _complement_table() -> bytes:
    table = bytearray(range(256))
    for a, b in _COMPLEMENT_PAIRS:
        for x, y in ((a, b), (a.lower(), b.lower())):
            table[x[0]] = y[0]
            table[y[0]] = x[0]
    return bytes(table)


_COMPLEMENT = _complement_table()
_IUPAC = iupac_alphabet()


def complement(text: BytesLike) -> bytes:
    text = as_bytes(text)
    if not _IUPAC.is_word(text):
        pos = _IUPAC.first_foreign(text)
        raise SymbolNotInAlphabet(pos, text[pos])
    return text.translate(_COMPLEMENT)


def revcomp(text: BytesLike) -> bytes:
    """Reverse complement of an IUPAC DNA sequence, preserving case.

    >>> revcomp(b"AAC")
    b'GTT'
    """
    return complement(text)[::-1]
