"""Suffix array by induced sorting, the BWT, and the FM count tables.

Texts must end with a single sentinel byte (``$`` by default) that is
strictly smaller than every other byte of the text. Construction works on
the rank-transformed text, so the bucket arrays are sized by the number of
distinct symbols rather than by 256.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence

from seqalgo.alphabets import Alphabet, BytesLike, as_bytes
from seqalgo.errors import IndexTextMismatch, InvalidSentinel, SymbolNotInAlphabet

SENTINEL = ord("$")


def _sentinel_byte(sentinel: int | BytesLike) -> int:
    if isinstance(sentinel, int):
        return sentinel
    sentinel = as_bytes(sentinel)
    if len(sentinel) != 1:
        raise InvalidSentinel("sentinel must be a single byte")
    return sentinel[0]


def check_sentinel(text: bytes, sentinel: int = SENTINEL) -> None:
    if not text or text[-1] != sentinel:
        raise InvalidSentinel("text must end with the sentinel")
    if text.count(sentinel) != 1:
        raise InvalidSentinel("sentinel occurs inside the text")
    if min(text) != sentinel:
        raise InvalidSentinel("sentinel must be smaller than every text symbol")


def suffix_array(text: BytesLike, sentinel: int | BytesLike = SENTINEL) -> list[int]:
    """Suffix array of a sentinel-terminated text, built with SA-IS in O(n).

    >>> suffix_array(b"banana$")
    [6, 5, 3, 1, 0, 4, 2]
    """
    text = as_bytes(text)
    sentinel = _sentinel_byte(sentinel)
    check_sentinel(text, sentinel)
    symbols = sorted(set(text))
    table = bytearray(256)
    for rank, c in enumerate(symbols):
        table[c] = rank
    return sais(list(text.translate(table)), len(symbols))


def sais(s: Sequence[int], k: int) -> list[int]:
    """SA-IS over an integer string whose last symbol is a unique minimum 0.

    ``k`` is the alphabet size; every symbol lies in ``range(k)``.
    """
    n = len(s)
    if n == 1:
        return [0]

    # 1 = S-type, 0 = L-type
    stype = bytearray(n)
    stype[-1] = 1
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1] or (s[i] == s[i + 1] and stype[i + 1]):
            stype[i] = 1

    lms = [i for i in range(1, n) if stype[i] and not stype[i - 1]]

    counts = [0] * k
    for c in s:
        counts[c] += 1
    bucket_ends = list(accumulate(counts))
    bucket_starts = [e - c for e, c in zip(bucket_ends, counts)]

    def induce(sa: list[int]) -> None:
        heads = bucket_starts[:]
        for i in range(n):
            j = sa[i] - 1
            if j >= 0 and not stype[j]:
                c = s[j]
                sa[heads[c]] = j
                heads[c] += 1
        tails = bucket_ends[:]
        for i in range(n - 1, -1, -1):
            j = sa[i] - 1
            if j >= 0 and stype[j]:
                c = s[j]
                tails[c] -= 1
                sa[tails[c]] = j

    def place_lms(order: Sequence[int]) -> list[int]:
        sa = [-1] * n
        tails = bucket_ends[:]
        for p in reversed(order):
            c = s[p]
            tails[c] -= 1
            sa[tails[c]] = p
        return sa

    # LMS substrings sorted by one round of induction
    sa = place_lms(lms)
    induce(sa)

    is_lms = bytearray(n)
    for p in lms:
        is_lms[p] = 1

    def same_lms_substring(a: int, b: int) -> bool:
        if s[a] != s[b] or stype[a] != stype[b]:
            return False
        i = 1
        while True:
            ea, eb = is_lms[a + i], is_lms[b + i]
            if s[a + i] != s[b + i] or stype[a + i] != stype[b + i] or ea != eb:
                return False
            if ea:
                return True
            i += 1

    names = [-1] * n
    name = -1
    prev = -1
    for p in sa:
        if not is_lms[p]:
            continue
        # the sentinel substring is unique and compares first
        if prev < 0 or p == n - 1 or prev == n - 1 or not same_lms_substring(prev, p):
            name += 1
        names[p] = name
        prev = p
    num_names = name + 1

    reduced = [names[p] for p in lms]
    if num_names == len(lms):
        reduced_sa = [0] * len(lms)
        for i, r in enumerate(reduced):
            reduced_sa[r] = i
    else:
        reduced_sa = sais(reduced, num_names)

    sa = place_lms([lms[i] for i in reduced_sa])
    induce(sa)
    return sa


def bwt(text: BytesLike, sa: Sequence[int]) -> bytes:
    """Burrows-Wheeler transform from a text and its suffix array.

    >>> bwt(b"banana$", suffix_array(b"banana$"))
    b'annb$aa'
    """
    text = as_bytes(text)
    if len(sa) != len(text):
        raise IndexTextMismatch(f"suffix array has {len(sa)} entries, text has {len(text)}")
    return bytes(text[p - 1] for p in sa)


def invert_bwt(b: BytesLike, sentinel: int | BytesLike = SENTINEL) -> bytes:
    """Reconstruct the original text by walking the LF mapping from the sentinel row."""
    b = as_bytes(b)
    sentinel = _sentinel_byte(sentinel)
    if b.count(sentinel) != 1:
        raise InvalidSentinel("a BWT must contain the sentinel exactly once")
    if min(b) != sentinel:
        raise InvalidSentinel("sentinel must be smaller than every text symbol")
    n = len(b)
    counts = [0] * 256
    # rank_before[i] = occurrences of b[i] in b[:i]
    rank_before = [0] * n
    for i, c in enumerate(b):
        rank_before[i] = counts[c]
        counts[c] += 1
    less = [0] * 256
    total = 0
    for c in range(256):
        less[c] = total
        total += counts[c]
    out = bytearray(n)
    out[-1] = sentinel
    row = 0
    for i in range(n - 2, -1, -1):
        c = b[row]
        out[i] = c
        row = less[c] + rank_before[row]
    return bytes(out)


def _index_symbols(b: bytes, alphabet: Alphabet, sentinels: bytes) -> bytes:
    allowed = alphabet.union(sentinels) if sentinels else alphabet
    if not allowed.is_word(b):
        pos = allowed.first_foreign(b)
        raise SymbolNotInAlphabet(pos, b[pos])
    return allowed.symbols


class LessTable:
    """``less[c]``: number of BWT symbols strictly smaller than ``c``."""

    __slots__ = ("_less", "symbols")

    def __init__(self, b: BytesLike, alphabet: Alphabet, sentinels: BytesLike = b"$") -> None:
        b = as_bytes(b)
        self.symbols = _index_symbols(b, alphabet, as_bytes(sentinels))
        less = [0] * 257
        counts = [0] * 256
        for c in self.symbols:
            counts[c] = b.count(c)
        total = 0
        for c in range(256):
            less[c] = total
            total += counts[c]
        less[256] = total
        self._less = less

    def __getitem__(self, c: int) -> int:
        return self._less[c]

    def next_bound(self, c: int) -> int:
        """``less`` of the symbol following ``c`` in byte order."""
        return self._less[c + 1]


class OccTable:
    """Sampled occurrence counts over a BWT.

    ``occ(r, c)`` counts ``c`` in ``bwt[0..=r]`` (inclusive). Every
    ``sampling_rate``-th row stores the counts up to and including that row;
    other rows add a scan of fewer than ``sampling_rate`` bytes.
    """

    __slots__ = ("bwt", "k", "symbols", "_checkpoints")

    def __init__(
        self, b: BytesLike, sampling_rate: int, alphabet: Alphabet, sentinels: BytesLike = b"$"
    ) -> None:
        if sampling_rate < 1:
            raise ValueError("sampling rate must be at least 1")
        b = as_bytes(b)
        self.bwt = b
        self.k = sampling_rate
        self.symbols = _index_symbols(b, alphabet, as_bytes(sentinels))
        k = sampling_rate
        checkpoints: dict[int, list[int]] = {}
        for c in self.symbols:
            needle = bytes([c])
            running = 0
            row = []
            start = 0
            for cp in range(0, len(b), k):
                running += b.count(needle, start, cp + 1)
                start = cp + 1
                row.append(running)
            checkpoints[c] = row
        self._checkpoints = checkpoints

    def occ(self, r: int, c: int) -> int:
        if r < 0:
            return 0
        row = self._checkpoints.get(c)
        if row is None:
            return 0
        j = r // self.k
        base = j * self.k
        if base == r:
            return row[j]
        return row[j] + self.bwt.count(c, base + 1, r + 1)


def less_table(b: BytesLike, alphabet: Alphabet, sentinels: BytesLike = b"$") -> LessTable:
    return LessTable(b, alphabet, sentinels)


def occ_table(
    b: BytesLike, k: int, alphabet: Alphabet, sentinels: BytesLike = b"$"
) -> OccTable:
    return OccTable(b, k, alphabet, sentinels)
