"""FM-index backward search and the bidirectional FMD-index.

Typical use::

    alphabet = iupac_alphabet()
    sa = suffix_array(text)
    fm = FmIndex(bwt(text, sa), 3, alphabet)
    interval = fm.backward_search(read)
    positions = interval.occ(sa)

Intervals are half-open ranges of suffix-array rows. ``occ(r, c)`` counts
are inclusive of row ``r`` and ``occ(-1, c) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from seqalgo.alphabets import Alphabet, BytesLike, as_bytes, revcomp
from seqalgo.errors import IndexTextMismatch, OutOfBounds, SymbolNotInAlphabet
from seqalgo.suffix import LessTable, OccTable, bwt, suffix_array


@dataclass(frozen=True)
class SearchInterval:
    lower: int
    upper: int

    @property
    def size(self) -> int:
        return self.upper - self.lower

    def __len__(self) -> int:
        return self.size

    def occ(self, sa: Sequence[int]) -> list[int]:
        """Text positions of the matches, in suffix-array row order."""
        return occ_positions(self, sa)


def occ_positions(interval: SearchInterval, sa: Sequence[int]) -> list[int]:
    if not 0 <= interval.lower <= interval.upper <= len(sa):
        raise IndexTextMismatch(
            f"interval [{interval.lower}, {interval.upper}) outside a suffix array of {len(sa)} rows"
        )
    return list(sa[interval.lower : interval.upper])


def _check_word(alphabet: Alphabet, pattern: bytes) -> None:
    if not alphabet.is_word(pattern):
        pos = alphabet.first_foreign(pattern)
        raise SymbolNotInAlphabet(pos, pattern[pos])


class FmIndex:
    """Backward search over a BWT with a sampled occurrence table.

    Parameters
    ----------
    bwt : bytes
        Burrows-Wheeler transform of a sentinel-terminated text.
    sampling_rate : int
        Occurrence-table checkpoint distance; larger is smaller and slower.
    alphabet : Alphabet
        Symbols allowed in the text and in patterns.
    sentinels : bytes
        Terminator bytes present in the BWT but never in patterns.
    """

    def __init__(
        self,
        bwt: BytesLike,
        sampling_rate: int,
        alphabet: Alphabet,
        sentinels: BytesLike = b"$",
    ) -> None:
        self.bwt = as_bytes(bwt)
        self.alphabet = alphabet
        self.less = LessTable(self.bwt, alphabet, sentinels)
        self.occ_table = OccTable(self.bwt, sampling_rate, alphabet, sentinels)

    def __len__(self) -> int:
        return len(self.bwt)

    def occ(self, r: int, c: int) -> int:
        return self.occ_table.occ(r, c)

    def lf(self, i: int) -> int:
        c = self.bwt[i]
        return self.less[c] + self.occ_table.occ(i, c) - 1

    def backward_search(self, pattern: BytesLike) -> SearchInterval:
        """Rows whose suffixes start with ``pattern``."""
        pattern = as_bytes(pattern)
        _check_word(self.alphabet, pattern)
        less, occ = self.less, self.occ_table.occ
        lower, upper = 0, len(self.bwt)
        for c in reversed(pattern):
            lower = less[c] + occ(lower - 1, c)
            upper = less[c] + occ(upper - 1, c)
            if lower >= upper:
                return SearchInterval(lower, lower)
        return SearchInterval(lower, upper)


def backward_search(fm: FmIndex, pattern: BytesLike) -> SearchInterval:
    return fm.backward_search(pattern)


@dataclass(frozen=True)
class BiInterval:
    """Matching rows for a string and for its reverse complement.

    ``lower`` starts the forward interval, ``lower_rev`` the interval of the
    reverse complement; both have ``size`` rows.
    """

    lower: int
    lower_rev: int
    size: int
    match_len: int

    def forward(self) -> SearchInterval:
        return SearchInterval(self.lower, self.lower + self.size)

    def revcomp(self) -> SearchInterval:
        return SearchInterval(self.lower_rev, self.lower_rev + self.size)

    def swapped(self) -> BiInterval:
        return BiInterval(self.lower_rev, self.lower, self.size, self.match_len)


FMD_SYMBOLS = b"ACGNT"
_FMD_ALPHABET = Alphabet(FMD_SYMBOLS)
# '%' closes the forward strand; it sorts after the terminal '$' and before
# every base, so both strands stay distinguishable inside one suffix array.
_SEPARATOR = b"%"
_TERMINATOR = b"$"
_COMP = {c: revcomp(bytes([c]))[0] for c in FMD_SYMBOLS}


class FmdIndex:
    """FM-index over ``text + '%' + revcomp(text) + '$'`` with bidirectional extension.

    Uppercase ``ACGTN`` only; ``N`` matches only another ``N``.
    """

    def __init__(self, text: BytesLike, sampling_rate: int = 32) -> None:
        text = as_bytes(text)
        _check_word(_FMD_ALPHABET, text)
        self.text = text
        self.n = len(text)
        joined = text + _SEPARATOR + revcomp(text) + _TERMINATOR
        self.sa = suffix_array(joined)
        self.fm = FmIndex(bwt(joined, self.sa), sampling_rate, _FMD_ALPHABET, _SEPARATOR + _TERMINATOR)
        # order of sub-intervals on the reverse-complement side
        self._rev_order = sorted(FMD_SYMBOLS, key=lambda c: _COMP[c])

    def init_interval(self, c: int) -> BiInterval:
        if c not in _FMD_ALPHABET:
            raise SymbolNotInAlphabet(0, c)
        less = self.fm.less
        return BiInterval(less[c], less[_COMP[c]], less.next_bound(c) - less[c], 1)

    def backward_ext(self, bi: BiInterval, c: int) -> BiInterval:
        """Extend the matched string by ``c`` on the left."""
        less, occ = self.fm.less, self.fm.occ_table.occ
        lo, size = bi.lower, bi.size
        lowers = {}
        sizes = {}
        for b in FMD_SYMBOLS:
            before = occ(lo - 1, b)
            lowers[b] = less[b] + before
            sizes[b] = occ(lo + size - 1, b) - before
        # strings preceded by a sentinel sort first in the reverse-complement interval
        rev = bi.lower_rev + size - sum(sizes.values())
        lower_rev = 0
        for b in self._rev_order:
            if b == c:
                lower_rev = rev
                break
            rev += sizes[b]
        return BiInterval(lowers[c], lower_rev, sizes[c], bi.match_len + 1)

    def forward_ext(self, bi: BiInterval, c: int) -> BiInterval:
        """Extend the matched string by ``c`` on the right."""
        return self.backward_ext(bi.swapped(), _COMP[c]).swapped()

    def search(self, pattern: BytesLike) -> BiInterval:
        pattern = as_bytes(pattern)
        _check_word(_FMD_ALPHABET, pattern)
        if not pattern:
            return BiInterval(0, 0, len(self.fm), 0)
        bi = self.init_interval(pattern[-1])
        for c in reversed(pattern[:-1]):
            if not bi.size:
                break
            bi = self.backward_ext(bi, c)
        return bi

    def locate(self, bi: BiInterval) -> list[tuple[int, bool]]:
        """Occurrences as ``(start on forward strand, is_reverse)`` pairs."""
        out = []
        for p in self.sa[bi.lower : bi.lower + bi.size]:
            if p < self.n:
                out.append((p, False))
            else:
                out.append((self.n - (p - self.n - 1) - bi.match_len, True))
        return out

    def smems(self, pattern: BytesLike, start: int) -> list[tuple[int, int, BiInterval]]:
        """Supermaximal exact matches of ``pattern`` that cover ``start``.

        Returns ``(pattern_start, pattern_end, interval)`` triples sorted by
        start, with half-open pattern coordinates.
        """
        pattern = as_bytes(pattern)
        _check_word(_FMD_ALPHABET, pattern)
        m = len(pattern)
        if not 0 <= start < m:
            raise OutOfBounds(f"start {start} outside pattern of length {m}")
        return self._smems(pattern, start)[0]

    def _smems(self, pattern: bytes, start: int) -> tuple[list[tuple[int, int, BiInterval]], int]:
        m = len(pattern)
        ik = self.init_interval(pattern[start])
        if not ik.size:
            return [], start + 1

        # forward pass: keep the interval just before each drop in size
        snapshots: list[tuple[BiInterval, int]] = []
        end = start + 1
        for i in range(start + 1, m):
            ok = self.forward_ext(ik, pattern[i])
            if ok.size != ik.size:
                snapshots.append((ik, end))
            if not ok.size:
                break
            ik, end = ok, i + 1
        else:
            snapshots.append((ik, end))
        next_start = snapshots[-1][1]
        snapshots.reverse()

        # backward pass, longest forward match first
        found: list[tuple[int, int, BiInterval]] = []
        prev = snapshots
        for i in range(start - 1, -2, -1):
            curr: list[tuple[BiInterval, int]] = []
            for iv, iv_end in prev:
                ok = self.backward_ext(iv, pattern[i]) if i >= 0 else None
                if ok is None or not ok.size:
                    if not curr and (not found or i + 1 < found[-1][0]):
                        found.append((i + 1, iv_end, iv))
                elif not curr or ok.size != curr[-1][0].size:
                    curr.append((ok, iv_end))
            if not curr:
                break
            prev = curr
        found.reverse()
        return found, next_start

    def all_smems(self, pattern: BytesLike) -> list[tuple[int, int, BiInterval]]:
        """Every supermaximal exact match of ``pattern``, sorted by start."""
        pattern = as_bytes(pattern)
        _check_word(_FMD_ALPHABET, pattern)
        out = []
        x = 0
        while x < len(pattern):
            found, x = self._smems(pattern, x)
            out.extend(found)
        return sorted(out, key=lambda t: (t[0], t[1]))


def fmd_build(text: BytesLike, sampling_rate: int = 32) -> FmdIndex:
    return FmdIndex(text, sampling_rate)


def smems(fmd: FmdIndex, pattern: BytesLike, start: int) -> list[tuple[int, int, BiInterval]]:
    return fmd.smems(pattern, start)
