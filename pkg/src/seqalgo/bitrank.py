"""Rank/select over a static bit sequence.

A single level of cumulative counts is kept every ``block_size`` bits; the
remainder of a query is answered by popcounts over 64-bit words. select
binary-searches the block counts and then scans one block, so it is
O(log(m / k) + k / 64).
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import accumulate
from typing import Iterable

from seqalgo.errors import NotEnoughBits, OutOfBounds

WORD = 64
_WORD_MASK = (1 << WORD) - 1
DEFAULT_BLOCK_SIZE = 4 * WORD


def _to_bits(bits: Iterable[int] | str) -> list[int]:
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise ValueError(f"bit string may only contain 0 and 1: {bits!r}")
        return [1 if ch == "1" else 0 for ch in bits]
    return [1 if b else 0 for b in bits]


class RankSelect:
    def __init__(self, bits: Iterable[int] | str, block_size: int = DEFAULT_BLOCK_SIZE) -> None:
        if block_size < 1:
            raise ValueError("block size must be at least 1")
        flat = _to_bits(bits)
        self.m = m = len(flat)
        self.k = block_size

        nwords = (m + WORD - 1) // WORD
        if m:
            packed = int("".join("1" if b else "0" for b in reversed(flat)), 2)
            raw = packed.to_bytes(nwords * 8, "little")
            self._words = list(memoryview(raw).cast("Q"))
        else:
            self._words = []

        prefix = [0, *accumulate(flat)]
        # superblocks[j] = set bits in [0, j*k)
        superblocks = prefix[::block_size]
        if m % block_size:
            superblocks.append(prefix[m])
        self._superblocks = superblocks
        self.ones = prefix[m]

    def __len__(self) -> int:
        return self.m

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.m:
            raise OutOfBounds(f"bit index {i} outside [0, {self.m})")
        return (self._words[i >> 6] >> (i & 63)) & 1

    @property
    def zeros(self) -> int:
        return self.m - self.ones

    def _popcount(self, lo: int, hi: int) -> int:
        """Set bits in [lo, hi)."""
        if lo >= hi:
            return 0
        words = self._words
        wlo, whi = lo >> 6, (hi - 1) >> 6
        if wlo == whi:
            w = (words[wlo] >> (lo & 63)) & ((1 << (hi - lo)) - 1)
            return w.bit_count()
        total = (words[wlo] >> (lo & 63)).bit_count()
        for w in range(wlo + 1, whi):
            total += words[w].bit_count()
        tail = hi - (whi << 6)
        total += (words[whi] & ((1 << tail) - 1)).bit_count()
        return total

    def rank1(self, i: int) -> int:
        """Set bits in positions 0..=i."""
        if not 0 <= i < self.m:
            raise OutOfBounds(f"rank index {i} outside [0, {self.m})")
        j = i // self.k
        return self._superblocks[j] + self._popcount(j * self.k, i + 1)

    def rank0(self, i: int) -> int:
        return i + 1 - self.rank1(i)

    def select1(self, j: int) -> int:
        """Smallest index ``i`` with ``rank1(i) == j``."""
        if not 1 <= j <= self.ones:
            raise NotEnoughBits(f"select1({j}) with {self.ones} set bits")
        block = bisect_left(self._superblocks, j) - 1
        return self._scan(block, j - self._superblocks[block], ones=True)

    def select0(self, j: int) -> int:
        if not 1 <= j <= self.zeros:
            raise NotEnoughBits(f"select0({j}) with {self.zeros} unset bits")
        k, sb, m = self.k, self._superblocks, self.m
        block = bisect_left(range(len(sb)), j, key=lambda b: min(b * k, m) - sb[b]) - 1
        return self._scan(block, j - (block * k - sb[block]), ones=False)

    def _scan(self, block: int, need: int, ones: bool) -> int:
        # position of the need-th (1-based) matching bit at or after block start
        pos = block * self.k
        words = self._words
        while pos < self.m:
            wi = pos >> 6
            off = pos & 63
            w = words[wi] if ones else ~words[wi] & _WORD_MASK
            width = min(WORD, self.m - (wi << 6))
            w = (w >> off) & ((1 << (width - off)) - 1)
            cnt = w.bit_count()
            if cnt >= need:
                for _ in range(need - 1):
                    w &= w - 1
                return pos + (w & -w).bit_length() - 1
            need -= cnt
            pos = (wi + 1) << 6
        raise AssertionError("block counts inconsistent with bit data")


def rank1(rs: RankSelect, i: int) -> int:
    return rs.rank1(i)


def rank0(rs: RankSelect, i: int) -> int:
    return rs.rank0(i)


def select1(rs: RankSelect, j: int) -> int:
    return rs.select1(j)


def select0(rs: RankSelect, j: int) -> int:
    return rs.select0(j)
