"""Position index of every q-gram of a text.

Q-grams are encoded with :meth:`RankTransform.qgrams` (bit-packed ranks, one
64-bit word each) and sorted into a dense bucket table by counting sort, so
lookups are two array reads plus a slice.
"""

from __future__ import annotations

from array import array
from itertools import accumulate

from seqalgo.alphabets import BytesLike, RankTransform, as_bytes
from seqalgo.errors import BucketTableTooLarge, LengthMismatch, QTooLarge

DEFAULT_MAX_BUCKETS = 1 << 24


class QGramIndex:
    def __init__(
        self,
        text: BytesLike,
        q: int,
        transform: RankTransform,
        max_buckets: int = DEFAULT_MAX_BUCKETS,
    ) -> None:
        if q < 1:
            raise ValueError("q must be at least 1")
        bits = transform.bits_per_symbol
        if q * bits > 64:
            raise QTooLarge(f"q={q} needs {q * bits} bits, more than 64")
        num_buckets = 1 << (q * bits)
        if num_buckets > max_buckets:
            raise BucketTableTooLarge(
                f"{num_buckets} buckets exceed the cap of {max_buckets}"
            )
        self.q = q
        self.transform = transform

        codes = list(transform.qgrams(as_bytes(text), q))
        counts = [0] * num_buckets
        for code in codes:
            counts[code] += 1
        buckets = array("q", [0])
        buckets.extend(accumulate(counts))
        fill = buckets[:-1]
        positions = array("q", bytes(8 * len(codes)))
        for pos, code in enumerate(codes):
            positions[fill[code]] = pos
            fill[code] += 1
        self.buckets = buckets
        self.positions = positions

    def __len__(self) -> int:
        return len(self.positions)

    def code(self, qgram: BytesLike) -> int:
        qgram = as_bytes(qgram)
        if len(qgram) != self.q:
            raise LengthMismatch(f"expected a {self.q}-gram, got {len(qgram)} symbols")
        return next(self.transform.qgrams(qgram, self.q))

    def matches(self, qgram: BytesLike) -> list[int]:
        """Ascending start positions of ``qgram`` in the indexed text."""
        code = self.code(qgram)
        return self.positions[self.buckets[code] : self.buckets[code + 1]].tolist()

    def count(self, qgram: BytesLike) -> int:
        code = self.code(qgram)
        return self.buckets[code + 1] - self.buckets[code]


def qgram_index_build(
    text: BytesLike, q: int, transform: RankTransform, max_buckets: int = DEFAULT_MAX_BUCKETS
) -> QGramIndex:
    return QGramIndex(text, q, transform, max_buckets)


def qgram_matches(index: QGramIndex, qgram: BytesLike) -> list[int]:
    return index.matches(qgram)
