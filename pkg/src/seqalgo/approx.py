"""Approximate pattern matching under edit distance.

Both searches find every text position ``j`` at which some substring of the
text ending at ``j`` (inclusive) is within edit distance ``k`` of the whole
pattern, and yield ``(j, d)`` with the smallest such distance ``d``.
"""

from __future__ import annotations

from typing import Iterator

from seqalgo.alphabets import BytesLike, as_bytes
from seqalgo.errors import PatternTooLong

WORD_SIZE = 64


class DpOracle:
    """Full (m+1) x (n+1) semi-global edit-distance matrix.

    ``matrix[i][j]`` is the distance between ``pattern[:i]`` and the best
    substring of the text ending just before ``j``. Quadratic; meant as a
    reference.
    """

    def __init__(self, pattern: BytesLike, text: BytesLike) -> None:
        p, t = as_bytes(pattern), as_bytes(text)
        m, n = len(p), len(t)
        d = [[0] * (n + 1) for _ in range(m + 1)]
        for i in range(1, m + 1):
            d[i][0] = i
            for j in range(1, n + 1):
                d[i][j] = min(
                    d[i - 1][j] + 1,
                    d[i][j - 1] + 1,
                    d[i - 1][j - 1] + (p[i - 1] != t[j - 1]),
                )
        self.matrix = d

    def hits(self, k: int) -> list[tuple[int, int]]:
        last = self.matrix[-1]
        return [(j - 1, last[j]) for j in range(1, len(last)) if last[j] <= k]


def ukkonen_find(pattern: BytesLike, text: BytesLike, k: int) -> Iterator[tuple[int, int]]:
    """Column-wise DP that only updates rows up to the last one with a value <= k.

    Expected O(kn) time for random text.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    p, t = as_bytes(pattern), as_bytes(text)
    m = len(p)
    if m == 0:
        for j in range(len(t)):
            yield j, 0
        return
    col = list(range(m + 1))
    # rows beyond last_active hold stale values > k
    last_active = min(k, m)
    for j, c in enumerate(t):
        diag = 0  # old col[i-1]
        left = 0  # new col[i-1]
        for i in range(1, min(last_active + 1, m) + 1):
            up = col[i]
            if p[i - 1] == c:
                val = diag
            else:
                val = 1 + min(diag, left, up)
            diag = up
            col[i] = left = val
        if last_active < m:
            last_active += 1
        while col[last_active] > k:
            last_active -= 1
        if last_active == m:
            yield j, col[m]


def myers_find(pattern: BytesLike, text: BytesLike, k: int) -> Iterator[tuple[int, int]]:
    """Myers' bit-vector algorithm: one column of the DP as vertical delta words."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p, t = as_bytes(pattern), as_bytes(text)
    m = len(p)
    if m > WORD_SIZE:
        raise PatternTooLong(f"pattern of length {m} exceeds the {WORD_SIZE}-bit word")
    if m == 0:
        for j in range(len(t)):
            yield j, 0
        return
    peq = [0] * 256
    for i, c in enumerate(p):
        peq[c] |= 1 << i
    full = (1 << m) - 1
    high = 1 << (m - 1)
    pv, mv = full, 0
    score = m
    for j, c in enumerate(t):
        eq = peq[c]
        xv = eq | mv
        xh = (((eq & pv) + pv) ^ pv) | eq
        ph = mv | (~(xh | pv) & full)
        mh = pv & xh
        if ph & high:
            score += 1
        elif mh & high:
            score -= 1
        # top row is all zeros (free start), so no carry-in on the shift
        ph = (ph << 1) & full
        mh = (mh << 1) & full
        pv = mh | (~(xv | ph) & full)
        mv = ph & xv
        if score <= k:
            yield j, score
