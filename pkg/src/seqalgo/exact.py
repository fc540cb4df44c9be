"""Online exact pattern matching.

Every matcher is built once from a pattern and then searches any number of
texts. ``find_all`` lazily yields the start position of every occurrence,
overlapping ones included, in ascending order.

Rough guide to choosing one:

* ``Horspool``: simple, good for long patterns over large alphabets.
* ``Bndm``: usually the fastest for patterns up to 64 symbols.
* ``Bom``: competitive with BNDM and not limited in pattern length.
* ``ShiftAnd``: reads every text byte, but with a tiny inner loop.
* ``Kmp``: linear worst case, never more than 2n comparisons.
"""

from __future__ import annotations

from typing import Callable, Iterator

from seqalgo.alphabets import BytesLike, as_bytes
from seqalgo.errors import EmptyPattern, PatternTooLong

WORD_SIZE = 64


def _check_pattern(pattern: bytes, word_bound: bool = False) -> None:
    if not pattern:
        raise EmptyPattern("pattern must not be empty")
    if word_bound and len(pattern) > WORD_SIZE:
        raise PatternTooLong(
            f"pattern of length {len(pattern)} exceeds the {WORD_SIZE}-bit word"
        )


class Naive:
    """Test every alignment directly. O(nm); the reference for the others."""

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = as_bytes(pattern)
        _check_pattern(self.pattern)

    def find_all(self, text: BytesLike) -> Iterator[int]:
        text = as_bytes(text)
        p, m = self.pattern, len(self.pattern)
        for i in range(len(text) - m + 1):
            if text[i : i + m] == p:
                yield i


class Kmp:
    """Knuth-Morris-Pratt.

    ``failure[i]`` is the length of the longest proper border of
    ``pattern[:i]``; ``failure[0] == 0``.
    """

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = p = as_bytes(pattern)
        _check_pattern(p)
        m = len(p)
        failure = [0] * (m + 1)
        k = 0
        for i in range(1, m):
            while k and p[i] != p[k]:
                k = failure[k]
            if p[i] == p[k]:
                k += 1
            failure[i + 1] = k
        self.failure = failure

    def find_all(
        self, text: BytesLike, on_compare: Callable[[], None] | None = None
    ) -> Iterator[int]:
        """Scan ``text`` left to right. ``on_compare`` is called once per symbol comparison."""
        text = as_bytes(text)
        p, failure = self.pattern, self.failure
        m = len(p)
        q = 0
        if on_compare is None:
            for j, c in enumerate(text):
                while q and p[q] != c:
                    q = failure[q]
                if p[q] == c:
                    q += 1
                    if q == m:
                        yield j - m + 1
                        q = failure[q]
            return
        for j, c in enumerate(text):
            while True:
                on_compare()
                if p[q] == c:
                    q += 1
                    break
                if not q:
                    break
                q = failure[q]
            if q == m:
                yield j - m + 1
                q = failure[q]


class Horspool:
    """Horspool's simplification of Boyer-Moore.

    ``shift[c] = m - 1 - (last index of c in pattern[:m-1])``, or ``m``.
    """

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = p = as_bytes(pattern)
        _check_pattern(p)
        m = len(p)
        shift = [m] * 256
        for i, c in enumerate(p[:-1]):
            shift[c] = m - 1 - i
        self.shift = shift

    def find_all(self, text: BytesLike) -> Iterator[int]:
        text = as_bytes(text)
        p, shift = self.pattern, self.shift
        m = len(p)
        last = p[-1]
        i = 0
        stop = len(text) - m
        while i <= stop:
            c = text[i + m - 1]
            if c == last and text[i : i + m - 1] == p[:-1]:
                yield i
            i += shift[c]


class ShiftAnd:
    """Bit-parallel simulation of the pattern's nondeterministic automaton."""

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = p = as_bytes(pattern)
        _check_pattern(p, word_bound=True)
        masks = [0] * 256
        for i, c in enumerate(p):
            masks[c] |= 1 << i
        self.masks = masks
        self.accept = 1 << (len(p) - 1)

    def find_all(self, text: BytesLike) -> Iterator[int]:
        text = as_bytes(text)
        masks, accept = self.masks, self.accept
        offset = len(self.pattern) - 1
        d = 0
        for j, c in enumerate(text):
            d = ((d << 1) | 1) & masks[c]
            if d & accept:
                yield j - offset


class Bndm:
    """Backward Nondeterministic DAWG Matching.

    Reads each window right to left while a bit-parallel suffix automaton of
    the reversed pattern stays alive; remembers the last pattern prefix seen
    to compute a safe shift.
    """

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = p = as_bytes(pattern)
        _check_pattern(p, word_bound=True)
        m = len(p)
        masks = [0] * 256
        for i, c in enumerate(p):
            masks[c] |= 1 << (m - 1 - i)
        self.masks = masks

    def find_all(self, text: BytesLike) -> Iterator[int]:
        text = as_bytes(text)
        masks = self.masks
        m = len(self.pattern)
        full = (1 << m) - 1
        accept = 1 << (m - 1)
        pos = 0
        stop = len(text) - m
        while pos <= stop:
            j = m
            last = m
            d = full
            while d:
                d &= masks[text[pos + j - 1]]
                j -= 1
                if d & accept:
                    if j:
                        last = j
                    else:
                        yield pos
                        break
                d = (d << 1) & full
            pos += last


class Bom:
    """Backward Oracle Matching on the factor oracle of the reversed pattern.

    The oracle accepts every factor and possibly a few other strings, so a
    window that survives the backward scan is verified before it is reported.
    """

    def __init__(self, pattern: BytesLike) -> None:
        self.pattern = p = as_bytes(pattern)
        _check_pattern(p)
        rev = p[::-1]
        m = len(rev)
        delta: list[dict[int, int]] = [{} for _ in range(m + 1)]
        supply = [-1] * (m + 1)
        for i in range(1, m + 1):
            c = rev[i - 1]
            delta[i - 1][c] = i
            k = supply[i - 1]
            while k > -1 and c not in delta[k]:
                delta[k][c] = i
                k = supply[k]
            supply[i] = 0 if k == -1 else delta[k][c]
        self.delta = delta

    def accepts(self, word: BytesLike) -> bool:
        """Whether the oracle of the reversed pattern reads ``word`` without failing."""
        state = 0
        for c in as_bytes(word):
            state = self.delta[state].get(c, -1)
            if state < 0:
                return False
        return True

    def find_all(self, text: BytesLike) -> Iterator[int]:
        text = as_bytes(text)
        p, delta = self.pattern, self.delta
        m = len(p)
        pos = 0
        stop = len(text) - m
        while pos <= stop:
            state = 0
            j = m
            while j:
                state = delta[state].get(text[pos + j - 1], -1)
                if state < 0:
                    break
                j -= 1
            if j:
                pos += j
            else:
                if text[pos : pos + m] == p:
                    yield pos
                pos += 1


MATCHERS: dict[str, type] = {
    "naive": Naive,
    "kmp": Kmp,
    "horspool": Horspool,
    "bndm": Bndm,
    "bom": Bom,
    "shift_and": ShiftAnd,
}


def build(algorithm: str, pattern: BytesLike):
    """Build the matcher registered under ``algorithm`` (``shift-and`` also accepted)."""
    try:
        cls = MATCHERS[algorithm.replace("-", "_").lower()]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    return cls(pattern)


def build_naive(pattern: BytesLike) -> Naive:
    return Naive(pattern)


def build_kmp(pattern: BytesLike) -> Kmp:
    return Kmp(pattern)


def build_horspool(pattern: BytesLike) -> Horspool:
    return Horspool(pattern)


def build_bndm(pattern: BytesLike) -> Bndm:
    return Bndm(pattern)


def build_bom(pattern: BytesLike) -> Bom:
    return Bom(pattern)


def build_shift_and(pattern: BytesLike) -> ShiftAnd:
    return ShiftAnd(pattern)


def find_all(matcher, text: BytesLike) -> Iterator[int]:
    return matcher.find_all(text)
