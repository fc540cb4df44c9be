"""Pairwise alignment with affine gap penalties.

A gap of length ``L`` scores ``gap_open + L * gap_extend`` (both <= 0), so
linear gaps are the special case ``gap_open == 0``. Three modes share one
three-matrix recurrence and differ only in their boundary conditions:

``global``      both sequences aligned end to end
``semiglobal``  ``x`` aligned end to end, free flanks in ``y``
``local``       best-scoring pair of substrings (score >= 0)

Traceback prefers a diagonal step, then a deletion, then an insertion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from seqalgo.alphabets import BytesLike, as_bytes

_NEG = -(1 << 60)


class Op(str, enum.Enum):
    MATCH = "Match"
    SUBST = "Subst"
    INS = "Ins"  # consumes a symbol of y only
    DEL = "Del"  # consumes a symbol of x only


class Mode(str, enum.Enum):
    GLOBAL = "global"
    SEMIGLOBAL = "semiglobal"
    LOCAL = "local"


@dataclass(frozen=True)
class Scoring:
    match_fn: Callable[[int, int], int]
    gap_open: int
    gap_extend: int

    def __post_init__(self) -> None:
        if self.gap_open > 0 or self.gap_extend > 0:
            raise ValueError("gap penalties must be <= 0")

    @classmethod
    def simple(cls, match: int, mismatch: int, gap_open: int, gap_extend: int) -> Scoring:
        return cls(lambda a, b: match if a == b else mismatch, gap_open, gap_extend)

    def gap(self, length: int) -> int:
        return self.gap_open + length * self.gap_extend if length else 0


@dataclass
class AlignmentResult:
    score: int
    x_start: int
    x_end: int
    y_start: int
    y_end: int
    ops: list[Op] = field(default_factory=list)
    mode: Mode = Mode.GLOBAL

    def rescore(self, x: BytesLike, y: BytesLike, scoring: Scoring) -> int:
        """Score the edit operations against the aligned spans."""
        x, y = as_bytes(x), as_bytes(y)
        i, j = self.x_start, self.y_start
        total = 0
        run_op, run = None, 0
        for op in self.ops:
            if op is not run_op:
                if run_op in (Op.INS, Op.DEL):
                    total += scoring.gap(run)
                run_op, run = op, 0
            if op in (Op.MATCH, Op.SUBST):
                total += scoring.match_fn(x[i], y[j])
                i += 1
                j += 1
            elif op is Op.DEL:
                run += 1
                i += 1
            else:
                run += 1
                j += 1
        if run_op in (Op.INS, Op.DEL):
            total += scoring.gap(run)
        if (i, j) != (self.x_end, self.y_end):
            raise ValueError("operations do not cover the aligned spans")
        return total

    def pretty(self, x: BytesLike, y: BytesLike) -> str:
        x, y = as_bytes(x), as_bytes(y)
        top, mid, bot = [], [], []
        i, j = self.x_start, self.y_start
        for op in self.ops:
            if op in (Op.MATCH, Op.SUBST):
                top.append(chr(x[i]))
                bot.append(chr(y[j]))
                mid.append("|" if op is Op.MATCH else "\\")
                i += 1
                j += 1
            elif op is Op.DEL:
                top.append(chr(x[i]))
                bot.append("-")
                mid.append("x")
                i += 1
            else:
                top.append("-")
                bot.append(chr(y[j]))
                mid.append("+")
                j += 1
        return "\n".join("".join(r) for r in (top, mid, bot))


class Aligner:
    """Holds a scoring scheme; one instance per thread."""

    def __init__(self, scoring: Scoring) -> None:
        self.scoring = scoring

    def global_(self, x: BytesLike, y: BytesLike) -> AlignmentResult:
        return self.align(x, y, Mode.GLOBAL)

    def semiglobal(self, x: BytesLike, y: BytesLike) -> AlignmentResult:
        return self.align(x, y, Mode.SEMIGLOBAL)

    def local(self, x: BytesLike, y: BytesLike) -> AlignmentResult:
        return self.align(x, y, Mode.LOCAL)

    def align(self, x: BytesLike, y: BytesLike, mode: Mode | str) -> AlignmentResult:
        x, y = as_bytes(x), as_bytes(y)
        mode = Mode(mode)
        score_fn = self.scoring.match_fn
        go, ge = self.scoring.gap_open, self.scoring.gap_extend
        oe = go + ge
        m, n = len(x), len(y)
        is_local = mode is Mode.LOCAL

        # H: best score; E: ends with Ins (gap in x); F: ends with Del (gap in y)
        H = [[0] * (n + 1) for _ in range(m + 1)]
        E = [[_NEG] * (n + 1) for _ in range(m + 1)]
        F = [[_NEG] * (n + 1) for _ in range(m + 1)]
        if mode is Mode.GLOBAL:
            for j in range(1, n + 1):
                H[0][j] = E[0][j] = go + j * ge
        if not is_local:
            for i in range(1, m + 1):
                H[i][0] = F[i][0] = go + i * ge

        for i in range(1, m + 1):
            xi = x[i - 1]
            h_up, h_row = H[i - 1], H[i]
            f_up, f_row, e_row = F[i - 1], F[i], E[i]
            e = _NEG
            h_left = h_row[0]
            for j in range(1, n + 1):
                e = max(h_left + oe, e + ge)
                f = max(h_up[j] + oe, f_up[j] + ge)
                h = h_up[j - 1] + score_fn(xi, y[j - 1])
                if e > h:
                    h = e
                if f > h:
                    h = f
                if is_local and h < 0:
                    h = 0
                e_row[j] = e
                f_row[j] = f
                h_row[j] = h_left = h

        if mode is Mode.GLOBAL:
            end_i, end_j = m, n
        elif mode is Mode.SEMIGLOBAL:
            last = H[m]
            end_i, end_j = m, last.index(max(last))
        else:
            best, end_i, end_j = 0, 0, 0
            for i in range(m + 1):
                row_best = max(H[i])
                if row_best > best:
                    best, end_i, end_j = row_best, i, H[i].index(row_best)

        ops: list[Op] = []
        i, j = end_i, end_j
        state = "H"
        while True:
            if state == "H":
                h = H[i][j]
                if (i == 0 and j == 0) or (is_local and h == 0):
                    break
                if mode is Mode.SEMIGLOBAL and i == 0:
                    break
                if i and j:
                    s = score_fn(x[i - 1], y[j - 1])
                    if h == H[i - 1][j - 1] + s:
                        ops.append(Op.MATCH if x[i - 1] == y[j - 1] else Op.SUBST)
                        i -= 1
                        j -= 1
                        continue
                if h == F[i][j]:
                    state = "F"
                elif h == E[i][j]:
                    state = "E"
                else:
                    raise AssertionError(f"traceback stuck at ({i}, {j})")
            elif state == "F":
                ops.append(Op.DEL)
                if F[i][j] == H[i - 1][j] + oe:
                    state = "H"
                i -= 1
            else:
                ops.append(Op.INS)
                if E[i][j] == H[i][j - 1] + oe:
                    state = "H"
                j -= 1
        ops.reverse()
        return AlignmentResult(H[end_i][end_j], i, end_i, j, end_j, ops, mode)


def align(x: BytesLike, y: BytesLike, scoring: Scoring, mode: Mode | str = Mode.GLOBAL) -> AlignmentResult:
    return Aligner(scoring).align(x, y, mode)
