"""Sequence analysis: succinct indexes, pattern matching, alignment and file IO.

Sequences are plain ``bytes`` throughout.
"""

from seqalgo.alphabets import (
    Alphabet,
    RankTransform,
    dna_alphabet,
    iupac_alphabet,
    revcomp,
)
from seqalgo.align import AlignmentResult, Aligner, Mode, Op, Scoring, align
from seqalgo.approx import DpOracle, myers_find, ukkonen_find
from seqalgo.bitrank import RankSelect
from seqalgo.exact import MATCHERS, Bndm, Bom, Horspool, Kmp, Naive, ShiftAnd
from seqalgo.fmindex import BiInterval, FmdIndex, FmIndex, SearchInterval
from seqalgo.qgram import QGramIndex
from seqalgo.suffix import bwt, invert_bwt, suffix_array

__version__ = "0.1.0"

__all__ = [
    "MATCHERS",
    "AlignmentResult",
    "Aligner",
    "Alphabet",
    "BiInterval",
    "Bndm",
    "Bom",
    "DpOracle",
    "FmIndex",
    "FmdIndex",
    "Horspool",
    "Kmp",
    "Mode",
    "Naive",
    "Op",
    "QGramIndex",
    "RankSelect",
    "RankTransform",
    "Scoring",
    "SearchInterval",
    "ShiftAnd",
    "align",
    "bwt",
    "dna_alphabet",
    "invert_bwt",
    "iupac_alphabet",
    "myers_find",
    "revcomp",
    "suffix_array",
    "ukkonen_find",
]
