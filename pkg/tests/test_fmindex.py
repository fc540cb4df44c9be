import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_smems, count_both_strands, naive_occurrences, random_text
from seqalgo.alphabets import Alphabet, iupac_alphabet, revcomp
from seqalgo.errors import IndexTextMismatch, OutOfBounds, SymbolNotInAlphabet
from seqalgo.fmindex import (
    FmIndex,
    SearchInterval,
    backward_search,
    fmd_build,
    occ_positions,
    smems,
)
from seqalgo.suffix import bwt, suffix_array

LOWER = Alphabet(b"abcdefghijklmnopqrstuvwxyz")


@pytest.fixture
def banana():
    text = b"banana$"
    sa = suffix_array(text)
    return FmIndex(bwt(text, sa), 3, LOWER), sa


def test_backward_search_banana(banana):
    fm, sa = banana
    iv = backward_search(fm, b"ana")
    assert (iv.lower, iv.upper, iv.size) == (2, 4, 2)
    # naive scan of "banana$" finds "ana" at 1 and 3; SA rows 2, 3 hold 3, 1
    assert occ_positions(iv, sa) == [3, 1]
    assert sorted(iv.occ(sa)) == naive_occurrences(b"banana$", b"ana")


def test_empty_and_absent_patterns(banana):
    fm, sa = banana
    assert backward_search(fm, b"") == SearchInterval(0, 7)
    assert sorted(backward_search(fm, b"").occ(sa)) == list(range(7))
    assert backward_search(fm, b"zzz").size == 0
    assert backward_search(fm, b"zzz").occ(sa) == []


def test_pattern_outside_alphabet(banana):
    fm, _ = banana
    with pytest.raises(SymbolNotInAlphabet):
        fm.backward_search(b"an$")
    with pytest.raises(SymbolNotInAlphabet):
        fm.backward_search(b"AN")


def test_occ_positions_bounds(banana):
    _, sa = banana
    with pytest.raises(IndexTextMismatch):
        occ_positions(SearchInterval(3, 9), sa)


def test_lf_is_permutation(banana):
    fm, _ = banana
    assert sorted(fm.lf(i) for i in range(len(fm))) == list(range(len(fm)))


def test_usage_with_iupac_alphabet():
    alphabet = iupac_alphabet()
    text = b"GCCTTAACATTATTACGCCTA$"
    sa = suffix_array(text)
    fm = FmIndex(bwt(text, sa), 3, alphabet)
    read = b"TTA"
    assert alphabet.is_word(read)
    assert sorted(fm.backward_search(read).occ(sa)) == naive_occurrences(text, read)


@pytest.mark.parametrize("symbols", [b"ab", b"ACGT"])
def test_backward_search_matches_naive(symbols):
    rng = random.Random(11)
    alphabet = Alphabet(symbols)
    for _ in range(60):
        text = random_text(rng, symbols, rng.randint(0, 300)) + b"$"
        sa = suffix_array(text)
        b = bwt(text, sa)
        indexes = [FmIndex(b, k, alphabet) for k in (1, 3, 32)]
        for _ in range(5):
            m = rng.randint(1, 8)
            if rng.random() < 0.5 and len(text) > m + 1:
                start = rng.randint(0, len(text) - 1 - m)
                pattern = text[start : start + m]
            else:
                pattern = random_text(rng, symbols, m)
            expected = naive_occurrences(text, pattern)
            for fm in indexes:
                iv = fm.backward_search(pattern)
                assert iv.size == len(expected)
                assert sorted(iv.occ(sa)) == expected


def test_fmd_initial_interval():
    fmd = fmd_build(b"ACGT")
    # one A on the forward strand plus one T (its complement) reverse strand
    assert fmd.init_interval(ord("A")).size == 2
    text = b"AACGTTTTAG"
    fmd = fmd_build(text)
    for c in b"ACGT":
        assert fmd.init_interval(c).size == text.count(c) + text.count(revcomp(bytes([c])))


def test_fmd_empty_text():
    fmd = fmd_build(b"")
    assert all(fmd.init_interval(c).size == 0 for c in b"ACGTN")
    assert fmd.smems(b"ACGT", 1) == []


def test_fmd_rejects_non_dna():
    with pytest.raises(SymbolNotInAlphabet):
        fmd_build(b"ACGU")
    with pytest.raises(SymbolNotInAlphabet):
        fmd_build(b"ACGT").smems(b"ACGU", 0)


def test_smems_start_out_of_range():
    with pytest.raises(OutOfBounds):
        smems(fmd_build(b"ACGT"), b"ACGT", 4)


def test_smem_repeated_text():
    text = b"ACGTACGT"
    fmd = fmd_build(text)
    found = smems(fmd, b"ACGT", 0)
    assert [(s, e) for s, e, _ in found] == brute_smems(text, b"ACGT") == [(0, 4)]
    iv = found[0][2]
    forward_hits = [p for p, reverse in fmd.locate(iv) if not reverse]
    assert sorted(forward_hits) == [0, 4]
    assert iv.size == count_both_strands(text, b"ACGT") == 4


def test_smem_whole_pattern():
    text = b"GATTACAGGCTAACGT"
    fmd = fmd_build(text)
    for start in range(len(text)):
        assert [(s, e) for s, e, _ in fmd.smems(text, start)] == [(0, len(text))]


def test_smem_reverse_strand():
    text = b"CGCGAAAACGCG"
    fmd = fmd_build(text)
    found = fmd.smems(b"TTTT", 0)
    assert [(s, e) for s, e, _ in found] == brute_smems(text, b"TTTT") == [(0, 4)]
    assert fmd.locate(found[0][2]) == [(4, True)]


def test_smem_n_matches_only_n():
    text = b"ACGNNACG"
    fmd = fmd_build(text)
    assert fmd.init_interval(ord("N")).size == 4
    assert [(s, e) for s, e, _ in fmd.all_smems(b"CGNNA")] == brute_smems(text, b"CGNNA")


dna = st.lists(st.sampled_from(list(b"ACGT")), max_size=60).map(bytes)


@given(dna, st.lists(st.sampled_from(list(b"ACGT")), min_size=1, max_size=16).map(bytes), st.sampled_from([1, 3, 32]))
@settings(max_examples=150)
def test_smems_match_brute_force(text, query, k):
    fmd = fmd_build(text, k)
    expected = brute_smems(text, query)
    assert [(s, e) for s, e, _ in fmd.all_smems(query)] == expected
    for x in range(len(query)):
        found = fmd.smems(query, x)
        assert [(s, e) for s, e, _ in found] == [(s, e) for s, e in expected if s <= x < e]
        for s, e, iv in found:
            assert iv.match_len == e - s
            assert iv.size == count_both_strands(text, query[s:e])
            for pos, reverse in fmd.locate(iv):
                segment = text[pos : pos + e - s]
                assert (revcomp(segment) if reverse else segment) == query[s:e]
