import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import prefix_ones, select_positions
from seqalgo.bitrank import RankSelect, rank0, rank1, select0, select1
from seqalgo.errors import NotEnoughBits, OutOfBounds


def test_small_example():
    rs = RankSelect("1011001", block_size=2)
    # prefix popcounts of 1011001: 1,1,2,3,3,3,4
    assert [rank1(rs, i) for i in range(7)] == [1, 1, 2, 3, 3, 3, 4]
    assert rank0(rs, 3) == 1
    assert select1(rs, 3) == 3
    assert select1(rs, 4) == 6
    assert [select0(rs, j) for j in (1, 2, 3)] == [1, 4, 5]


def test_all_zero():
    rs = RankSelect([0] * 100, block_size=8)
    assert all(rs.rank1(i) == 0 for i in range(100))
    with pytest.raises(NotEnoughBits):
        rs.select1(1)


def test_bounds():
    rs = RankSelect("101")
    with pytest.raises(OutOfBounds):
        rs.rank1(3)
    with pytest.raises(OutOfBounds):
        rs.rank1(-1)
    with pytest.raises(NotEnoughBits):
        rs.select1(3)
    with pytest.raises(NotEnoughBits):
        rs.select0(0)


def test_empty():
    rs = RankSelect([])
    assert len(rs) == 0 and rs.ones == 0
    with pytest.raises(OutOfBounds):
        rs.rank1(0)


def test_rejects_bad_bit_string():
    with pytest.raises(ValueError):
        RankSelect("10201")


bit_lists = st.lists(st.integers(0, 1), max_size=700)


@given(bit_lists, st.sampled_from([1, 3, 8, 64, 100, 512]))
def test_against_linear_scan(bits, k):
    rs = RankSelect(bits, k)
    prefix = prefix_ones(bits)
    for i in range(len(bits)):
        assert rs.rank1(i) == prefix[i]
        assert rs.rank1(i) + rs.rank0(i) == i + 1
    for j, i in enumerate(select_positions(bits, 1), start=1):
        assert rs.select1(j) == i
        assert rs.select1(rs.rank1(i)) == i
    for j, i in enumerate(select_positions(bits, 0), start=1):
        assert rs.select0(j) == i


def test_block_size_invariance_on_long_sequence():
    rng = random.Random(7)
    bits = [int(rng.random() < 0.3) for _ in range(5000)]
    structures = [RankSelect(bits, k) for k in (1, 8, 64, 512)]
    for i in range(0, 5000, 7):
        assert len({rs.rank1(i) for rs in structures}) == 1
