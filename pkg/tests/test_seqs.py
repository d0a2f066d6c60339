"""Multiset sequence arithmetic."""

import random

import pytest

from pnbundles.errors import BadInput, NotSubMultiset
from pnbundles.seqs import (
    IntSeq,
    is_sub_multiset,
    parse_seq,
    parse_values,
    seq_diff,
    seq_max,
    seq_min,
    seq_sum,
)


@pytest.mark.parametrize("x,y,want", [
    ([0], [0, 1, 2], [0, 0, 1, 2]),
    ([], [5, 4], [4, 5]),
    ([1, 3], [2, 2], [1, 2, 2, 3]),
])
def test_seq_sum(x, y, want):
    assert seq_sum(IntSeq(x), IntSeq(y)) == IntSeq(want)


@pytest.mark.parametrize("x,y,want", [
    ([0, 0, 1, 2], [0], [0, 1, 2]),
    ([4, 5], [4, 5], []),
])
def test_seq_diff(x, y, want):
    assert seq_diff(IntSeq(x), IntSeq(y)) == IntSeq(want)


def test_seq_diff_not_sub_multiset():
    with pytest.raises(NotSubMultiset):
        seq_diff(IntSeq([1, 2]), IntSeq([3]))


@pytest.mark.parametrize("x,y,lo,hi", [
    ([0, 1], [1, 2], [1], [0, 1, 2]),
    ([0, 0], [0], [0], [0, 0]),
])
def test_seq_min_max(x, y, lo, hi):
    assert seq_min(IntSeq(x), IntSeq(y)) == IntSeq(lo)
    assert seq_max(IntSeq(x), IntSeq(y)) == IntSeq(hi)


def test_min_idempotent():
    x = IntSeq([1, 1, 3])
    assert seq_min(x, x) == x
    assert seq_max(x, x) == x


def _random_seq(rng, max_len=6, lo=-3, hi=3):
    return IntSeq(rng.choices(range(lo, hi + 1), k=rng.randrange(max_len + 1)))


def test_sum_associative_commutative():
    rng = random.Random(1)
    for _ in range(200):
        x, y, z = (_random_seq(rng) for _ in range(3))
        assert seq_sum(x, y) == seq_sum(y, x)
        assert seq_sum(seq_sum(x, y), z) == seq_sum(x, seq_sum(y, z))


def test_lattice_absorption():
    rng = random.Random(2)
    for _ in range(200):
        x, y = _random_seq(rng), _random_seq(rng)
        assert seq_max(x, seq_min(x, y)) == x
        assert seq_min(x, seq_max(x, y)) == x


def test_diff_inverts_sum():
    rng = random.Random(3)
    for _ in range(200):
        x, y = _random_seq(rng), _random_seq(rng)
        assert seq_diff(seq_sum(x, y), y) == x
        assert is_sub_multiset(y, seq_sum(x, y))


def test_constructor_sorts_and_validates():
    assert IntSeq([3, 1, 2]).entries == (1, 2, 3)
    assert not IntSeq()
    with pytest.raises(TypeError):
        IntSeq([1.5])


def test_immutability_and_hash():
    x = IntSeq([1, 2])
    with pytest.raises(AttributeError):
        x.entries = ()
    assert hash(x) == hash(IntSeq([2, 1]))
    assert len({x, IntSeq([1, 2])}) == 1


def test_json_round_trip():
    x = IntSeq([-1, -1, 0, 2])
    assert IntSeq.from_json(x.to_json()) == x
    with pytest.raises(BadInput):
        IntSeq.from_json({"not": "a list"})


@pytest.mark.parametrize("text,want", [
    ("1^5,4", [1, 1, 1, 1, 1, 4]),
    ("-1^5,0", [-1, -1, -1, -1, -1, 0]),
    ("", []),
    ("5,4", [5, 4]),
])
def test_parse_values(text, want):
    assert parse_values(text) == want


def test_parse_seq_sorts():
    assert parse_seq("5,4") == IntSeq([4, 5])
    with pytest.raises(BadInput):
        parse_seq("1^x")
    with pytest.raises(BadInput):
        parse_seq("a,b")
