"""Extremal additive-basis search against an independent slow oracle."""
from itertools import combinations

import pytest

from redtype import n_of_set, rohrbach_number
from redtype.errors import EmptySet, OutOfRange


def n_slow(A):
    sums = {a + b for a in A for b in A}
    m = 0
    while m in sums:
        m += 1
    return m


def extremal_slow(r):
    """Exhaustive over subsets of [0, r(r+1)/2) containing 0.

    r(r+1)/2 bounds the prefix length (at most that many distinct pairwise
    sums exist), so nothing larger can matter.
    """
    if r == 1:
        return 1, (0,)
    best, witness = 0, None
    for rest in combinations(range(1, r * (r + 1) // 2), r - 1):
        v = n_slow((0,) + rest)
        if v > best:
            best, witness = v, (0,) + rest
    return best, witness


def test_n_of_set_examples():
    assert n_of_set({0}) == 1
    assert n_of_set({0, 1}) == 3
    assert n_of_set({0, 1, 3, 5, 6}) == 13
    assert n_of_set({5, 7}) == 0  # 0 itself is not a pairwise sum
    with pytest.raises(EmptySet):
        n_of_set(())


@pytest.mark.parametrize(
    "r,value,witness",
    [
        (1, 1, (0,)),
        (2, 3, (0, 1)),
        (3, 5, (0, 1, 2)),
        (4, 9, (0, 1, 3, 4)),
        (5, 13, (0, 1, 3, 5, 6)),
        (6, 17, (0, 1, 3, 5, 7, 8)),
    ],
)
def test_rohrbach_values(r, value, witness):
    w = rohrbach_number(r)
    assert w.value == value
    assert w.witness == witness


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_rohrbach_matches_slow_oracle(r):
    value, _ = extremal_slow(r)
    assert rohrbach_number(r).value == value


def test_witnesses_reverify():
    prev = 0
    for r in range(1, 8):
        w = rohrbach_number(r)
        assert len(w.witness) == r
        assert n_of_set(w.witness) == w.value
        assert 0 in w.witness
        if r >= 2:
            assert 1 in w.witness
        assert max(w.witness) < w.value
        assert w.value >= 2 * r - 1
        assert w.value >= prev
        prev = w.value


def test_out_of_range():
    for r in (0, -1, 11, 2.5):
        with pytest.raises(OutOfRange):
            rohrbach_number(r)
