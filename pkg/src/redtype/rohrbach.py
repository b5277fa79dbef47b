"""Extremal additive bases: longest consecutive prefix covered by pairwise sums.

For a finite set A of non-negative integers, n(A) is the least m such that
0..m-1 all occur in A + A but m does not (0 when even 0 is missing).  The
extremal value over all r-element sets is computed by exhaustive search with
witnesses, small enough at desk scale to brute-force.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import EmptySet, OutOfRange

MAX_R = 10


@dataclass(frozen=True)
class RohrbachWitness:
    """An extremal r-element set together with the value it achieves."""

    r: int
    value: int
    witness: tuple[int, ...]


def n_of_set(values: Iterable[int]) -> int:
    """Length of the consecutive prefix 0..n-1 covered by pairwise sums.

    Implemented on integer bitmasks: the sum set is an OR of shifts, and the
    answer is the number of trailing one bits.
    """
    vals = sorted(set(values))
    if not vals:
        raise EmptySet("n_of_set needs a non-empty set")
    bits = 0
    for v in vals:
        bits |= 1 << v
    sums = 0
    for v in vals:
        sums |= bits << v
    return (~sums & (sums + 1)).bit_length() - 1


def _missing(sums: int) -> int:
    return (~sums & (sums + 1)).bit_length() - 1


@lru_cache(maxsize=None)
def _search(r: int) -> tuple[int, tuple[int, ...]]:
    # Elements are chosen in increasing order.  A candidate larger than the
    # currently missing sum m can never help cover m (both summands of m are
    # at most m), so the branch's value is already decided; capping
    # candidates at m therefore loses no extremal set, and the
    # lexicographically least one survives because useless large elements
    # can always be swapped for unused small ones.
    best_value = 0
    best_witness: tuple[int, ...] = ()

    def dfs(chosen: list[int], bits: int, sums: int) -> None:
        nonlocal best_value, best_witness
        if len(chosen) == r:
            value = _missing(sums)
            if value > best_value:
                best_value = value
                best_witness = tuple(chosen)
            return
        m = _missing(sums)
        for a in range(chosen[-1] + 1, m + 1):
            nbits = bits | (1 << a)
            dfs(chosen + [a], nbits, sums | (nbits << a))
        return

    if r == 1:
        return 1, (0,)
    # 0 and 1 are forced: without 0 no sum is 0, without 1 no sum is 1,
    # and the extremal value always exceeds 1 for r >= 2.
    bits = 0b11
    dfs([0, 1], bits, 0b111)
    return best_value, best_witness


def rohrbach_number(r: int) -> RohrbachWitness:
    """Extremal n(A) over all r-element sets, with its lexicographically
    least witness.

    Exhaustive and deterministic; supported for 1 <= r <= 10.
    """
    if not isinstance(r, int) or isinstance(r, bool) or not 1 <= r <= MAX_R:
        raise OutOfRange(f"r must be an integer in [1, {MAX_R}], got {r!r}")
    value, witness = _search(r)
    return RohrbachWitness(r=r, value=value, witness=witness)
