"""Core semigroup construction and base invariants."""
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redtype import (
    NumericalSemigroup,
    ValuationSet,
    apery_maximals,
    apery_set,
    build_semigroup,
    cm_type,
    length_between,
    pseudo_frobenius,
    reduced_type,
)
from redtype.errors import (
    EmptyGenerators,
    FullSemigroup,
    GeneratorTooLarge,
    NonCoprimeGenerators,
    NonPositive,
    NotAMember,
    NotNested,
    ZeroOrNegativeGenerator,
)


def test_build_basic_example():
    H = build_semigroup([5, 8, 9, 11])
    assert H.generators == (5, 8, 9, 11)
    assert H.conductor == 13
    assert H.frobenius == 12
    assert sorted(H.members(14)) == [0, 5, 8, 9, 10, 11, 13]
    assert H.multiplicity == 5
    assert H.embedding_dimension == 4
    assert H.gaps == (1, 2, 3, 4, 6, 7, 12)
    assert H.genus == 7


def test_build_full_semigroup():
    H = build_semigroup([1])
    assert H.is_full
    assert H.conductor == 0
    assert H.frobenius == -1
    assert H.gaps == ()
    assert H.generators == (1,)


def test_build_removes_redundant_generators():
    H = build_semigroup([4, 6, 9, 11, 15])  # 15 = 4 + 11
    assert H.generators == (4, 6, 9, 11)


def test_build_order_and_duplicates_do_not_matter():
    a = build_semigroup([11, 9, 4, 6, 6, 15])
    b = build_semigroup([4, 6, 9, 11])
    assert a == b
    assert a._table == b._table
    assert hash(a) == hash(b)


def test_build_idempotent():
    H = build_semigroup([7, 9, 11, 13, 15, 17])
    K = build_semigroup(H.generators)
    assert K.generators == H.generators
    assert K.conductor == H.conductor
    assert K._table == H._table
    assert K.gaps == H.gaps


def test_build_errors():
    with pytest.raises(EmptyGenerators):
        build_semigroup([])
    with pytest.raises(ZeroOrNegativeGenerator):
        build_semigroup([0, 3])
    with pytest.raises(ZeroOrNegativeGenerator):
        build_semigroup([-2, 3])
    with pytest.raises(NonCoprimeGenerators):
        build_semigroup([4, 6])
    with pytest.raises(GeneratorTooLarge):
        build_semigroup([3, 2**31])


def test_contains():
    H = build_semigroup([5, 8, 9, 11])
    assert 12 not in H
    assert 0 in H
    assert 13 in H and 1000 in H
    assert -1 not in H
    assert 8 in build_semigroup([4, 6, 9, 11])


def test_apery_set():
    assert apery_set(build_semigroup([4, 9, 11]), 4) == [0, 9, 11, 18]
    assert apery_set(build_semigroup([1]), 1) == [0]
    assert apery_set(build_semigroup([3, 4, 5]), 3) == [0, 4, 5]


def test_apery_errors():
    H = build_semigroup([3, 4, 5])
    with pytest.raises(NotAMember):
        apery_set(H, 2)  # 2 is a gap
    with pytest.raises(NonPositive):
        apery_set(H, 0)
    with pytest.raises(NonPositive):
        apery_set(H, -3)


def test_apery_maximals():
    assert apery_maximals(build_semigroup([3, 4, 5]), 3) == [4, 5]
    assert apery_maximals(build_semigroup([4, 9, 11]), 4) == [11, 18]
    assert apery_maximals(build_semigroup([2, 3]), 2) == [3]


@pytest.mark.parametrize(
    "gens,pf",
    [
        ([5, 6, 7, 9], (4, 8)),
        ([2, 3], (1,)),
        ([12, 13, 14, 15, 16, 19], (17, 18, 20, 21, 22, 23)),
        ([8, 11, 12, 13, 15, 17, 18], (4, 5, 7, 9, 10, 14)),
    ],
)
def test_pseudo_frobenius(gens, pf):
    assert pseudo_frobenius(build_semigroup(gens)) == pf


def test_pseudo_frobenius_full_raises():
    with pytest.raises(FullSemigroup):
        pseudo_frobenius(build_semigroup([1]))
    with pytest.raises(FullSemigroup):
        reduced_type(build_semigroup([1]))


@pytest.mark.parametrize(
    "gens,s",
    [
        ([5, 8, 9, 11], 1),
        ([4, 6, 9, 11], 2),
        ([2, 3], 1),
        ([8, 11, 12, 13, 15, 17, 18], 4),
    ],
)
def test_reduced_type(gens, s):
    assert reduced_type(build_semigroup(gens)) == s


def test_reduced_type_bounds():
    H = build_semigroup([4, 6, 9, 11])
    assert cm_type(H) == 3
    assert 1 <= reduced_type(H) <= cm_type(H)


def test_length_between():
    H = build_semigroup([5, 7, 8, 11])
    assert length_between(
        ValuationSet.conductor_ideal(H), ValuationSet.of_semigroup(H)
    ) == 4
    K = build_semigroup([4, 6, 9, 11])
    assert length_between(
        ValuationSet.conductor_ideal(K), ValuationSet.of_semigroup(K)
    ) == 3
    V = ValuationSet.of_semigroup(H)
    assert length_between(V, V) == 0


def test_length_between_not_nested():
    with pytest.raises(NotNested):
        length_between(ValuationSet((1,), 5), ValuationSet((), 5))


def test_valuation_set_normalization():
    # values at or above the threshold fold into the tail
    assert ValuationSet((2, 7, 9), 7) == ValuationSet((2,), 7)
    # a contiguous run ending at the threshold lowers it
    assert ValuationSet((3, 4), 5) == ValuationSet((), 3)
    v = ValuationSet((0, 2), 4)
    assert 0 in v and 1 not in v and 2 in v and 3 not in v and 4 in v and 99 in v
    assert v.shift(3) == ValuationSet((3, 5), 7)
    assert ValuationSet((0,), 4).union(ValuationSet((1,), 6)) == ValuationSet((0, 1), 4)


def test_valuation_set_closed_under():
    H = build_semigroup([3, 5, 7])
    assert ValuationSet.of_semigroup(H).closed_under(H)
    assert not ValuationSet((1,), H.conductor).closed_under(H)


def test_valuation_set_negative_values():
    # fractional-ideal value sets may dip below zero
    v = ValuationSet((-3, -1), 2)
    assert -3 in v and -2 not in v and 5 in v
    assert v.shift(3) == ValuationSet((0, 2), 5)
    assert length_between(ValuationSet((), 2), v) == 2


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-10, 30), max_size=6),
    st.integers(-5, 25),
    st.lists(st.integers(-10, 30), max_size=6),
    st.integers(-5, 25),
    st.integers(-8, 8),
)
def test_valuation_set_algebra(sp1, t1, sp2, t2, k):
    a, b = ValuationSet(sp1, t1), ValuationSet(sp2, t2)
    u = a.union(b)
    for n in range(-20, 40):
        assert (n in u) == ((n in a) or (n in b))
        assert ((n + k) in a.shift(k)) == (n in a)
    assert a.union(b) == b.union(a)
    # length_between counts the set difference of nested sets
    assert length_between(a, u) == sum(
        1 for n in range(-20, 40) if n in u and n not in a
    )


coprime_gens = (
    st.lists(st.integers(min_value=2, max_value=60), min_size=2, max_size=6)
    .map(lambda xs: sorted(set(xs)))
    .filter(lambda xs: len(xs) >= 2)
    .filter(lambda xs: __import__("functools").reduce(gcd, xs) == 1)
)


@settings(max_examples=120, deadline=None)
@given(coprime_gens)
def test_invariants_random(gens):
    H = build_semigroup(gens)
    c, e = H.conductor, H.multiplicity

    # one Apery element per residue class, and the conductor identity
    ap = apery_set(H, e)
    assert len(ap) == e
    assert sorted(a % e for a in ap) == list(range(e))
    assert c == max(ap) - e + 1

    # gap bookkeeping
    assert H.genus + sum(1 for i in range(c) if H.contains(i)) == c

    pf = pseudo_frobenius(H)
    assert set(pf) <= set(H.gaps)
    assert pf[-1] == H.frobenius
    assert tuple(sorted(w - e for w in apery_maximals(H, e))) == pf
    assert 1 <= reduced_type(H) <= len(pf)

    # rebuilding from the minimal system reproduces the structure
    K = build_semigroup(H.generators)
    assert K == H and K._table == H._table


def test_random_pair_closure():
    rng = random.Random(20240817)
    H = build_semigroup([7, 15, 18, 29])
    members = list(H.members(4 * H.conductor))
    for _ in range(1000):
        a, b = rng.choice(members), rng.choice(members)
        assert a + b in H


def test_repr_and_pickle_roundtrip():
    import pickle

    H = build_semigroup([4, 9, 11])
    assert repr(H) == "NumericalSemigroup(4, 9, 11)"
    K = pickle.loads(pickle.dumps(H))
    assert K == H and K.conductor == H.conductor and K._table == H._table
    assert isinstance(K, NumericalSemigroup)
