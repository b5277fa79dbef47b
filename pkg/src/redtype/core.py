"""Numerical semigroups and their base invariants.

A numerical semigroup H is an addition-closed subset of the non-negative
integers containing 0 with finite complement.  This module builds semigroups
from generating sets and computes the invariants everything else consumes:
conductor, Frobenius number, gaps/genus, Apery sets, pseudo-Frobenius set,
Cohen-Macaulay type, and the reduced type (the number of gaps in the window
of width e just below the conductor).

Semigroups are immutable after construction and safe to share across
threads; every function here is pure.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator

from . import _kernels as kernels
from .errors import (
    EmptyGenerators,
    FullSemigroup,
    GeneratorTooLarge,
    NonCoprimeGenerators,
    NonPositive,
    NotAMember,
    NotNested,
    ZeroOrNegativeGenerator,
)

#: Generators above this bound are rejected so that every derived quantity
#: (conductor sums, gluing products) stays comfortably inside a machine word.
MAX_GENERATOR = 2**31 - 1


class NumericalSemigroup:
    """A numerical semigroup with cached membership table and invariants.

    Instances are built through :func:`build_semigroup`; the constructor
    assumes a validated, minimal, sorted generator tuple plus a membership
    sieve covering ``[0, conductor + max(generators)]``.
    """

    __slots__ = (
        "generators",
        "conductor",
        "frobenius",
        "multiplicity",
        "embedding_dimension",
        "genus",
        "gaps",
        "_table",
        "_pf",
    )

    def __init__(self, generators: tuple[int, ...], table: bytes, conductor: int):
        self.generators = generators
        self._table = table
        self.conductor = conductor
        self.frobenius = conductor - 1
        self.multiplicity = generators[0]
        self.embedding_dimension = len(generators)
        self.gaps = tuple(i for i in range(conductor) if not table[i])
        self.genus = len(self.gaps)
        self._pf: tuple[int, ...] | None = None

    @property
    def is_full(self) -> bool:
        """True when the semigroup is all of the naturals (conductor 0)."""
        return self.conductor == 0

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._table[n])

    __contains__ = contains

    def members(self, stop: int) -> Iterator[int]:
        """Yield the members in ``[0, stop)`` in increasing order."""
        return (n for n in range(stop) if self.contains(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"

    def __getstate__(self):
        return (self.generators, self._table, self.conductor, self._pf)

    def __setstate__(self, state):
        generators, table, conductor, pf = state
        self.__init__(generators, table, conductor)
        self._pf = pf


def build_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by ``raw_generators``.

    Duplicates are dropped and redundant generators removed, so the result
    carries the unique minimal generating system regardless of input order.
    Raises :class:`EmptyGenerators`, :class:`ZeroOrNegativeGenerator`,
    :class:`GeneratorTooLarge`, or :class:`NonCoprimeGenerators` on bad input.
    """
    gens = sorted(set(raw_generators))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    for g in gens:
        if not isinstance(g, int) or isinstance(g, bool):
            raise ZeroOrNegativeGenerator(f"generator {g!r} is not an integer")
        if g <= 0:
            raise ZeroOrNegativeGenerator(f"generator {g} must be positive")
        if g > MAX_GENERATOR:
            raise GeneratorTooLarge(f"generator {g} exceeds {MAX_GENERATOR}")
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise NonCoprimeGenerators(f"gcd of generators is {d}, not 1")

    table, conductor = kernels.member_table(tuple(gens))
    minimal = tuple(kernels.minimal_generators(table, conductor, gens[0]))
    # The minimal system is contained in every generating set, so the table
    # (sized from the raw maximum) only needs trimming, never extending.
    table = bytes(table[: conductor + minimal[-1] + 1])
    return NumericalSemigroup(minimal, table, conductor)


def contains(H: NumericalSemigroup, n: int) -> bool:
    """Membership test; negative integers are never members."""
    return H.contains(n)


def pseudo_frobenius(H: NumericalSemigroup) -> tuple[int, ...]:
    """The pseudo-Frobenius numbers: gaps x with x + h in H for all nonzero h.

    Testing x against the minimal generators suffices.  The largest element
    is always the Frobenius number.  Raises :class:`FullSemigroup` when H has
    no gaps.
    """
    if H.is_full:
        raise FullSemigroup("the full semigroup has no pseudo-Frobenius numbers")
    if H._pf is None:
        H._pf = tuple(
            kernels.pseudo_frobenius(H._table, H.conductor, H.generators)
        )
    return H._pf


def cm_type(H: NumericalSemigroup) -> int:
    """The Cohen-Macaulay type: cardinality of the pseudo-Frobenius set."""
    return len(pseudo_frobenius(H))


def apery_set(H: NumericalSemigroup, h: int) -> list[int]:
    """The Apery set of h in H: members s with s - h not a member.

    Contains exactly h elements, one per residue class mod h, with 0 always
    included.
    """
    if h <= 0:
        raise NonPositive(f"apery_set needs a positive element, got {h}")
    if h not in H:
        raise NotAMember(f"{h} is not a member of {H!r}")
    out = [
        s
        for s in range(H.conductor + h)
        if H.contains(s) and not H.contains(s - h)
    ]
    assert len(out) == h
    return out


def apery_maximals(H: NumericalSemigroup, h: int) -> list[int]:
    """Maximal Apery elements under the order a <= b iff b - a in H."""
    ap = apery_set(H, h)
    return [
        w
        for w in ap
        if not any(w2 != w and H.contains(w2 - w) for w2 in ap)
    ]


def reduced_type(H: NumericalSemigroup) -> int:
    """Number of gaps in the window [c - e, c - 1] of width the multiplicity.

    Always between 1 and the Cohen-Macaulay type.  Raises
    :class:`FullSemigroup` for the gap-free semigroup.
    """
    if H.is_full:
        raise FullSemigroup("reduced type needs a gap")
    c, e = H.conductor, H.multiplicity
    return sum(1 for x in range(c - e, c) if not H.contains(x))


class ValuationSet:
    """A cofinite set of integers: finitely many sporadic values plus a tail.

    ``threshold`` is the least T with every integer >= T a member; values
    below T are listed in ``sporadic``.  Construction normalizes: sporadic
    values >= T are folded into the tail, and T is lowered across any
    contiguous run of sporadic values ending at T, so equal sets compare
    equal structurally.
    """

    __slots__ = ("sporadic", "threshold")

    def __init__(self, sporadic: Iterable[int], threshold: int):
        values = sorted(set(sporadic))
        t = threshold
        values = [v for v in values if v < t]
        while values and values[-1] == t - 1:
            t -= 1
            values.pop()
        self.sporadic: tuple[int, ...] = tuple(values)
        self.threshold: int = t

    @classmethod
    def of_semigroup(cls, H: NumericalSemigroup) -> "ValuationSet":
        """The member values of H: sporadics below the conductor, tail after."""
        return cls((i for i in range(H.conductor) if H.contains(i)), H.conductor)

    @classmethod
    def conductor_ideal(cls, H: NumericalSemigroup) -> "ValuationSet":
        """The values of the conductor ideal: everything from c on."""
        return cls((), H.conductor)

    def contains(self, n: int) -> bool:
        return n >= self.threshold or n in self.sporadic

    __contains__ = contains

    def shift(self, n: int) -> "ValuationSet":
        """The translate n + self."""
        return ValuationSet((v + n for v in self.sporadic), self.threshold + n)

    def union(self, other: "ValuationSet") -> "ValuationSet":
        t = min(self.threshold, other.threshold)
        return ValuationSet(self.sporadic + other.sporadic, t)

    def closed_under(self, H: NumericalSemigroup) -> bool:
        """Whether member + g stays a member for every generator g of H."""
        return all(
            self.contains(v + g) for v in self.sporadic for g in H.generators
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValuationSet):
            return NotImplemented
        return (self.sporadic, self.threshold) == (other.sporadic, other.threshold)

    def __hash__(self) -> int:
        return hash((self.sporadic, self.threshold))

    def __repr__(self) -> str:
        inner = "".join(f"{v}, " for v in self.sporadic)
        return f"ValuationSet({{{inner}{self.threshold}->}})"


def length_between(inner: ValuationSet, outer: ValuationSet) -> int:
    """Count the elements of ``outer`` missing from ``inner``.

    Finite because both sets are cofinite.  Raises :class:`NotNested` when
    ``inner`` is not contained in ``outer``.
    """
    hi = max(inner.threshold, outer.threshold)
    lo = min(inner.sporadic[0] if inner.sporadic else inner.threshold,
             outer.sporadic[0] if outer.sporadic else outer.threshold)
    for v in range(lo, hi):
        if inner.contains(v) and not outer.contains(v):
            raise NotNested(f"{v} is in the inner set but not the outer")
    return sum(
        1 for v in range(lo, hi) if outer.contains(v) and not inner.contains(v)
    )
