"""Classification predicates and the aggregated invariant report.

Every predicate that admits two independent criteria computes both and
raises :class:`InternalInconsistency` when they disagree, so a report is
only ever produced from mutually confirming routes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .construct import dual
from .core import (
    NumericalSemigroup,
    ValuationSet,
    apery_maximals,
    apery_set,
    cm_type,
    pseudo_frobenius,
    reduced_type,
)
from .errors import FullSemigroup, InternalInconsistency

#: Verdicts for the reflexive-module finiteness question.
REF_FINITE = "finite"
REF_INFINITE = "infinite"
REF_UNKNOWN = "unknown"


def _require_proper(H: NumericalSemigroup) -> None:
    if H.is_full:
        raise FullSemigroup("classification predicates need a proper semigroup")


def is_gorenstein(H: NumericalSemigroup) -> bool:
    """Type one, equivalently a symmetric gap set.

    Both criteria are evaluated: |PF| == 1, and for every x in [0, F] exactly
    one of x, F - x is a member.
    """
    _require_proper(H)
    by_type = cm_type(H) == 1
    F = H.frobenius
    by_symmetry = all(H.contains(x) != H.contains(F - x) for x in range(F + 1))
    if by_type != by_symmetry:
        raise InternalInconsistency(
            f"{H!r}: type-one test {by_type} vs symmetry test {by_symmetry}"
        )
    return by_type


def is_minimal_multiplicity(H: NumericalSemigroup) -> bool:
    """Multiplicity equals embedding dimension.

    When true, the pseudo-Frobenius set must be exactly the shifted tail
    generators {b_i - b_1 : i >= 2}; this is asserted.
    """
    _require_proper(H)
    result = H.multiplicity == H.embedding_dimension
    if result:
        expected = tuple(b - H.multiplicity for b in H.generators[1:])
        if pseudo_frobenius(H) != expected:
            raise InternalInconsistency(
                f"{H!r}: minimal multiplicity but PF != shifted generators"
            )
    return result


def has_maximal_reduced_type(H: NumericalSemigroup) -> bool:
    """Reduced type equals Cohen-Macaulay type.

    Three equivalent criteria are computed and compared: the gap count in
    the conductor window, min PF >= c - e, and the Apery-maximals bound.
    """
    _require_proper(H)
    c, e = H.conductor, H.multiplicity
    by_count = reduced_type(H) == cm_type(H)
    by_pf = min(pseudo_frobenius(H)) >= c - e
    ap = apery_set(H, e)
    by_apery = min(apery_maximals(H, e)) >= max(ap) - e + 1
    if not (by_count == by_pf == by_apery):
        raise InternalInconsistency(
            f"{H!r}: maximal-reduced-type criteria disagree "
            f"(count={by_count}, pf={by_pf}, apery={by_apery})"
        )
    return by_count


def has_minimal_reduced_type(H: NumericalSemigroup) -> bool:
    """Reduced type one: only c - 1 is missing from the conductor window.

    Cross-checked against both pseudo-Frobenius bounds (strict < c - e and
    the sharper <= c - e - 2), and for minimal-multiplicity semigroups with
    at least three generators against b_{n-1} + b_1 - 1 < b_n.
    """
    _require_proper(H)
    c, e = H.conductor, H.multiplicity
    by_count = reduced_type(H) == 1
    pf = pseudo_frobenius(H)
    others = pf[:-1]  # pf[-1] is always c - 1
    by_strict = all(x < c - e for x in others)
    by_margin = all(x <= c - e - 2 for x in others)
    checks = [by_strict, by_margin]
    if H.multiplicity == H.embedding_dimension and H.embedding_dimension >= 3:
        g = H.generators
        checks.append(g[-2] + g[0] - 1 < g[-1])
    if any(ch != by_count for ch in checks):
        raise InternalInconsistency(
            f"{H!r}: minimal-reduced-type criteria disagree "
            f"(count={by_count}, checks={checks})"
        )
    return by_count


def is_almost_gorenstein(H: NumericalSemigroup) -> bool:
    """Pseudo-Frobenius pairing: f_i + f_{t-i} = c - 1 for 1 <= i <= t - 1.

    Must agree with the length identity 2 * genus = c + type - 1 (the
    colength of H in the naturals versus the colength of the conductor
    ideal plus type minus one).
    """
    _require_proper(H)
    pf = pseudo_frobenius(H)
    t = len(pf)
    c = H.conductor
    by_pairing = all(pf[i] + pf[t - 2 - i] == c - 1 for i in range(t - 1))
    by_length = 2 * H.genus == c + t - 1
    if by_pairing != by_length:
        raise InternalInconsistency(
            f"{H!r}: pairing test {by_pairing} vs length identity {by_length}"
        )
    return by_pairing


def is_pseudo_symmetric(H: NumericalSemigroup) -> bool:
    """Almost Gorenstein of type two: PF = {(c-1)/2, c-1}.

    When true, the conductor dichotomy is asserted: maximal reduced type
    iff c <= 2e - 1, minimal reduced type iff c > 2e - 1.
    """
    _require_proper(H)
    c = H.conductor
    pf = pseudo_frobenius(H)
    result = c % 2 == 1 and pf == ((c - 1) // 2, c - 1)
    if result:
        e = H.multiplicity
        if has_maximal_reduced_type(H) != (c <= 2 * e - 1):
            raise InternalInconsistency(
                f"{H!r}: pseudo-symmetric conductor bound vs maximal reduced type"
            )
        if has_minimal_reduced_type(H) != (c > 2 * e - 1):
            raise InternalInconsistency(
                f"{H!r}: pseudo-symmetric conductor bound vs minimal reduced type"
            )
    return result


def canonical_valuations(H: NumericalSemigroup) -> ValuationSet:
    """Value set of the canonical module: union of (c - 1 - f) + H over PF.

    Zero is always a member (take f = c - 1).
    """
    _require_proper(H)
    c = H.conductor
    base = ValuationSet.of_semigroup(H)
    out = base  # shift 0 comes from f = c - 1
    for f in pseudo_frobenius(H):
        shift = c - 1 - f
        if shift:
            out = out.union(base.shift(shift))
    return out


def is_far_flung_gorenstein(H: NumericalSemigroup) -> bool:
    """Canonical-generator sums cover the bottom multiplicity window.

    With B = {c - 1 - f : f in PF}, true iff {0, ..., e-1} is contained in
    B + B.  Verified against the equivalent top-window form: every integer
    in [2(c-1) - e + 1, 2(c-1)] is a sum of two pseudo-Frobenius numbers.
    Gorenstein semigroups are never far-flung (B = {0} and e >= 2).
    """
    _require_proper(H)
    c, e = H.conductor, H.multiplicity
    pf = pseudo_frobenius(H)
    shifts = [c - 1 - f for f in pf]
    shift_sums = {a + b for a in shifts for b in shifts}
    by_bottom = all(k in shift_sums for k in range(e))
    pf_sums = {a + b for a in pf for b in pf}
    top = 2 * (c - 1)
    by_top = all(k in pf_sums for k in range(top - e + 1, top + 1))
    if by_bottom != by_top:
        raise InternalInconsistency(
            f"{H!r}: far-flung window criteria disagree"
        )
    return by_bottom


def mu_overring(H: NumericalSemigroup) -> int:
    """Minimal generator count of the normalization step module.

    Counts the values strictly between e and 2e missing from H, which is
    the number of generators the first blow-up ring needs beyond H itself.
    """
    _require_proper(H)
    e = H.multiplicity
    return sum(1 for j in range(e + 1, 2 * e) if not H.contains(j))


def is_cm_finite(H: NumericalSemigroup) -> bool:
    """Finitely many indecomposable maximal Cohen-Macaulay modules.

    Holds iff the multiplicity is at most 3 and the overring module needs
    at most one generator.
    """
    _require_proper(H)
    return H.multiplicity <= 3 and mu_overring(H) <= 1


def ref_finiteness(H: NumericalSemigroup) -> str:
    """Verdict on finiteness of the reflexive-module category.

    Decided through the endomorphism ring of the maximal ideal, whose value
    semigroup is the dual H* = H + PF(H):

    * CM-finite dual (or dual equal to the full semigroup, a regular ring)
      implies finite;
    * otherwise, for almost Gorenstein H the converse holds, so infinite;
    * otherwise CM-finiteness of H itself still implies finite;
    * otherwise unknown.
    """
    _require_proper(H)
    B = dual(H)
    if B.is_full or is_cm_finite(B):
        return REF_FINITE
    if is_almost_gorenstein(H):
        return REF_INFINITE
    if is_cm_finite(H):
        return REF_FINITE
    return REF_UNKNOWN


@dataclass(frozen=True)
class InvariantReport:
    """Numeric invariants and classification verdicts for one semigroup."""

    generators: tuple[int, ...]
    multiplicity: int
    embedding_dimension: int
    genus: int
    frobenius: int
    conductor: int
    type: int
    reduced_type: int
    pf_set: tuple[int, ...]
    gorenstein: bool
    minimal_multiplicity: bool
    max_reduced_type: bool
    min_reduced_type: bool
    almost_gorenstein: bool
    pseudo_symmetric: bool
    far_flung_gorenstein: bool
    cm_finite: bool
    ref_finite: str
    mu_overring: int


def classify(H: NumericalSemigroup) -> InvariantReport:
    """Full invariant report with all cross-checks executed.

    Raises :class:`InternalInconsistency` if any pair of equivalent criteria
    disagrees or a structural implication between verdicts fails.
    """
    _require_proper(H)
    pf = pseudo_frobenius(H)
    s = reduced_type(H)
    rep = InvariantReport(
        generators=H.generators,
        multiplicity=H.multiplicity,
        embedding_dimension=H.embedding_dimension,
        genus=H.genus,
        frobenius=H.frobenius,
        conductor=H.conductor,
        type=len(pf),
        reduced_type=s,
        pf_set=pf,
        gorenstein=is_gorenstein(H),
        minimal_multiplicity=is_minimal_multiplicity(H),
        max_reduced_type=has_maximal_reduced_type(H),
        min_reduced_type=has_minimal_reduced_type(H),
        almost_gorenstein=is_almost_gorenstein(H),
        pseudo_symmetric=is_pseudo_symmetric(H),
        far_flung_gorenstein=is_far_flung_gorenstein(H),
        cm_finite=is_cm_finite(H),
        ref_finite=ref_finiteness(H),
        mu_overring=mu_overring(H),
    )

    window = [x for x in pf if rep.conductor - rep.multiplicity <= x]
    problems = []
    if rep.reduced_type != len(window):
        problems.append("reduced type != PF count in conductor window")
    if not (1 <= rep.reduced_type <= rep.type):
        problems.append("reduced type outside [1, type]")
    if rep.gorenstein != (rep.type == 1):
        problems.append("gorenstein != (type == 1)")
    if rep.gorenstein and not (rep.max_reduced_type and rep.min_reduced_type):
        problems.append("gorenstein but not both reduced-type extremes")
    if rep.far_flung_gorenstein and rep.min_reduced_type:
        problems.append("far-flung gorenstein with minimal reduced type")
    if rep.pseudo_symmetric and not (rep.almost_gorenstein and rep.type == 2):
        problems.append("pseudo-symmetric but not almost Gorenstein of type 2")
    if problems:
        raise InternalInconsistency(f"{H!r}: " + "; ".join(problems))
    return rep
