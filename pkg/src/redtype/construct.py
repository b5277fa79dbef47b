"""Gluing and dual constructions.

Both constructions come with closed-form predictions (pseudo-Frobenius set,
conductor, type) that are asserted against direct computation on every call,
so each invocation doubles as a consistency test.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import NumericalSemigroup, build_semigroup, cm_type, pseudo_frobenius, reduced_type
from .errors import FullSemigroup, InvalidGluing, PredictionMismatch


@dataclass(frozen=True)
class GluingSpec:
    """Data for a gluing: weights are drawn crosswise from the factors.

    ``y`` must be a non-generator member of ``h1`` and ``x`` a non-generator
    member of ``h2``, with x and y coprime; the glued semigroup is generated
    by x times the generators of ``h1`` and y times the generators of ``h2``.
    """

    h1: NumericalSemigroup
    h2: NumericalSemigroup
    x: int
    y: int

    def validate(self) -> None:
        if self.h1.is_full or self.h2.is_full:
            raise InvalidGluing("gluing factors must be proper semigroups")
        if self.x <= 0 or self.y <= 0:
            raise InvalidGluing("gluing weights must be positive")
        if self.y not in self.h1:
            raise InvalidGluing(f"y={self.y} is not a member of {self.h1!r}")
        if self.y in self.h1.generators:
            raise InvalidGluing(f"y={self.y} is a minimal generator of {self.h1!r}")
        if self.x not in self.h2:
            raise InvalidGluing(f"x={self.x} is not a member of {self.h2!r}")
        if self.x in self.h2.generators:
            raise InvalidGluing(f"x={self.x} is a minimal generator of {self.h2!r}")
        if gcd(self.x, self.y) != 1:
            raise InvalidGluing(f"gcd(x, y) = {gcd(self.x, self.y)} != 1")


def glue(spec: GluingSpec) -> NumericalSemigroup:
    """Glue two semigroups and verify the closed forms.

    The glued semigroup is rebuilt from scratch; the predicted
    pseudo-Frobenius set {x f + y g + x y}, conductor, type product,
    multiplicity, and the reduced-type bound s <= s1 * s2 are then checked
    against the direct computation.  Any mismatch raises
    :class:`PredictionMismatch`.
    """
    spec.validate()
    h1, h2, x, y = spec.h1, spec.h2, spec.x, spec.y
    glued = build_semigroup(
        [x * a for a in h1.generators] + [y * b for b in h2.generators]
    )

    pf1, pf2 = pseudo_frobenius(h1), pseudo_frobenius(h2)
    predicted_pf = tuple(sorted(x * f + y * g + x * y for f in pf1 for g in pf2))
    predicted_c = x * (h1.conductor - 1) + y * (h2.conductor - 1) + x * y + 1
    predicted_e = min(x * h1.multiplicity, y * h2.multiplicity)

    if pseudo_frobenius(glued) != predicted_pf:
        raise PredictionMismatch(
            f"PF({glued!r}) = {pseudo_frobenius(glued)} != predicted {predicted_pf}"
        )
    if glued.conductor != predicted_c:
        raise PredictionMismatch(
            f"conductor {glued.conductor} != predicted {predicted_c}"
        )
    if cm_type(glued) != cm_type(h1) * cm_type(h2):
        raise PredictionMismatch("type of gluing is not the product of types")
    if glued.multiplicity != predicted_e:
        raise PredictionMismatch(
            f"multiplicity {glued.multiplicity} != predicted {predicted_e}"
        )
    if reduced_type(glued) > reduced_type(h1) * reduced_type(h2):
        raise PredictionMismatch("reduced type exceeds the product bound")
    return glued


def dual(H: NumericalSemigroup) -> NumericalSemigroup:
    """The dual semigroup H* = H together with its pseudo-Frobenius numbers.

    This is the value semigroup of the endomorphism ring of the maximal
    ideal.  Its conductor is asserted to be c - e, covering the degenerate
    case H* equal to the full semigroup when c = e.  Raises
    :class:`FullSemigroup` when H itself has no gaps.
    """
    if H.is_full:
        raise FullSemigroup("the full semigroup has no dual")
    out = build_semigroup(H.generators + pseudo_frobenius(H))
    if out.conductor != H.conductor - H.multiplicity:
        raise PredictionMismatch(
            f"dual conductor {out.conductor} != "
            f"{H.conductor} - {H.multiplicity}"
        )
    return out
