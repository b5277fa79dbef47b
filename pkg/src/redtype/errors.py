"""Exception hierarchy for the redtype package."""


class SemigroupError(Exception):
    """Base class for all redtype errors."""


class EmptyGenerators(SemigroupError):
    """No generators were supplied."""


class ZeroOrNegativeGenerator(SemigroupError):
    """A generator was zero or negative."""


class NonCoprimeGenerators(SemigroupError):
    """gcd of the generators exceeds 1, so the complement is infinite."""


class GeneratorTooLarge(SemigroupError):
    """A generator exceeds the supported machine-word range."""


class FullSemigroup(SemigroupError):
    """The semigroup is all of the naturals; the requested invariant needs a gap."""


class NotAMember(SemigroupError):
    """The supplied element does not belong to the semigroup."""


class NonPositive(SemigroupError):
    """A strictly positive integer was required."""


class NotNested(SemigroupError):
    """The inner valuation set is not contained in the outer one."""


class EmptySet(SemigroupError):
    """A non-empty set was required."""


class OutOfRange(SemigroupError):
    """A parameter lies outside the supported desk-scale range."""


class InvalidGluing(SemigroupError):
    """The gluing data violates a membership, generator, or coprimality condition."""


class PredictionMismatch(SemigroupError):
    """A closed-form prediction disagreed with direct computation (internal bug)."""


class InternalInconsistency(SemigroupError):
    """Two equivalent criteria disagreed (internal bug)."""


class UnknownSuite(SemigroupError):
    """The requested verification suite is not registered."""


class UnsupportedFormat(SemigroupError):
    """The requested output format is not one of json, csv, text."""
