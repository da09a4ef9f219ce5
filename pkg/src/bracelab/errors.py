"""Exception types raised across the library.

Every failure mode that callers are expected to catch gets its own class;
plain bugs stay as asserts.
"""


class BraceError(Exception):
    """Base class for all library-specific errors."""


class DimensionMismatch(BraceError):
    """Operands live in spaces of different dimensions."""


class FieldMismatch(BraceError):
    """Operands are defined over different fields."""


class RestrictionFailure(BraceError):
    """An operator does not map the given subspace into itself."""


class NoAntipode(BraceError):
    """The convolution equation for the antipode has no solution."""


class AntipodeAsymmetry(BraceError):
    """A one-sided antipode exists but fails the other convolution law."""


class NotCocommutative(BraceError):
    """The coalgebra is not cocommutative, but the operation needs it."""


class NotPointed(BraceError):
    """Group-like elements do not account for the whole coradical over
    the ground field, so the irreducible-component decomposition fails."""


class VerificationFailure(BraceError):
    """A constructed object failed its own axiom check; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotParallel(BraceError):
    """Equalizer input morphisms do not share domain and codomain."""


class CodomainMismatch(BraceError):
    """Pullback input morphisms do not share a codomain."""


class NormalityFailure(BraceError):
    """A sub-object required to be normal is not."""


class NotSplit(BraceError):
    """A projection/section pair does not compose to the identity."""


class NotCommutative(BraceError):
    """A diagram that must commute does not."""


class NotSurjective(BraceError):
    """The morphism is not surjective, but the operation needs it."""


class CharPositive(BraceError):
    """The operation is only available in characteristic zero."""


class ActionNotRestricting(BraceError):
    """The brace action does not restrict to the primitive subspace."""


class ParseError(BraceError):
    """A serialized file is malformed."""
