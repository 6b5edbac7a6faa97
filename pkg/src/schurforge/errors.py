"""Exception types shared across the package."""


class SchurforgeError(Exception):
    """Base class for all package errors."""


class ConstructionError(SchurforgeError):
    """A field context could not be built from the given parameters."""


class ContextError(SchurforgeError):
    """Operands belong to different field contexts or rings."""


class DivisionByZero(SchurforgeError, ZeroDivisionError):
    """Inversion of zero, or division by the zero polynomial."""


class NotFinite(SchurforgeError):
    """An enumeration was requested over an infinite field."""


class ZeroPolynomial(SchurforgeError):
    """The operation is undefined on the zero polynomial."""


class BadSubstitution(SchurforgeError):
    """Source and destination variable of a substitution coincide."""


class BadPermutation(SchurforgeError):
    """The given sequence is not a permutation of the variable indices."""


class BadBounds(SchurforgeError):
    """Exponent-reversal bounds are below the actual degrees."""


class BadSequence(SchurforgeError):
    """The integer sequence is not strictly increasing and non-negative."""


class BadParameter(SchurforgeError):
    """A parameter violates the operation's stated precondition."""


class CaseError(SchurforgeError):
    """The closed-form expansion path was called outside its case split."""


class SizeError(SchurforgeError):
    """The request exceeds the documented desk-scale bounds."""
