"""Exact Schur-polynomial toolkit with identity verifiers and an irreducibility oracle."""

__version__ = "0.1.0"

from .errors import SchurforgeError
from .fields import make_extension_field, make_prime_field, make_rationals
from .mpoly import MPoly
from .schur import ExponentSequence, schur_poly, schur_ssyt

__all__ = [
    "__version__",
    "SchurforgeError",
    "make_prime_field",
    "make_extension_field",
    "make_rationals",
    "MPoly",
    "ExponentSequence",
    "schur_poly",
    "schur_ssyt",
]
