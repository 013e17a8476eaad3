"""Exact q-deformed rationals, q-continuants and q-rotundi, with the path,
loop, matching and determinant models that compute them."""

from .farey import Rational, negative_expansion, q_rational_farey, regular_expansion
from .laurent import LaurentPoly, parse
from .qcore import continuant_E, continuant_K, mat_minus, mat_plus, rotundus_minus, rotundus_plus

__all__ = [
    "LaurentPoly",
    "Rational",
    "continuant_E",
    "continuant_K",
    "mat_minus",
    "mat_plus",
    "negative_expansion",
    "parse",
    "q_rational_farey",
    "regular_expansion",
    "rotundus_minus",
    "rotundus_plus",
]
