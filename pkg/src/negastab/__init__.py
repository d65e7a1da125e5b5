"""Negacyclic quantum stabilizer codes over odd prime fields.

Submodules cover exact finite-field arithmetic (`fields`), polynomial and
negacyclic quotient-ring arithmetic (`polyring`), cyclotomic factorization
of X^n + 1 (`cyclotomic`), code construction/classification/search
(`construct`), an exhaustive symplectic verification oracle (`oracle`), a
small dense simulator for the underlying shift/phase operators (`weyl`),
and the command-line surface (`cli`).
"""

from .fields import ExtField, FieldElem
from .polyring import Poly, RingElem, format_poly, parse_poly
from .cyclotomic import admissible_lengths, factor_xn_plus_one
from .construct import (CodeReport, CodeSpec, ConstructionError,
                        bch_distance, classify, construct_code, search)

__version__ = "0.1.0"

__all__ = [
    "ExtField", "FieldElem", "Poly", "RingElem", "format_poly", "parse_poly",
    "admissible_lengths", "factor_xn_plus_one", "CodeReport", "CodeSpec",
    "ConstructionError", "bch_distance", "classify", "construct_code",
    "search",
]
