"""Exact diagrammatic computations in the Temperley-Lieb algebra and the
Kauffman bracket skein modules of the annulus and the Möbius band."""

from .laurent import LaurentPoly, NotDivisible, RationalFn, laurent_gcd
from .quantum import FormalPoly, chebyshev, delta, loop_value, quantum_factorial, quantum_int, varsigma
from .tl import Matching, TLElement, catalan, enumerate_matchings

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "NotDivisible",
    "laurent_gcd",
    "FormalPoly",
    "loop_value",
    "quantum_int",
    "quantum_factorial",
    "delta",
    "chebyshev",
    "varsigma",
    "Matching",
    "TLElement",
    "catalan",
    "enumerate_matchings",
]
