"""Closed-form quantum scalars used throughout the skein computations.

Provides quantum integers [n] in A^4, their factorials, the loop value
d = -A^2 - A^{-2}, the Chebyshev polynomials of both kinds as formal
one-variable polynomials, the closed form Delta_n = (-1)^n A^{-2n} [n+1],
and the encircling coefficient for a projector-colored loop around a
projector-colored strand bundle.
"""

from __future__ import annotations

import functools
from typing import Mapping

from .laurent import LaurentPoly, RationalFn

__all__ = [
    "FormalPoly",
    "loop_value",
    "quantum_int",
    "quantum_factorial",
    "delta",
    "chebyshev",
    "varsigma",
]

# d = -A^2 - A^{-2}, the value of a trivial loop
_D = LaurentPoly({2: -1, -2: -1})


def loop_value() -> LaurentPoly:
    """The scalar a trivial loop evaluates to: -A^2 - A^{-2}."""
    return _D


class FormalPoly:
    """A polynomial in one formal variable with RationalFn coefficients.

    Used both for Chebyshev polynomials in d and for annular closures as
    polynomials in the essential-curve variable z.  No zero coefficients
    are stored.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[tuple[int, RationalFn], ...]

    def __init__(self, coeffs: Mapping[int, RationalFn] | tuple = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, RationalFn] = {}
        for deg, c in items:
            if deg < 0:
                raise ValueError("formal polynomials have nonnegative degrees")
            c = c if isinstance(c, RationalFn) else RationalFn(c)
            prev = acc.get(deg)
            acc[deg] = c if prev is None else prev + c
        self.coeffs = tuple(sorted((d, c) for d, c in acc.items() if not c.is_zero()))

    @classmethod
    def zero(cls) -> FormalPoly:
        return cls(())

    @classmethod
    def constant(cls, c) -> FormalPoly:
        return cls({0: c if isinstance(c, RationalFn) else RationalFn(c)})

    @classmethod
    def variable(cls) -> FormalPoly:
        return cls({1: RationalFn.one()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.coeffs[-1][0]

    def coeff(self, deg: int) -> RationalFn:
        for d, c in self.coeffs:
            if d == deg:
                return c
        return RationalFn.zero()

    def is_integral(self) -> bool:
        """True when every coefficient is a Laurent polynomial (denominator 1)."""
        return all(c.is_laurent() for _, c in self.coeffs)

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return FormalPoly(tuple(self.coeffs) + tuple(other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> FormalPoly:
        return FormalPoly(tuple((d, -c) for d, c in self.coeffs))

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly, RationalFn)):
            c = other if isinstance(other, RationalFn) else RationalFn(other)
            return FormalPoly(tuple((d, q * c) for d, q in self.coeffs))
        if not isinstance(other, FormalPoly):
            return NotImplemented
        acc: dict[int, RationalFn] = {}
        for d1, c1 in self.coeffs:
            for d2, c2 in other.coeffs:
                k = d1 + d2
                prod = c1 * c2
                acc[k] = acc[k] + prod if k in acc else prod
        return FormalPoly(acc)

    __rmul__ = __mul__

    def evaluate(self, value) -> RationalFn:
        """Evaluate at a RationalFn (or LaurentPoly / int) by Horner's rule."""
        value = value if isinstance(value, RationalFn) else RationalFn(value)
        if not self.coeffs:
            return RationalFn.zero()
        total = RationalFn.zero()
        top = self.coeffs[-1][0]
        table = dict(self.coeffs)
        for deg in range(top, -1, -1):
            total = total * value
            c = table.get(deg)
            if c is not None:
                total = total + c
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return self.render("z")

    def render(self, var: str) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in reversed(self.coeffs):
            head = f"({c})" if (len(c.num.terms) > 1 or not c.den.is_one()) else f"{c}"
            if d == 0:
                parts.append(head)
            elif d == 1:
                parts.append(f"{head}*{var}" if head != "1" else var)
            else:
                parts.append(f"{head}*{var}^{d}" if head != "1" else f"{var}^{d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormalPoly({self})"

    def to_json(self) -> list:
        return [[d, c.to_json()] for d, c in self.coeffs]


def _coerce_poly(value):
    if isinstance(value, FormalPoly):
        return value
    if isinstance(value, (int, LaurentPoly, RationalFn)):
        return FormalPoly.constant(value)
    return NotImplemented


@functools.cache
def quantum_int(n: int) -> LaurentPoly:
    """[n] in A^4: 1 + A^4 + ... + A^{4(n-1)}; the empty sum for n = 0."""
    if n < 0:
        raise ValueError("quantum integers are defined for n >= 0")
    return LaurentPoly({4 * i: 1 for i in range(n)})


@functools.cache
def quantum_factorial(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n]; the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("quantum factorials are defined for n >= 0")
    if n == 0:
        return LaurentPoly.one()
    return quantum_factorial(n - 1) * quantum_int(n)


@functools.cache
def delta(n: int) -> LaurentPoly:
    """Loop value of the n-th Jones-Wenzl projector: (-1)^n A^{-2n} [n+1]."""
    if n < 0:
        raise ValueError("delta is defined for n >= 0")
    sign = -1 if n % 2 else 1
    return quantum_int(n + 1).shifted(-2 * n) * sign


@functools.cache
def chebyshev(kind: str, n: int) -> FormalPoly:
    """Chebyshev polynomial P_n by the recursion P_n = d P_{n-1} - P_{n-2}.

    kind 'first':  T_0 = 2, T_1 = d.
    kind 'second': S_0 = 1, S_1 = d.
    """
    if kind not in ("first", "second"):
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    if n < 0:
        raise ValueError("Chebyshev polynomials are defined for n >= 0")
    if n == 0:
        poly = FormalPoly.constant(2 if kind == "first" else 1)
    elif n == 1:
        poly = FormalPoly.variable()
    else:
        poly = FormalPoly.variable() * chebyshev(kind, n - 1) - chebyshev(kind, n - 2)
    assert poly.is_integral(), "Chebyshev coefficients must be integers"
    return poly


def varsigma(a: int, b: int) -> RationalFn:
    """Scalar by which an a-projector-colored loop acts on a b-projector bundle.

    (-1)^a (A^{2(b+1)(a+1)} - A^{-2(b+1)(a+1)}) / (A^{2(b+1)} - A^{-2(b+1)}),
    which is always a Laurent polynomial.
    """
    if a < 0 or b < 0:
        raise ValueError("varsigma is defined for a, b >= 0")
    m = 2 * (b + 1)
    numer = LaurentPoly({m * (a + 1): 1, -m * (a + 1): -1})
    denom = LaurentPoly({m: 1, -m: -1})
    quotient = numer.exact_div(denom)
    if a % 2:
        quotient = -quotient
    return RationalFn(quotient)
