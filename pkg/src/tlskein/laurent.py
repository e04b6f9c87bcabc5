"""Exact arithmetic in the ring Z[A^{±1}] and its fraction field Q(A).

A Laurent polynomial is stored as a sorted tuple of (exponent, coefficient)
pairs with nonzero integer coefficients; the zero polynomial is the empty
tuple.  All arithmetic is exact — there is no floating point anywhere.

Rational functions are kept in a unique canonical form: numerator and
denominator are reduced by their gcd in Z[A^{±1}], all unit factors A^k are
pushed into the numerator (so the denominator has minimum exponent 0), and
the denominator's leading coefficient is positive.  Two values are equal iff
their canonical forms are identical, which also makes them usable as dict
keys.

Multiplication of large polynomials goes through Kronecker substitution
(pack into one big integer, multiply, unpack with balanced digits), which
keeps the diagram-algebra hot loops fast while staying exact.  Gcds use the
integer-evaluation heuristic with a divisibility check and fall back to a
primitive pseudo-remainder sequence.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "NotDivisible",
    "laurent_gcd",
    "laurent_from_json",
    "rational_from_json",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]

# dict-convolution cutoff above which multiplication packs into big integers
_KRONECKER_CUTOFF = 400


class LaurentPoly:
    """An element of Z[A^{±1}] with arbitrary-precision coefficients."""

    __slots__ = ("terms",)

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms: TermsLike = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(((0, 1),))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(((0, c),))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(((exp, coeff),))

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimum exponent")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no maximum exponent")
        return self.terms[-1][0]

    @property
    def leading_coeff(self) -> int:
        if not self.terms:
            return 0
        return self.terms[-1][1]

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def max_abs_coeff(self) -> int:
        return max((abs(c) for _, c in self.terms), default=0)

    def content(self) -> int:
        """Gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for _, c in self.terms:
            g = math.gcd(g, c)
        return g

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by A^k."""
        if k == 0:
            return self
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def substitute_inverse(self) -> LaurentPoly:
        """The mirror image A -> A^{-1}."""
        return LaurentPoly(tuple((-e, c) for e, c in self.terms))

    # -- ring operations -----------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        if len(self.terms) == 1:
            e0, c0 = self.terms[0]
            return LaurentPoly(tuple((e + e0, c * c0) for e, c in other.terms))
        if len(other.terms) == 1:
            return other * self
        if len(self.terms) * len(other.terms) > _KRONECKER_CUTOFF:
            return _kronecker_mul(self, other)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                k = e1 + e2
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not defined here")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- division ------------------------------------------------------

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self / other in Z[A^{±1}].

        Raises NotDivisible when the division leaves a remainder.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        if len(other.terms) == 1:
            e0, c0 = other.terms[0]
            out = []
            for e, c in self.terms:
                q, r = divmod(c, c0)
                if r:
                    raise NotDivisible(f"coefficient {c} not divisible by {c0}")
                out.append((e - e0, q))
            return LaurentPoly(tuple(out))

        # shift both to ordinary polynomials and do sparse long division;
        # for an exact division each leading coefficient must divide.
        shift = self.min_exp - other.min_exp
        rem = dict(self.shifted(-self.min_exp).terms)
        den = LaurentPoly(tuple((e - other.min_exp, c) for e, c in other.terms))
        dden = den.max_exp
        lc = den.leading_coeff
        quot: dict[int, int] = {}
        while rem:
            dtop = max(rem)
            if dtop < dden:
                raise NotDivisible("remainder of lower degree than divisor")
            q, r = divmod(rem[dtop], lc)
            if r:
                raise NotDivisible("leading coefficient does not divide")
            k = dtop - dden
            quot[k] = q
            for e, c in den.terms:
                ne = e + k
                v = rem.get(ne, 0) - q * c
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return LaurentPoly(quot).shifted(shift)

    def divides(self, other: LaurentPoly) -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisible:
            return False

    # -- evaluation (integers only; used by gcd heuristic) ---------------

    def eval_int(self, x: int) -> int:
        """Evaluate the shifted ordinary polynomial self * A^{-min_exp} at x."""
        if not self.terms:
            return 0
        m = self.min_exp
        total = 0
        for e, c in self.terms:
            total += c * x ** (e - m)
        return total

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = str(abs(c))
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = str(abs(c))
            else:
                var = "A" if e == 1 else f"A^{{{e}}}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            parts.append(("-" if c < 0 else "+", body))
        out = (parts[0][0] if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[list]:
        """Sorted [exponent, coefficient-as-decimal-string] pairs."""
        return [[e, str(c)] for e, c in self.terms]


def laurent_from_json(data: Iterable) -> LaurentPoly:
    return LaurentPoly(tuple((int(e), int(c)) for e, c in data))


# ---------------------------------------------------------------------------
# Kronecker-substitution multiplication
# ---------------------------------------------------------------------------


def pack_laurent(p: LaurentPoly, min_exp: int, slot: int) -> int:
    """Pack p as sum(c * 2^{slot*(e - min_exp)}); exponents must be >= min_exp."""
    total = 0
    for e, c in p.terms:
        total += c << (slot * (e - min_exp))
    return total


def unpack_laurent(n: int, min_exp: int, slot: int) -> LaurentPoly:
    """Inverse of pack_laurent for balanced digits |c| < 2^{slot-1}."""
    mask = (1 << slot) - 1
    half = 1 << (slot - 1)
    out = []
    e = min_exp
    while n:
        digit = n & mask
        if digit >= half:
            digit -= mask + 1
        if digit:
            out.append((e, digit))
        n = (n - digit) >> slot
        e += 1
    return LaurentPoly(tuple(out))


def mul_slot_bits(a: LaurentPoly, b: LaurentPoly) -> int:
    """Slot width so that coefficients of a*b fit a balanced digit."""
    bits = a.max_abs_coeff().bit_length() + b.max_abs_coeff().bit_length()
    return bits + min(len(a.terms), len(b.terms)).bit_length() + 2


def _kronecker_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    slot = mul_slot_bits(a, b)
    pa = pack_laurent(a, a.min_exp, slot)
    pb = pack_laurent(b, b.min_exp, slot)
    return unpack_laurent(pa * pb, a.min_exp + b.min_exp, slot)


# ---------------------------------------------------------------------------
# Gcd in Z[A^{±1}]
# ---------------------------------------------------------------------------


def _primitive(p: LaurentPoly) -> LaurentPoly:
    """Primitive part with min exponent 0 and positive leading coefficient."""
    if p.is_zero():
        return p
    c = p.content()
    if p.leading_coeff < 0:
        c = -c
    return LaurentPoly(tuple((e - p.min_exp, q // c) for e, q in p.terms))


def _dense(p: LaurentPoly) -> list[int]:
    """Dense coefficient list of the shifted ordinary polynomial, low to high."""
    out = [0] * (p.max_exp - p.min_exp + 1)
    m = p.min_exp
    for e, c in p.terms:
        out[e - m] = c
    return out


def _from_dense(coeffs: list[int]) -> LaurentPoly:
    return LaurentPoly(tuple((i, c) for i, c in enumerate(coeffs) if c))


def _dense_prem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of dense integer polynomials (u modulo v)."""
    u = u[:]
    dv = len(v) - 1
    lv = v[-1]
    while len(u) - 1 >= dv and any(u):
        while u and u[-1] == 0:
            u.pop()
        du = len(u) - 1
        if du < dv:
            break
        lu = u[-1]
        k = du - dv
        for i in range(len(u)):
            u[i] *= lv
        for i, c in enumerate(v):
            u[i + k] -= lu * c
        while u and u[-1] == 0:
            u.pop()
    return u


def _prs_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive pseudo-remainder sequence gcd of primitive parts."""
    f, g = _dense(a), _dense(b)
    while True:
        if not any(g):
            return _primitive(_from_dense(f))
        r = _dense_prem(f, g)
        f, g = g, _dense(_primitive(_from_dense(r))) if any(r) else []


def _heuristic_reconstruct(value: int, xi: int) -> LaurentPoly:
    """Interpolate a polynomial from its value at xi using balanced digits."""
    coeffs = []
    while value:
        digit = value % xi
        if digit > xi // 2:
            digit -= xi
        coeffs.append(digit)
        value = (value - digit) // xi
    return _from_dense(coeffs)


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd in Z[A^{±1}], normalized to min exponent 0, positive leading coeff.

    Unit factors A^k are not part of the result, so the gcd of two monomials
    is their integer content.
    """
    if a.is_zero():
        return _primitive(b) * abs(b.content()) if not b.is_zero() else LaurentPoly.zero()
    if b.is_zero():
        return _primitive(a) * abs(a.content())
    cont = math.gcd(a.content(), b.content())
    pa, pb = _primitive(a), _primitive(b)
    if pa.is_one() or pb.is_one():
        return LaurentPoly.constant(cont)
    if pa == pb:
        return pa * cont

    # integer-evaluation heuristic with verification, then PRS fallback
    xi = 2 * min(pa.max_abs_coeff(), pb.max_abs_coeff()) + 2
    xi = max(xi, 4)
    for _ in range(6):
        va, vb = pa.eval_int(xi), pb.eval_int(xi)
        if va and vb:
            cand = _primitive(_heuristic_reconstruct(math.gcd(va, vb), xi))
            if not cand.is_zero() and cand.divides(pa) and cand.divides(pb):
                return cand * cont
        xi = xi * xi + 1
    return _prs_gcd(pa, pb) * cont


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


def _as_laurent(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")


class RationalFn:
    """An element of Q(A) as a reduced fraction of Laurent polynomials.

    Canonical form: gcd(num, den) = 1 over Z[A^{±1}], den has minimum
    exponent 0 and positive leading coefficient.  Equality and hashing are
    by canonical form.
    """

    __slots__ = ("num", "den")

    num: LaurentPoly
    den: LaurentPoly

    def __init__(self, num, den=1):
        num = _as_laurent(num)
        den = _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        if not den.is_one():
            g = laurent_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            shift = den.min_exp
            if shift:
                num = num.shifted(-shift)
                den = den.shifted(-shift)
            if den.leading_coeff < 0:
                num = -num
                den = -den
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> RationalFn:
        return cls(0)

    @classmethod
    def one(cls) -> RationalFn:
        return cls(1)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RationalFn:
        return cls(p)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return self.num

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        g = laurent_gcd(self.den, other.den)
        if g.is_one():
            return RationalFn(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        return RationalFn(self.num * db + other.num * da, self.den * db)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        out = object.__new__(RationalFn)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFn.zero()
        if self.den.is_one() and other.den.is_one():
            out = object.__new__(RationalFn)
            out.num = self.num * other.num
            out.den = LaurentPoly.one()
            return out
        # cross-cancel; the pieces are then pairwise coprime
        g1 = laurent_gcd(self.num, other.den)
        g2 = laurent_gcd(other.num, self.den)
        n1 = self.num if g1.is_one() else self.num.exact_div(g1)
        d2 = other.den if g1.is_one() else other.den.exact_div(g1)
        n2 = other.num if g2.is_one() else other.num.exact_div(g2)
        d1 = self.den if g2.is_one() else self.den.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        shift = den.min_exp
        if shift:
            num = num.shifted(-shift)
            den = den.shifted(-shift)
        if den.leading_coeff < 0:
            num, den = -num, -den
        out = object.__new__(RationalFn)
        out.num = num
        out.den = den
        return out

    __rmul__ = __mul__

    def inv(self) -> RationalFn:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> RationalFn:
        if n < 0:
            return self.inv() ** (-n)
        result = RationalFn.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn(other)
        return (
            isinstance(other, RationalFn)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num.terms, self.den.terms))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"

    def latex(self) -> str:
        if self.den.is_one():
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def rational_from_json(data: Mapping) -> RationalFn:
    return RationalFn(laurent_from_json(data["num"]), laurent_from_json(data["den"]))


def _coerce(value) -> RationalFn:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, (int, LaurentPoly)):
        return RationalFn(value)
    return NotImplemented
