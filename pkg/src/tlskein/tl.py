"""The diagrammatic Temperley-Lieb algebra TL_n.

Basis diagrams are crossingless perfect matchings of 2n boundary points.
Boundary convention: points 1..n run down the left side and points n+1..2n
run up the right side, so 1..2n is the cyclic boundary order and the
noncrossing condition is a pure cyclic-order condition.  Internally points
are 0-based; the 1-based numbering appears in JSON and reprs.

Multiplication glues the right side of the first diagram to the left side
of the second; every closed loop formed at the interface contributes a
factor d = -A^2 - A^{-2}.  Products of basis diagrams are computed by path
following through the glued interface and always yield a single basis
diagram times a power of d.

Linear combinations carry Q(A) coefficients.  Products of elements clear
denominators first and convolve integer Laurent coefficients packed into
big integers, which keeps large projector computations fast while staying
exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .laurent import LaurentPoly, RationalFn, laurent_gcd, mul_slot_bits, pack_laurent, unpack_laurent
from .quantum import loop_value

__all__ = [
    "Matching",
    "TLElement",
    "enumerate_matchings",
    "catalan",
    "matching_from_json",
    "element_from_json",
]


def is_noncrossing_involution(inv: Sequence[int]) -> bool:
    """True when inv is a fixed-point-free involution with no crossing pairs."""
    N = len(inv)
    if any(not (0 <= inv[i] < N) or inv[i] == i or inv[inv[i]] != i for i in range(N)):
        return False
    stack: list[int] = []
    for i in range(N):
        if inv[i] > i:
            stack.append(inv[i])
        elif not stack or stack.pop() != i:
            return False
    return True


@dataclass(frozen=True)
class Matching:
    """A crossingless perfect matching of 2n cyclically ordered points."""

    n: int
    inv: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.inv) != 2 * self.n:
            raise ValueError("matching must pair exactly 2n points")
        if not is_noncrossing_involution(self.inv):
            raise ValueError(f"not a crossingless matching: {self.inv}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
        """Build from 1-based point pairs."""
        inv = [-1] * (2 * n)
        for a, b in pairs:
            inv[a - 1] = b - 1
            inv[b - 1] = a - 1
        return cls(n, tuple(inv))

    @classmethod
    def identity(cls, n: int) -> Matching:
        return cls(n, tuple(2 * n - 1 - i for i in range(2 * n)))

    @classmethod
    def e(cls, n: int, i: int) -> Matching:
        """The cap-cup generator e_i, 1 <= i <= n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"e_{i} does not exist in TL_{n}")
        inv = [2 * n - 1 - j for j in range(2 * n)]
        inv[i - 1], inv[i] = i, i - 1
        inv[2 * n - i - 1], inv[2 * n - i] = 2 * n - i, 2 * n - i - 1
        return cls(n, tuple(inv))

    def pairs(self) -> list[tuple[int, int]]:
        """Sorted 1-based pairs [a, b] with a < b."""
        return [(i + 1, p + 1) for i, p in enumerate(self.inv) if p > i]

    def is_identity(self) -> bool:
        return all(p == 2 * self.n - 1 - i for i, p in enumerate(self.inv))

    def add_strands_below(self, k: int = 1) -> Matching:
        """Tensor with k identity strands appended at the bottom."""
        if k < 0:
            raise ValueError("cannot append a negative number of strands")
        m = self
        for _ in range(k):
            n = m.n
            inv = [-1] * (2 * n + 2)
            for i, p in enumerate(m.inv):
                a = i if i < n else i + 2
                b = p if p < n else p + 2
                inv[a] = b
            inv[n], inv[n + 1] = n + 1, n
            m = Matching(n + 1, tuple(inv))
        return m

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.pairs()]

    def __repr__(self) -> str:
        body = ", ".join(f"{a}-{b}" for a, b in self.pairs())
        return f"Matching({self.n}: {body})"


def matching_from_json(n: int, data: Iterable) -> Matching:
    return Matching.from_pairs(n, [(int(a), int(b)) for a, b in data])


def glue_involutions(
    xinv: Sequence[int], yinv: Sequence[int], n: int
) -> tuple[tuple[int, ...], int]:
    """Compose two 2n-point matchings, x's right side against y's left side.

    x-point 2n-1-q is identified with y-point q.  Returns the boundary
    involution of the product (x's left side then y's right side) and the
    number of closed loops created at the interface.
    """
    N = 2 * n
    res = [-1] * N
    used = [False] * n  # interface crossings, indexed by x-right point - n
    for start in range(N):
        if res[start] != -1:
            continue
        side, p = (0, start) if start < n else (1, start)
        while True:
            if side == 0:
                p = xinv[p]
                if p < n:
                    res[start], res[p] = p, start
                    break
                used[p - n] = True
                side, p = 1, N - 1 - p
            else:
                p = yinv[p]
                if p >= n:
                    res[start], res[p] = p, start
                    break
                used[N - 1 - p - n] = True
                side, p = 0, N - 1 - p
    loops = 0
    for r0 in range(n, N):
        if used[r0 - n]:
            continue
        loops += 1
        r = r0
        while not used[r - n]:
            used[r - n] = True
            r2 = N - 1 - yinv[N - 1 - r]
            used[r2 - n] = True
            r = xinv[r2]
    return tuple(res), loops


@functools.cache
def catalan(n: int) -> int:
    if n <= 1:
        return 1
    return sum(catalan(k) * catalan(n - 1 - k) for k in range(n))


def _noncrossing_pairings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    a = points[0]
    for i in range(1, len(points), 2):
        b = points[i]
        for inner in _noncrossing_pairings(points[1:i]):
            for outer in _noncrossing_pairings(points[i + 1 :]):
                yield ((a, b),) + inner + outer


@functools.cache
def enumerate_matchings(n: int) -> tuple[Matching, ...]:
    """All crossingless matchings of 2n points, in a fixed deterministic order."""
    if n < 0:
        raise ValueError("strand count must be nonnegative")
    out = []
    for pairing in _noncrossing_pairings(tuple(range(2 * n))):
        inv = [-1] * (2 * n)
        for a, b in pairing:
            inv[a], inv[b] = b, a
        out.append(Matching(n, tuple(inv)))
    assert len(out) == catalan(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# Linear combinations
# ---------------------------------------------------------------------------

Scalar = (int, LaurentPoly, RationalFn)


class TLElement:
    """A finite Q(A)-linear combination of basis diagrams on n strands."""

    __slots__ = ("n", "terms")

    n: int
    terms: dict[Matching, RationalFn]

    def __init__(self, n: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Matching, RationalFn] = {}
        for m, c in items:
            if m.n != n:
                raise ValueError(f"matching on {m.n} strands in TL_{n} element")
            c = c if isinstance(c, RationalFn) else RationalFn(c)
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        self.n = n
        self.terms = {m: c for m, c in acc.items() if not c.is_zero()}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> TLElement:
        return cls(n, ())

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls(n, {Matching.identity(n): RationalFn.one()})

    @classmethod
    def e(cls, n: int, i: int) -> TLElement:
        return cls(n, {Matching.e(n, i): RationalFn.one()})

    @classmethod
    def from_matching(cls, m: Matching) -> TLElement:
        return cls(m.n, {m: RationalFn.one()})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Matching) -> RationalFn:
        return self.terms.get(m, RationalFn.zero())

    def __len__(self) -> int:
        return len(self.terms)

    # -- linear structure --------------------------------------------------

    def __add__(self, other: TLElement) -> TLElement:
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand counts differ")
        acc = dict(self.terms)
        for m, c in other.terms.items():
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return TLElement(self.n, acc)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def scaled(self, c) -> TLElement:
        c = c if isinstance(c, RationalFn) else RationalFn(c)
        if c.is_zero():
            return TLElement.zero(self.n)
        return TLElement(self.n, {m: q * c for m, q in self.terms.items()})

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scaled(other)
        if isinstance(other, Matching):
            other = TLElement.from_matching(other)
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return _element_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scaled(other)
        if isinstance(other, Matching):
            return TLElement.from_matching(other) * self
        return NotImplemented

    def add_strands_below(self, k: int = 1) -> TLElement:
        return TLElement(
            self.n + k, {m.add_strands_below(k): c for m, c in self.terms.items()}
        )

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TLElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"TLElement({self.n}: 0)"
        body = " + ".join(f"({c})*{m!r}" for m, c in sorted(self.terms.items(), key=lambda t: t[0].inv))
        return f"TLElement({self.n}: {body})"

    def to_json(self) -> list[dict]:
        entries = sorted(self.terms.items(), key=lambda t: t[0].inv)
        return [{"matching": m.to_json(), "coeff": c.to_json()} for m, c in entries]


def element_from_json(n: int, data: Iterable) -> TLElement:
    from .laurent import rational_from_json

    return TLElement(
        n,
        [
            (matching_from_json(n, entry["matching"]), rational_from_json(entry["coeff"]))
            for entry in data
        ],
    )


def _common_denominator(terms: dict[Matching, RationalFn]) -> tuple[LaurentPoly, list]:
    """Clear denominators: returns (D, [(inv-tuple, integer numerator)]).

    Every coefficient equals its listed numerator divided by D.
    """
    dens: dict[tuple, LaurentPoly] = {}
    for c in terms.values():
        dens.setdefault(c.den.terms, c.den)
    D = LaurentPoly.one()
    for den in dens.values():
        g = laurent_gcd(D, den)
        D = D * (den if g.is_one() else den.exact_div(g))
    factors = {t: D.exact_div(den) for t, den in dens.items()}
    scaled = [(m.inv, c.num * factors[c.den.terms]) for m, c in terms.items()]
    return D, scaled


def _element_mul(x: TLElement, y: TLElement) -> TLElement:
    if not x.terms or not y.terms:
        return TLElement.zero(x.n)
    n = x.n
    Dx, sx = _common_denominator(x.terms)
    Dy, sy = _common_denominator(y.terms)
    d_pows = [loop_value() ** k for k in range(n + 1)]

    # pack every integer coefficient once; accumulate big-int products per
    # output diagram, then unpack and divide by the common denominator
    slot = 0
    maxc = max(p.max_abs_coeff() for _, p in sx) or 1
    maxd = max(p.max_abs_coeff() for _, p in sy) or 1
    maxl = max(p.max_abs_coeff() for p in d_pows)
    tmax = max(max(len(p.terms) for _, p in sx), max(len(p.terms) for _, p in sy))
    slot = (
        maxc.bit_length()
        + maxd.bit_length()
        + maxl.bit_length()
        + 2 * tmax.bit_length()
        + (len(sx) * len(sy)).bit_length()
        + (n + 1).bit_length()
        + 4
    )
    gx = min(p.min_exp for _, p in sx)
    gy = min(p.min_exp for _, p in sy)
    gd = d_pows[-1].min_exp if n else 0
    base = gx + gy + gd
    px = [(inv, pack_laurent(p, p.min_exp, slot), p.min_exp) for inv, p in sx]
    py = [(inv, pack_laurent(p, p.min_exp, slot), p.min_exp) for inv, p in sy]
    pd = [(pack_laurent(p, p.min_exp, slot), p.min_exp) for p in d_pows]

    acc: dict[tuple, int] = {}
    for invx, ax, mx in px:
        for invy, ay, my in py:
            res, loops = glue_involutions(invx, invy, n)
            al, ml = pd[loops]
            val = (ax * ay * al) << (slot * (mx + my + ml - base))
            if res in acc:
                acc[res] += val
            else:
                acc[res] = val

    den = Dx * Dy
    out: dict[Matching, RationalFn] = {}
    for res, val in acc.items():
        num = unpack_laurent(val, base, slot)
        if num.is_zero():
            continue
        out[Matching(n, res)] = RationalFn(num, den)
    return TLElement(n, out)
