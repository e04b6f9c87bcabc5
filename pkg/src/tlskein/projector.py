"""Jones-Wenzl projectors and the Kauffman bracket tangle resolver.

The n-th projector f_n is computed two independent ways:

* Wenzl's recursion, seeded at f_1 = 1:
  f_n = (f_{n-1} ⊗ 1) - (Δ_{n-2}/Δ_{n-1}) (f_{n-1} ⊗ 1) e_{n-1} (f_{n-1} ⊗ 1).

* the braid symmetrizer: resolve every minimal positive braid word b_π,
  weight it by (A^3)^{|π|}, sum over the symmetric group and divide by the
  quantum factorial [n]!.

Tangles with crossings are encoded as slice words — sequences of caps,
cups, crossings and projector insertions with consistent widths — and
evaluated by sweeping left to right.  A positive crossing resolves as
A·(identity smoothing) + A^{-1}·(cap-cup smoothing); trivial loops formed
along the way contribute d = -A^2 - A^{-2}.  The sweep state is a linear
combination of crossingless (n0 -> w) tangles keyed by their boundary
matchings, so memory stays polynomial in the width rather than exponential
in the crossing count.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from .laurent import LaurentPoly, RationalFn
from .quantum import delta, loop_value, quantum_factorial
from .tl import Matching, TLElement

__all__ = [
    "BraidWord",
    "SliceWord",
    "Cap",
    "Cup",
    "Crossing",
    "InsertProjector",
    "InsertElement",
    "permutation_braid",
    "braid_permutation",
    "resolve",
    "jones_wenzl",
    "jones_wenzl_constructive",
    "partial_trace_top",
    "encircle",
]


# ---------------------------------------------------------------------------
# Braid words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators; letters are signed 1-based indices."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for letter in self.letters:
            if not 1 <= abs(letter) <= self.n - 1:
                raise ValueError(f"generator index {letter} out of range for {self.n} strands")

    def inverse_free(self) -> bool:
        return all(letter > 0 for letter in self.letters)

    def to_slices(self) -> SliceWord:
        return SliceWord(
            self.n,
            tuple(Crossing(abs(l), 1 if l > 0 else -1) for l in self.letters),
        )


def braid_permutation(word: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: apply each letter as a position swap."""
    perm = list(range(1, word.n + 1))
    for letter in word.letters:
        i = abs(letter)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def _sorting_swaps(pi: Sequence[int], strategy: str) -> list[int]:
    arr = list(pi)
    swaps: list[int] = []
    if strategy == "insertion":
        for k in range(1, len(arr)):
            j = k
            while j > 0 and arr[j - 1] > arr[j]:
                arr[j - 1], arr[j] = arr[j], arr[j - 1]
                swaps.append(j)
                j -= 1
    elif strategy == "bubble":
        while True:
            for j in range(1, len(arr)):
                if arr[j - 1] > arr[j]:
                    arr[j - 1], arr[j] = arr[j], arr[j - 1]
                    swaps.append(j)
                    break
            else:
                break
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return swaps


def permutation_braid(pi: Sequence[int], strategy: str = "insertion") -> BraidWord:
    """A minimal positive braid word whose underlying permutation is pi.

    The word length equals the inversion count of pi; any reduced word
    resolves to the same element, which the tests check by comparing the
    insertion-sort and bubble-sort strategies.
    """
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi!r} is not a permutation of 1..{n}")
    swaps = _sorting_swaps(pi, strategy)
    word = BraidWord(n, tuple(reversed(swaps)))
    assert braid_permutation(word) == tuple(pi)
    return word


def inversion_count(pi: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(pi)), 2) if pi[i] > pi[j])


# ---------------------------------------------------------------------------
# Slice words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cap:
    """Join strand positions p, p+1; width drops by two."""

    p: int


@dataclass(frozen=True)
class Cup:
    """Insert a new paired strand at positions p, p+1; width grows by two."""

    p: int


@dataclass(frozen=True)
class Crossing:
    """Strand position p crosses position p+1 with the given sign."""

    p: int
    sign: int = 1


@dataclass(frozen=True)
class InsertProjector:
    """Insert the k-strand Jones-Wenzl projector across positions p..p+k-1."""

    p: int
    k: int


@dataclass(frozen=True)
class InsertElement:
    """Compose an arbitrary square element across positions p..p+element.n-1."""

    p: int
    element: TLElement

    def __hash__(self):
        return hash((self.p, self.element.n, tuple(sorted((m.inv for m in self.element.terms)))))


Slice = Union[Cap, Cup, Crossing, InsertProjector, InsertElement]


def _slice_io(s: Slice) -> tuple[int, int, int]:
    """(position, strands consumed, strands produced) for a slice."""
    if isinstance(s, Cap):
        return s.p, 2, 0
    if isinstance(s, Cup):
        return s.p, 0, 2
    if isinstance(s, Crossing):
        return s.p, 2, 2
    if isinstance(s, InsertProjector):
        return s.p, s.k, s.k
    if isinstance(s, InsertElement):
        return s.p, s.element.n, s.element.n
    raise TypeError(f"not a slice: {s!r}")


@dataclass(frozen=True)
class SliceWord:
    """A composition of elementary slices with consistent widths."""

    initial_width: int
    slices: tuple[Slice, ...]

    def __post_init__(self):
        if self.initial_width < 0:
            raise ValueError("negative initial width")
        w = self.initial_width
        for s in self.slices:
            p, k_in, k_out = _slice_io(s)
            if isinstance(s, Crossing) and s.sign not in (1, -1):
                raise ValueError("crossing sign must be +1 or -1")
            limit = w + 1 if k_in == 0 else w - k_in + 1
            if not 1 <= p <= limit:
                raise ValueError(f"slice {s!r} does not fit at width {w}")
            w += k_out - k_in
        object.__setattr__(self, "_final_width", w)

    @property
    def final_width(self) -> int:
        return self._final_width  # type: ignore[attr-defined]


# ---------------------------------------------------------------------------
# Tangle gluing (asymmetric version of the TL product)
# ---------------------------------------------------------------------------


def glue_tangles(
    xinv: tuple[int, ...], nxl: int, yinv: tuple[int, ...], nyl: int
) -> tuple[tuple[int, ...], int]:
    """Glue tangle x (nxl -> wx) onto tangle y (nyl -> wy), wx = nyl.

    Boundary points of a tangle with l left and r right points are numbered
    0..l-1 down the left and l..l+r-1 up the right.  Returns the boundary
    involution of the composite (nxl -> wy) and the number of closed loops.
    """
    wx = len(xinv) - nxl
    wy = len(yinv) - nyl
    if wx != nyl:
        raise ValueError("interface widths differ")
    n_res = nxl + wy
    res = [-1] * n_res
    used = [False] * wx
    for start in range(n_res):
        if res[start] != -1:
            continue
        side, p = (0, start) if start < nxl else (1, nyl + start - nxl)
        while True:
            if side == 0:
                p = xinv[p]
                if p < nxl:
                    end = p
                    break
                used[p - nxl] = True
                side, p = 1, nxl + wx - 1 - p
            else:
                p = yinv[p]
                if p >= nyl:
                    end = nxl + p - nyl
                    break
                used[wx - 1 - p] = True
                side, p = 0, nxl + wx - 1 - p
        res[start], res[end] = end, start
    loops = 0
    for q0 in range(wx):
        if used[q0]:
            continue
        loops += 1
        q = q0
        while not used[q]:
            used[q] = True
            r = yinv[wx - 1 - q]
            used[wx - 1 - r] = True
            q = xinv[nxl + wx - 1 - r] - nxl
    return tuple(res), loops


@functools.cache
def _extended_sub(w: int, p: int, sub_inv: tuple[int, ...], k_in: int, k_out: int):
    """Embed a (k_in -> k_out) tangle at position p as a full (w -> w') tangle."""
    wp = w - k_in + k_out
    n_pts = w + wp
    inv = [-1] * n_pts
    for pos in range(1, p):
        a, b = pos - 1, n_pts - pos
        inv[a], inv[b] = b, a
    for pos in range(p + k_in, w + 1):
        rpos = pos - k_in + k_out
        a, b = pos - 1, n_pts - rpos
        inv[a], inv[b] = b, a

    def emap(s: int) -> int:
        if s < k_in:
            return p - 1 + s
        return n_pts - p - k_out + 1 + (s - k_in)

    for s, t in enumerate(sub_inv):
        inv[emap(s)] = emap(t)
    return tuple(inv)


_E_SUB = (1, 0, 3, 2)  # cap-cup smoothing on two strands
_CAP_SUB = (1, 0)
_CUP_SUB = (1, 0)


# ---------------------------------------------------------------------------
# Resolution
# ---------------------------------------------------------------------------


def resolve(word: Union[BraidWord, SliceWord]) -> TLElement:
    """Kauffman-bracket evaluation of a slice word as a TL element.

    Positive crossings resolve to A·1 + A^{-1}·e; negative crossings swap
    A and A^{-1}; inserted projectors are expanded term by term at
    resolution time.  The word must begin and end at the same width.
    """
    if isinstance(word, BraidWord):
        word = word.to_slices()
    n0 = word.initial_width
    if word.final_width != n0:
        raise ValueError(
            f"slice word maps width {n0} to {word.final_width}; not a square element"
        )
    d = loop_value()
    a_pos = RationalFn(LaurentPoly.monomial(1))
    a_neg = RationalFn(LaurentPoly.monomial(-1))
    ident = tuple(2 * n0 - 1 - i for i in range(2 * n0))
    states: dict[tuple[int, ...], RationalFn] = {ident: RationalFn.one()}
    w = n0

    def apply_sub(
        src: dict, sub_inv: tuple[int, ...], p: int, k_in: int, k_out: int, scale
    ) -> None:
        ext = _extended_sub(w, p, sub_inv, k_in, k_out)
        for inv, c in src.items():
            res, loops = glue_tangles(inv, n0, ext, w)
            val = c * scale
            if loops:
                val = val * d**loops
            prev = new_states.get(res)
            new_states[res] = val if prev is None else prev + val

    for s in word.slices:
        p, k_in, k_out = _slice_io(s)
        new_states: dict[tuple[int, ...], RationalFn] = {}
        if isinstance(s, Crossing):
            over, under = (a_pos, a_neg) if s.sign > 0 else (a_neg, a_pos)
            ext = _extended_sub(w, p, _E_SUB, 2, 2)
            for inv, c in states.items():
                prev = new_states.get(inv)
                straight = c * over
                new_states[inv] = straight if prev is None else prev + straight
                res, loops = glue_tangles(inv, n0, ext, w)
                val = c * under
                if loops:
                    val = val * d**loops
                prev = new_states.get(res)
                new_states[res] = val if prev is None else prev + val
        elif isinstance(s, Cap):
            apply_sub(states, _CAP_SUB, p, 2, 0, RationalFn.one())
        elif isinstance(s, Cup):
            apply_sub(states, _CUP_SUB, p, 0, 2, RationalFn.one())
        elif isinstance(s, InsertProjector):
            for m, c in jones_wenzl(s.k).terms.items():
                apply_sub(states, m.inv, p, s.k, s.k, c)
        elif isinstance(s, InsertElement):
            k = s.element.n
            for m, c in s.element.terms.items():
                apply_sub(states, m.inv, p, k, k, c)
        else:
            raise TypeError(f"not a slice: {s!r}")
        states = {inv: c for inv, c in new_states.items() if not c.is_zero()}
        w += k_out - k_in

    return TLElement(n0, {Matching(n0, inv): c for inv, c in states.items()})


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------


@functools.cache
def jones_wenzl(n: int) -> TLElement:
    """The n-th Jones-Wenzl projector over Q(A), by Wenzl's recursion."""
    if n < 1:
        raise ValueError("projectors are defined for n >= 1")
    if n == 1:
        return TLElement.identity(1)
    g = jones_wenzl(n - 1).add_strands_below()
    e = TLElement.e(n, n - 1)
    ratio = RationalFn(delta(n - 2), delta(n - 1))
    return g - (g * e * g).scaled(ratio)


def jones_wenzl_constructive(n: int) -> TLElement:
    """The n-th projector as the normalized braid symmetrizer.

    Sums (A^3)^{|π|} · resolve(b_π) over all permutations π and divides by
    the quantum factorial [n]!.  Exponential in n; practical for n <= 6.
    """
    if n < 1:
        raise ValueError("projectors are defined for n >= 1")
    total = TLElement.zero(n)
    for pi in itertools.permutations(range(1, n + 1)):
        word = permutation_braid(pi)
        weight = LaurentPoly.monomial(3 * len(word.letters))
        total = total + resolve(word).scaled(weight)
    return total.scaled(RationalFn(1, quantum_factorial(n)))


# ---------------------------------------------------------------------------
# Partial trace
# ---------------------------------------------------------------------------


def _close_innermost(inv: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Close boundary points n-1, n (0-based) of a square matching with an arc."""
    N = len(inv)
    n = N // 2
    i, j = n - 1, n
    loops = 0
    new_pairs: list[tuple[int, int]] = []
    if inv[i] == j:
        loops = 1
    else:
        new_pairs.append((inv[i], inv[j]))
    for a in range(N):
        b = inv[a]
        if a in (i, j) or b in (i, j) or b < a:
            continue
        new_pairs.append((a, b))
    out = [-1] * (N - 2)
    for a, b in new_pairs:
        a2 = a if a < i else a - 2
        b2 = b if b < i else b - 2
        out[a2], out[b2] = b2, a2
    return tuple(out), loops


def partial_trace_top(x: TLElement) -> TLElement:
    """Close the innermost left-right boundary pair (points n and n+1).

    Every closed loop contributes d; the result lives on n-1 strands.
    """
    n = x.n
    if n < 1:
        raise ValueError("cannot trace an element on zero strands")
    d = loop_value()
    acc: dict[Matching, RationalFn] = {}
    for m, c in x.terms.items():
        inv, loops = _close_innermost(m.inv)
        if loops:
            c = c * d
        res = Matching(n - 1, inv)
        prev = acc.get(res)
        acc[res] = c if prev is None else prev + c
    return TLElement(n - 1, acc)


# ---------------------------------------------------------------------------
# Encircling
# ---------------------------------------------------------------------------


def encircle(a: int, x: TLElement) -> TLElement:
    """Encircle the strands of x by an unknotted loop cabled by f_a.

    Builds the slice word for an a-strand cable (with the a-th projector
    inserted) passing around the b strands of x, resolves all 2ab
    crossings and evaluates.  encircle(a, f_b) = varsigma(a, b) · f_b.
    """
    if a < 0:
        raise ValueError("cable size must be nonnegative")
    if a == 0:
        return x
    b = x.n
    slices: list[Slice] = [InsertElement(1, x)]
    for j in range(1, a + 1):
        slices.append(Cup(j))
    slices.append(InsertProjector(1, a))
    for i in range(a):
        start = 2 * a - i
        for q in range(start, start + b):
            slices.append(Crossing(q, 1))
    for i in range(a):
        for q in range(a + b + i, a + i, -1):
            slices.append(Crossing(q, -1))
    for p in range(a, 0, -1):
        slices.append(Cap(p))
    return resolve(SliceWord(b, tuple(slices)))
