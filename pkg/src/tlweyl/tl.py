"""
The Temperley-Lieb algebra TL_n over Z[tau, tau^-1] as a diagram algebra.

A diagram on ``m = n + 1`` strands is a planar perfect matching of the top
points T_1..T_m and bottom points B_1..B_m. Internally point T_k is ``k-1``
and B_k is ``m+k-1``; :attr:`TLDiagram.partner` maps each point to the one it
is joined to. In a product ``x * y`` the diagram of ``x`` is drawn on top and
every closed loop is replaced by the scalar 1 + tau^-2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .coxeter import (
    MAX_RANK,
    Permutation,
    Reflection,
    check_permutation,
    check_rank,
    check_word,
    is_fully_commutative,
    lex_min_reduced_word,
    rank_of,
)
from .dense import ReflectionSet
from .errors import DomainError, InputError
from .laurent import DELTA, LaurentPoly, Scalar

Point = tuple[str, int]


def _circle_position(p: int, m: int) -> int:
    # reading the top row left to right, then the bottom row right to left
    return p if p < m else 3 * m - 1 - p


def _is_planar(partner: tuple[int, ...], m: int) -> bool:
    arcs = []
    for p, q in enumerate(partner):
        if p < q:
            a, b = sorted((_circle_position(p, m), _circle_position(q, m)))
            arcs.append((a, b))
    arcs.sort()
    stack: list[int] = []
    for a, b in arcs:
        while stack and stack[-1] < a:
            stack.pop()
        if stack and stack[-1] < b:
            return False
        stack.append(b)
    return True


@dataclass(frozen=True)
class TLDiagram:
    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        m = self.n + 1
        p = self.partner
        if len(p) != 2 * m:
            raise InputError(f"a rank {self.n} diagram has {2 * m} points")
        for k, v in enumerate(p):
            if not 0 <= v < 2 * m or v == k or p[v] != k:
                raise InputError("partner map is not a fixed-point-free involution")
        if not _is_planar(p, m):
            raise InputError("diagram arcs cross")

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[Point, Point]], n: int) -> "TLDiagram":
        """Build from arcs like ``(("T", 1), ("B", 2))``."""
        m = n + 1
        partner = [-1] * (2 * m)

        def index(pt: Point) -> int:
            side, k = pt
            if side not in ("T", "B") or not 1 <= k <= m:
                raise InputError(f"bad point {pt!r}")
            return k - 1 if side == "T" else m + k - 1

        for x, y in arcs:
            a, b = index(x), index(y)
            if partner[a] != -1 or partner[b] != -1:
                raise InputError("a point is used twice")
            partner[a], partner[b] = b, a
        return cls(n, tuple(partner))

    @property
    def m(self) -> int:
        return self.n + 1

    def label(self, p: int) -> Point:
        return ("T", p + 1) if p < self.m else ("B", p - self.m + 1)

    def arcs(self) -> list[tuple[Point, Point]]:
        """Arcs in canonical order: by smallest endpoint, top before bottom."""
        return [(self.label(p), self.label(q)) for p, q in enumerate(self.partner) if p < q]

    def top_arcs(self) -> ReflectionSet:
        m = self.m
        return ReflectionSet((p + 1, q + 1) for p, q in enumerate(self.partner) if p < q < m)

    def bottom_arcs(self) -> ReflectionSet:
        m = self.m
        return ReflectionSet((p - m + 1, q - m + 1) for p, q in enumerate(self.partner) if m <= p < q)

    def through_strands(self) -> list[tuple[int, int]]:
        """Pairs (top index, bottom index), 1-based."""
        m = self.m
        return [(p + 1, q - m + 1) for p, q in enumerate(self.partner[:m]) if q >= m]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.partner, dtype=_kernels.INDEX_DTYPE)

    def __str__(self) -> str:
        return ", ".join(f"{a[0]}{a[1]}-{b[0]}{b[1]}" for a, b in self.arcs())


def _trusted(n: int, partner) -> TLDiagram:
    d = object.__new__(TLDiagram)
    object.__setattr__(d, "n", n)
    object.__setattr__(d, "partner", tuple(int(v) for v in partner))
    return d


def identity_diagram(n: int) -> TLDiagram:
    check_rank(n, MAX_RANK)
    m = n + 1
    return _trusted(n, [p + m for p in range(m)] + list(range(m)))


def generator_diagram(i: int, n: int) -> TLDiagram:
    """The diagram of b_i: cup and cap between i and i+1, verticals elsewhere."""
    check_rank(n, MAX_RANK)
    check_word((i,), n)
    m = n + 1
    partner = list(identity_diagram(n).partner)
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    partner[m + a], partner[m + b] = m + b, m + a
    return _trusted(n, partner)


@lru_cache(maxsize=None)
def _generator_array(i: int, n: int) -> np.ndarray:
    arr = generator_diagram(i, n).as_array()
    arr.setflags(write=False)
    return arr


def multiply_diagrams(top: TLDiagram, bottom: TLDiagram) -> tuple[int, TLDiagram]:
    """Stack ``top`` over ``bottom``; return (number of loops, reduced diagram)."""
    if top.n != bottom.n:
        raise InputError("diagrams of different ranks")
    loops, out = _kernels.compose_batch(top.as_array()[None, :], bottom.as_array()[None, :])
    return int(loops[0]), _trusted(top.n, out[0])


def word_diagram(word: Iterable[int], n: int) -> tuple[int, TLDiagram]:
    """Loops and diagram of the product b_{i1} ... b_{ik}."""
    check_rank(n, MAX_RANK)
    word = check_word(word, n)
    current = identity_diagram(n).as_array()[None, :]
    loops = 0
    for i in reversed(word):
        k, current = _kernels.compose_batch(_generator_array(i, n)[None, :], current)
        loops += int(k[0])
    return loops, _trusted(n, current[0])


class TLElement:
    """A Z[tau, tau^-1]-linear combination of diagrams of a fixed rank."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[TLDiagram, Scalar] | None = None):
        self.n = n
        clean: dict[TLDiagram, LaurentPoly] = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise InputError("diagram of the wrong rank")
            c = LaurentPoly.coerce(c)
            if c:
                clean[d] = c
        self._terms = dict(sorted(clean.items(), key=lambda kv: kv[0].partner))

    @classmethod
    def from_diagram(cls, d: TLDiagram, coeff: Scalar = 1) -> "TLElement":
        return cls(d.n, {d: coeff})

    @classmethod
    def generator(cls, i: int, n: int) -> "TLElement":
        return cls.from_diagram(generator_diagram(i, n))

    @classmethod
    def one(cls, n: int) -> "TLElement":
        return cls.from_diagram(identity_diagram(n))

    @classmethod
    def zero(cls, n: int) -> "TLElement":
        return cls(n)

    @property
    def terms(self) -> dict[TLDiagram, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[TLDiagram]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _same_rank(self, other: "TLElement") -> None:
        if other.n != self.n:
            raise InputError("elements of different ranks")

    def __add__(self, other: "TLElement") -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        self._same_rank(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, LaurentPoly()) + c
        return TLElement(self.n, out)

    def __neg__(self) -> "TLElement":
        return TLElement(self.n, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TLElement":
        if isinstance(other, TLElement):
            return multiply(self, other)
        try:
            c = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return TLElement(self.n, {d: v * c for d, v in self._terms.items()})

    def __rmul__(self, other) -> "TLElement":
        try:
            c = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return TLElement(self.n, {d: c * v for d, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and other.n == self.n and other._terms == self._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"TLElement(n={self.n}, 0)"
        body = " + ".join(f"({c})[{d}]" for d, c in self._terms.items())
        return f"TLElement(n={self.n}, {body})"


def multiply(x: TLElement, y: TLElement) -> TLElement:
    """Bilinear product; each loop contributes a factor 1 + tau^-2."""
    x._same_rank(y)
    out: dict[TLDiagram, LaurentPoly] = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            k, d = multiply_diagrams(d1, d2)
            out[d] = out.get(d, LaurentPoly()) + c1 * c2 * DELTA**k
    return TLElement(x.n, out)


def word_element(word: Iterable[int], n: int) -> TLElement:
    """The element b_{i1} ... b_{ik}; the empty word gives the unit."""
    k, d = word_diagram(word, n)
    return TLElement.from_diagram(d, DELTA**k)


def kl_basis_of_fc(p: Permutation) -> TLDiagram:
    """The diagram of the Kazhdan-Lusztig basis element b_p."""
    p = check_permutation(p)
    if not is_fully_commutative(p):
        raise DomainError(f"{p!r} is not fully commutative")
    return _kl_diagram(p)


@lru_cache(maxsize=None)
def _kl_diagram(p: Permutation) -> TLDiagram:
    loops, d = word_diagram(lex_min_reduced_word(p), rank_of(p))
    if loops:
        raise AssertionError(f"reduced word of a fully commutative element produced {loops} loops")
    return d


def boundary_arcs(d: TLDiagram) -> tuple[ReflectionSet, ReflectionSet]:
    """(top arcs, bottom arcs) read as reflections; through-strands dropped."""
    return d.top_arcs(), d.bottom_arcs()


def enumerate_diagrams(n: int) -> list[TLDiagram]:
    """All planar diagrams of rank ``n``, sorted by partner tuple."""
    check_rank(n, MAX_RANK)
    return list(_all_diagrams(n))


@lru_cache(maxsize=None)
def _all_diagrams(n: int) -> tuple[TLDiagram, ...]:
    m = n + 1
    # noncrossing perfect matchings of circle positions 0..2m-1
    at_position = [p if p < m else 3 * m - 1 - p for p in range(2 * m)]

    @lru_cache(maxsize=None)
    def matchings(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        if lo > hi:
            return ((),)
        out = []
        for mid in range(lo + 1, hi + 1, 2):
            for inner in matchings(lo + 1, mid - 1):
                for outer in matchings(mid + 1, hi):
                    out.append(((lo, mid),) + inner + outer)
        return tuple(out)

    found = []
    for arcs in matchings(0, 2 * m - 1):
        partner = [0] * (2 * m)
        for a, b in arcs:
            pa, pb = at_position[a], at_position[b]
            partner[pa], partner[pb] = pb, pa
        found.append(tuple(partner))
    found.sort()
    return tuple(_trusted(n, p) for p in found)


@lru_cache(maxsize=None)
def diagram_index(n: int) -> dict[TLDiagram, Permutation]:
    """Map every basis diagram back to its fully commutative element."""
    from .coxeter import enumerate_fully_commutative

    return {kl_basis_of_fc(p): p for p in enumerate_fully_commutative(n)}


def element_of_diagram(d: TLDiagram) -> Permutation:
    return diagram_index(d.n)[d]


def arcs_as_pairs(q: Iterable[Reflection]) -> list[list[int]]:
    return [list(t) for t in sorted(q)]
