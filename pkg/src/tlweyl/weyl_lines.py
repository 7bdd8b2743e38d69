"""
Weyl lines of type A_n as bipartitions, and unions of them as bit masks.

A Weyl line is identified with an unordered bipartition of the letters
1..n+1 into two nonempty parts. Canonically the part containing the letter 1
is ``part_one``; the line is then fixed by ``part_two``, a nonempty subset of
2..n+1. Line number ``k`` (0-based) has ``part_two`` with bit mask
``(k + 1) << 1`` over letters, so there are ``2**n - 1`` lines.

A :class:`LineSet` is a boolean membership vector over those lines. The only
geometric fact used is that a line is transverse to the reflection (a, b)
exactly when its bipartition separates a and b. Everything else (the action
of the symmetric group, the operation ``s_i . W``, the sets ``T_W``) is set
algebra on top of that.

This module is deliberately brute force: it serves as the oracle against
which the dense-set calculus is checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .coxeter import MAX_RANK, Permutation, Reflection, Word, check_rank, check_word
from .errors import InputError


@dataclass(frozen=True, order=True)
class WeylLine:
    part_one: frozenset[int]
    part_two: frozenset[int]

    def __post_init__(self):
        if not self.part_one or not self.part_two or self.part_one & self.part_two:
            raise InputError("a Weyl line needs two disjoint nonempty parts")
        if 1 not in self.part_one:
            raise InputError("part_one must contain the letter 1")

    @classmethod
    def from_parts(cls, a: Iterable[int], b: Iterable[int]) -> "WeylLine":
        a, b = frozenset(a), frozenset(b)
        return cls(a, b) if 1 in a else cls(b, a)

    @property
    def n(self) -> int:
        return len(self.part_one) + len(self.part_two) - 1

    def separates(self, a: int, b: int) -> bool:
        return (a in self.part_one) != (b in self.part_one)

    def __str__(self) -> str:
        fmt = lambda s: "".join(map(str, sorted(s))) if max(s) < 10 else ",".join(map(str, sorted(s)))
        return f"{fmt(self.part_two)}|{fmt(self.part_one)}" if len(self.part_two) < len(self.part_one) else f"{fmt(self.part_one)}|{fmt(self.part_two)}"


def _line_mask(index: int) -> int:
    return (index + 1) << 1


def line_at(index: int, n: int) -> WeylLine:
    mask = _line_mask(index)
    two = frozenset(a for a in range(1, n + 2) if mask >> (a - 1) & 1)
    return WeylLine(frozenset(range(1, n + 2)) - two, two)


def line_index(line: WeylLine) -> int:
    mask = sum(1 << (a - 1) for a in line.part_two)
    return (mask >> 1) - 1


@lru_cache(maxsize=None)
def _letter_bits(n: int) -> np.ndarray:
    """``bits[k, a-1]`` is True when letter a lies in part_two of line k."""
    masks = np.arange(1, 2**n, dtype=np.int64) << 1
    return ((masks[:, None] >> np.arange(n + 1)) & 1).astype(bool)


class LineSet:
    """A set of Weyl lines of rank ``n``, stored as a boolean vector."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (2**n - 1,):
            raise InputError(f"mask must have {2**n - 1} entries for rank {n}")
        self.n = n
        self.mask = mask
        self.mask.setflags(write=False)

    @classmethod
    def from_lines(cls, lines: Iterable[WeylLine], n: int) -> "LineSet":
        mask = np.zeros(2**n - 1, dtype=bool)
        for line in lines:
            if line.n != n:
                raise InputError("line of the wrong rank")
            mask[line_index(line)] = True
        return cls(n, mask)

    def lines(self) -> list[WeylLine]:
        return [line_at(int(k), self.n) for k in np.flatnonzero(self.mask)]

    def _check(self, other: "LineSet") -> None:
        if not isinstance(other, LineSet) or other.n != self.n:
            raise InputError("line sets of different ranks")

    def __and__(self, other: "LineSet") -> "LineSet":
        self._check(other)
        return LineSet(self.n, self.mask & other.mask)

    def __or__(self, other: "LineSet") -> "LineSet":
        self._check(other)
        return LineSet(self.n, self.mask | other.mask)

    def __sub__(self, other: "LineSet") -> "LineSet":
        self._check(other)
        return LineSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "LineSet") -> bool:
        self._check(other)
        return not np.any(self.mask & ~other.mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, LineSet) and other.n == self.n and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash((self.n, self.mask.tobytes()))

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __bool__(self) -> bool:
        return bool(self.mask.any())

    def __contains__(self, line: WeylLine) -> bool:
        return line.n == self.n and bool(self.mask[line_index(line)])

    def __iter__(self):
        return iter(self.lines())

    def __repr__(self) -> str:
        return f"LineSet(n={self.n}, {{{', '.join(map(str, self.lines()))}}})"


def all_lines(n: int) -> LineSet:
    check_rank(n, MAX_RANK)
    return LineSet(n, np.ones(2**n - 1, dtype=bool))


def _check_reflection(t: Reflection, n: int) -> tuple[int, int]:
    a, b = t
    if not (isinstance(a, int) and isinstance(b, int) and 1 <= a < b <= n + 1):
        raise InputError(f"{t!r} is not a reflection (a, b) with 1 <= a < b <= {n + 1}")
    return a, b


@lru_cache(maxsize=None)
def _transverse_mask(t: Reflection, n: int) -> np.ndarray:
    bits = _letter_bits(n)
    mask = bits[:, t[0] - 1] != bits[:, t[1] - 1]
    mask.setflags(write=False)
    return mask


def transverse_lines(t: Reflection, n: int) -> LineSet:
    """V_t: lines whose bipartition separates the two letters of ``t``."""
    check_rank(n, MAX_RANK)
    return LineSet(n, _transverse_mask(_check_reflection(t, n), n))


def hyperplane_lines(t: Reflection, n: int) -> LineSet:
    """Lines lying in the reflecting hyperplane of ``t``."""
    check_rank(n, MAX_RANK)
    return LineSet(n, ~_transverse_mask(_check_reflection(t, n), n))


def simple_transverse(i: int, n: int) -> LineSet:
    """V_i, shorthand for the lines transverse to s_i."""
    return transverse_lines((i, i + 1), n)


def line_permutation(g: Permutation) -> np.ndarray:
    """Index map ``perm`` with ``act(g, S).mask == S.mask[perm]``."""
    n = len(g) - 1
    bits = _letter_bits(n)
    # line k is sent to the line whose part_two is g(part_two of k), up to complement
    images = np.zeros_like(bits)
    images[:, np.asarray(g) - 1] = bits
    flip = images[:, 0]
    images[flip] = ~images[flip]
    dest = (images.astype(np.int64) << np.arange(n + 1)).sum(axis=1) >> 1
    dest -= 1
    perm = np.empty(len(dest), dtype=np.int64)
    perm[dest] = np.arange(len(dest))
    return perm


def act(g: Permutation, lines: LineSet) -> LineSet:
    """Apply ``g`` letterwise to every bipartition of ``lines``."""
    if len(g) != lines.n + 1:
        raise InputError("permutation and line set have different ranks")
    return LineSet(lines.n, lines.mask[line_permutation(tuple(g))])


@lru_cache(maxsize=None)
def _simple_line_permutation(i: int, n: int) -> np.ndarray:
    g = list(range(1, n + 2))
    g[i - 1], g[i] = g[i], g[i - 1]
    perm = line_permutation(tuple(g))
    perm.setflags(write=False)
    return perm


def dot_extend(i: int, lines: LineSet) -> LineSet:
    """``s_i . W``, that is V_i intersected with the union of W and s_i W."""
    n = lines.n
    check_word((i,), n)
    mask = _transverse_mask((i, i + 1), n) & (lines.mask | lines.mask[_simple_line_permutation(i, n)])
    return LineSet(n, mask)


def sequence_variety(seq: Iterable[int], n: int | None = None) -> LineSet:
    """The variety of a sequence, built from its last letter leftwards."""
    seq = tuple(seq)
    if not seq:
        raise InputError("the variety of an empty sequence is undefined")
    n = max(seq) if n is None else n
    check_rank(n, MAX_RANK)
    seq = check_word(seq, n)
    w = simple_transverse(seq[-1], n)
    for i in reversed(seq[:-1]):
        w = dot_extend(i, w)
    return w


@lru_cache(maxsize=None)
def all_reflections(n: int) -> tuple[Reflection, ...]:
    return tuple(combinations(range(1, n + 2), 2))


@lru_cache(maxsize=None)
def _reflection_matrix(n: int) -> np.ndarray:
    """Row r is the complement of V_t for the r-th reflection, as int8."""
    return np.array([~_transverse_mask(t, n) for t in all_reflections(n)], dtype=np.int8)


def reflections_of(lines: LineSet) -> frozenset[Reflection]:
    """All reflections t with ``lines`` contained in V_t."""
    if not lines:
        raise InputError("T_W is undefined for the empty variety")
    n = lines.n
    return frozenset(t for t in all_reflections(n) if not np.any(lines.mask & ~_transverse_mask(t, n)))


def reflections_of_batch(masks: np.ndarray, n: int) -> np.ndarray:
    """Vectorised :func:`reflections_of` over rows of a boolean array.

    Returns a boolean array of shape ``(rows, number of reflections)`` in the
    order of :func:`all_reflections`.
    """
    outside = masks.astype(np.int8) @ _reflection_matrix(n).T
    return outside == 0


def dot_extend_batch(i: int, masks: np.ndarray, n: int) -> np.ndarray:
    """Row-wise :func:`dot_extend` for a boolean array of line masks."""
    return _transverse_mask((i, i + 1), n) & (masks | masks[:, _simple_line_permutation(i, n)])


def intersect_transverse(reflections: Iterable[Reflection], n: int) -> LineSet:
    """Intersection of the V_t over ``reflections`` (all lines if empty)."""
    mask = np.ones(2**n - 1, dtype=bool)
    for t in reflections:
        mask &= _transverse_mask(_check_reflection(t, n), n)
    return LineSet(n, mask)


def is_stable(g: Permutation, lines: LineSet) -> bool:
    return act(g, lines) == lines


def sequence_varieties(length: int, n: int) -> dict[Word, LineSet]:
    """Every sequence variety for words of exactly ``length`` letters over [1, n]."""
    check_rank(n, MAX_RANK)
    out: dict[Word, LineSet] = {}
    layer = {(i,): simple_transverse(i, n) for i in range(1, n + 1)}
    for _ in range(length - 1):
        layer = {(i,) + w: dot_extend(i, v) for w, v in layer.items() for i in range(1, n + 1)}
    out.update(layer)
    return out
