"""
Calculus on sets of pairwise commuting reflections.

A reflection set is a frozenset of pairs ``(a, b)``, ``a < b``, with pairwise
disjoint supports. Prepending a simple index ``i`` to a sequence changes its
set by :func:`update`:

1. s_i commutes with every member: add s_i;
2. exactly one member t does not commute with s_i: replace t by s_i;
3. two members t, t' do not commute with s_i: replace them by s_i and the
   conjugate t t' s_i t' t.

>>> sorted(dense_of_sequence((2, 1, 3)))
[(1, 4), (2, 3)]
>>> dense_to_sequence({(1, 4), (2, 3)})
(2, 1, 3)
"""
from __future__ import annotations

from functools import reduce
from itertools import combinations
from typing import Iterable

import numpy as np

from .coxeter import Reflection, Word, check_rank, compose, reflection
from .errors import DomainError, InputError

DENSE_ENUMERATION_CAP = 8


class ReflectionSet(frozenset):
    """A frozenset of pairwise commuting reflections ``(a, b)`` with ``a < b``."""

    def __new__(cls, members: Iterable[Iterable[int]] = ()):
        pairs = []
        for t in members:
            a, b = t
            if not (isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer))) or a < 1 or b < 1:
                raise InputError(f"{t!r} is not a reflection")
            pairs.append(reflection(int(a), int(b)))
        support: set[int] = set()
        for a, b in set(pairs):
            if a in support or b in support:
                raise InputError(f"reflections are not pairwise commuting: {sorted(set(pairs))}")
            support.update((a, b))
        return super().__new__(cls, pairs)

    def sorted(self) -> list[Reflection]:
        return sorted(self)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for t in self for x in t)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.sorted()})"


def is_noncrossing(q: Iterable[Reflection]) -> bool:
    q = sorted(ReflectionSet(q))
    return not any(a < c < b < d or c < a < d < b for (a, b), (c, d) in combinations(q, 2))


def blocks(q: Iterable[Reflection]) -> list[tuple[int, int]] | None:
    """Block intervals of a dense set, left to right, or ``None`` if not dense.

    The blocks are the outermost arcs; the set is dense when it is
    noncrossing and its support fills each outer arc's interval.
    """
    q = ReflectionSet(q)
    if not q or not is_noncrossing(q):
        return None
    outer = [(a, b) for a, b in q if not any(c < a and b < d for c, d in q)]
    outer.sort()
    covered = {x for a, b in outer for x in range(a, b + 1)}
    if covered != q.support:
        return None
    return outer


def is_dense(q: Iterable[Reflection]) -> bool:
    return blocks(q) is not None


class DenseSet(ReflectionSet):
    """A dense reflection set; construction fails on non-dense input."""

    def __new__(cls, members: Iterable[Iterable[int]] = ()):
        self = super().__new__(cls, members)
        if blocks(self) is None:
            raise InputError(f"{sorted(self)} is not dense")
        return self

    @property
    def blocks(self) -> list[tuple[int, int]]:
        return blocks(self)


def _as_permutation(t: Reflection, size: int) -> tuple[int, ...]:
    p = list(range(1, size + 1))
    p[t[0] - 1], p[t[1] - 1] = p[t[1] - 1], p[t[0] - 1]
    return tuple(p)


def _conjugate(t: Reflection, t2: Reflection, s: Reflection) -> Reflection:
    """The transposition t t2 s t2 t, computed by composing permutations."""
    size = max(t + t2 + s)
    perms = [_as_permutation(x, size) for x in (t, t2, s, t2, t)]
    prod = reduce(compose, perms)
    moved = [k + 1 for k in range(size) if prod[k] != k + 1]
    if len(moved) != 2:
        raise AssertionError(f"conjugate of a reflection is not a reflection: {prod}")
    return reflection(*moved)


def update(q: Iterable[Reflection], i: int) -> ReflectionSet:
    """The reflection set of ``i`` prepended to a sequence whose set is ``q``."""
    q = ReflectionSet(q)
    if not isinstance(i, int) or i < 1:
        raise InputError(f"simple index must be a positive integer, got {i!r}")
    s = (i, i + 1)
    bad = [t for t in q if not (t == s or not (set(t) & set(s)))]
    if len(bad) > 2:
        raise AssertionError("more than two members of a commuting set fail to commute with s_i")
    if not bad:
        return ReflectionSet(q | {s})
    if len(bad) == 1:
        return ReflectionSet((q - set(bad)) | {s})
    t, t2 = bad
    return ReflectionSet((q - set(bad)) | {s, _conjugate(t, t2, s)})


def dense_of_sequence(seq: Iterable[int]) -> DenseSet:
    """Fold :func:`update` over ``seq`` from its last letter to its first."""
    seq = tuple(seq)
    if not seq:
        raise InputError("the dense set of an empty sequence is undefined")
    q = ReflectionSet()
    for i in reversed(seq):
        q = update(q, i)
    return DenseSet(q)


def dense_to_sequence(q: Iterable[Reflection]) -> Word:
    """A sequence whose dense set is ``q``, one block at a time from the left.

    A block [m, j] is built by first building the dense set left after
    removing the arc (m, j), then appending the letters m, m+2, ..., j-1.
    """
    q = ReflectionSet(q)
    found = blocks(q)
    if found is None:
        raise DomainError(f"{sorted(q)} is not dense")
    word: list[int] = []
    for m, j in found:
        word.extend(_block_sequence(q, m, j))
    return tuple(word)


def _block_sequence(q: ReflectionSet, m: int, j: int) -> list[int]:
    if j == m + 1:
        return [m]
    inner = [t for t in q if m < t[0] and t[1] < j]
    head = []
    for a, b in blocks(inner):
        head.extend(_block_sequence(q, a, b))
    return head + list(range(m, j, 2))


def enumerate_dense_sets(n: int, cap: int = DENSE_ENUMERATION_CAP) -> list[DenseSet]:
    """All dense sets for rank ``n``, by filtering every commuting set."""
    check_rank(n, cap)
    out = [DenseSet(q) for q in commuting_sets(n) if q and is_dense(q)]
    out.sort(key=lambda q: (len(q), q.sorted()))
    return out


def commuting_sets(n: int) -> list[ReflectionSet]:
    """Every set of pairwise commuting reflections, i.e. every partial matching of 1..n+1."""
    letters = list(range(1, n + 2))
    out: list[ReflectionSet] = []

    def rec(rest: list[int], acc: list[Reflection]) -> None:
        if not rest:
            out.append(ReflectionSet(acc))
            return
        first, tail = rest[0], rest[1:]
        rec(tail, acc)
        for k, other in enumerate(tail):
            rec(tail[:k] + tail[k + 1:], acc + [(first, other)])

    rec(letters, [])
    return out


def to_partner(q: Iterable[Reflection], n: int) -> np.ndarray:
    """0-based partner array of length n+1 with -1 off the support."""
    arr = np.full(n + 1, -1, dtype=np.int16)
    for a, b in q:
        arr[a - 1] = b - 1
        arr[b - 1] = a - 1
    return arr


def from_partner(arr) -> ReflectionSet:
    return ReflectionSet((k + 1, int(v) + 1) for k, v in enumerate(arr) if v > k)
