"""
Type A Coxeter combinatorics on the symmetric group S_{n+1}.

Conventions:

- A *rank* ``n`` means type A_n; permutations act on the letters 1..n+1.
- A *permutation* is a tuple in one-line notation, ``p[k-1] = p(k)``.
- A *word* is a tuple of simple indices in [1, n]; letter ``i`` stands for
  the simple transposition s_i = (i, i+1).
- A *reflection* is a pair ``(a, b)`` with ``a < b``, the transposition (a, b).

Words are evaluated left to right: ``word_to_permutation((i1, ..., ik), n)``
is the one-line notation of the product s_{i1} s_{i2} ... s_{ik}, so right
multiplication by s_i swaps the entries in positions i and i+1.

>>> word_to_permutation((1,), 2)
(2, 1, 3)
>>> is_fully_commutative(word_to_permutation((1, 2, 1), 2))
False
>>> len(enumerate_fully_commutative(4))
42
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DomainError, InputError

MAX_RANK = 12

Permutation = tuple[int, ...]
Word = tuple[int, ...]
Reflection = tuple[int, int]


def check_rank(n: int, cap: int = MAX_RANK) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"rank must be a positive integer, got {n!r}")
    if n > cap:
        raise CapacityError(f"rank {n} exceeds the cap {cap}")
    return n


def check_word(w: Iterable[int], n: int) -> Word:
    w = tuple(w)
    for letter in w:
        if not isinstance(letter, int) or isinstance(letter, bool) or not 1 <= letter <= n:
            raise InputError(f"letter {letter!r} out of range [1, {n}]")
    return w


def check_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(p)
    if len(p) < 2 or sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"{p!r} is not a permutation of 1..{len(p)} with at least two letters")
    return p


def rank_of(p: Permutation) -> int:
    return len(p) - 1


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 2))


def reflection(a: int, b: int) -> Reflection:
    """Canonical form of the transposition exchanging ``a`` and ``b``."""
    if a == b:
        raise InputError("a reflection needs two distinct letters")
    return (a, b) if a < b else (b, a)


def commute(t: Reflection, u: Reflection) -> bool:
    """Two transpositions commute iff they are equal or have disjoint supports."""
    return t == u or not (set(t) & set(u))


def word_to_permutation(w: Iterable[int], n: int) -> Permutation:
    check_rank(n)
    w = check_word(w, n)
    p = list(range(1, n + 2))
    for i in w:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``p q`` as functions, ``(p q)(k) = p(q(k))``."""
    return tuple(p[q[k] - 1] for k in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for k, v in enumerate(p, start=1):
        inv[v - 1] = k
    return tuple(inv)


def length(p: Permutation) -> int:
    """Coxeter length, i.e. the number of inversions."""
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def is_reduced(w: Iterable[int], n: int) -> bool:
    w = check_word(w, n)
    return len(w) == length(word_to_permutation(w, n))


def right_descents(p: Permutation) -> list[int]:
    """Indices ``i`` with ``l(p s_i) < l(p)``."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def left_descents(p: Permutation) -> list[int]:
    """Indices ``i`` with ``l(s_i p) < l(p)``: value i+1 sits left of value i."""
    return right_descents(inverse(p))


def is_fully_commutative(p: Sequence[int]) -> bool:
    """321-avoidance test in one-line notation.

    An entry is the middle of a 321 pattern iff something larger sits to
    its left and something smaller to its right.
    """
    p = check_permutation(p)
    suffix_min = list(p)
    for k in range(len(p) - 2, -1, -1):
        suffix_min[k] = min(p[k], suffix_min[k + 1])
    prefix_max = p[0]
    for k in range(1, len(p) - 1):
        if prefix_max > p[k] > suffix_min[k + 1]:
            return False
        prefix_max = max(prefix_max, p[k])
    return True


def commutation_class(w: Iterable[int]) -> set[Word]:
    """All words reachable from ``w`` by swapping adjacent distant letters."""
    w = tuple(w)
    if not w:
        return {()}
    n = max(w)
    if min(w) < 1:
        raise InputError(f"letters must be positive, got {w!r}")
    if not is_reduced(w, max(n, 1)):
        raise InputError(f"{w!r} is not a reduced word")
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for k in range(len(u) - 1):
            if abs(u[k] - u[k + 1]) > 1:
                v = u[:k] + (u[k + 1], u[k]) + u[k + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def reduced_words(p: Sequence[int]) -> Iterator[Word]:
    """Every reduced word of ``p``, in lexicographic order."""
    p = check_permutation(p)

    def rec(q: Permutation) -> Iterator[Word]:
        descents = left_descents(q)
        if not descents:
            yield ()
            return
        for i in descents:
            rest = _swap_values(q, i)
            for tail in rec(rest):
                yield (i,) + tail

    yield from rec(p)


def _swap_values(p: Permutation, i: int) -> Permutation:
    """``s_i p``: exchange the values i and i+1 in one-line notation."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def lex_min_reduced_word(p: Sequence[int]) -> Word:
    """Lexicographically smallest reduced word, peeling the least left descent."""
    q = check_permutation(p)
    out = []
    while True:
        descents = left_descents(q)
        if not descents:
            return tuple(out)
        out.append(descents[0])
        q = _swap_values(q, descents[0])


def enumerate_fully_commutative(n: int) -> list[Permutation]:
    """All 321-avoiding permutations of S_{n+1}, sorted by length then one-line notation."""
    check_rank(n)
    return list(_fully_commutative(n))


@lru_cache(maxsize=None)
def _fully_commutative(n: int) -> tuple[Permutation, ...]:
    size = n + 1
    found: list[Permutation] = []
    prefix: list[int] = []
    used = [False] * (size + 1)

    # A prefix extends to a 321-avoider iff no placed entry is the middle of a
    # 321. Track the largest entry seen and the largest "descent bottom" (an
    # entry with something larger before it); a new entry below that bound
    # would close a 321.
    def rec(max_seen: int, bound: int) -> None:
        if len(prefix) == size:
            found.append(tuple(prefix))
            return
        if used.index(False, 1) < bound:
            return
        for v in range(1, size + 1):
            if used[v] or v < bound:
                continue
            used[v] = True
            prefix.append(v)
            if v < max_seen:
                rec(max_seen, max(bound, v))
            else:
                rec(v, bound)
            prefix.pop()
            used[v] = False

    rec(0, 0)
    found.sort(key=lambda q: (length(q), q))
    return tuple(found)


def catalan(m: int) -> int:
    c = 1
    for k in range(m):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c
