"""
Decategorified bookkeeping for products of the bimodules B_i.

The bimodule B_{i1} * ... * B_{ik} is tracked through its shadows: the TL
product b_{i1} ... b_{ik} (which is (1 + tau^-2)^k b_w for one fully
commutative w), and the dense sets of its left and right annihilator
varieties. :func:`verify_correspondence` checks, for every fully commutative
element and every one of its reduced words, that the dense sets computed by
the reflection calculus equal the arcs of the diagram of b_w.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels
from .coxeter import (
    Permutation,
    Word,
    check_permutation,
    check_rank,
    check_word,
    enumerate_fully_commutative,
    identity,
    inverse,
    is_fully_commutative,
    lex_min_reduced_word,
    word_to_permutation,
)
from .dense import DenseSet, ReflectionSet, dense_of_sequence, to_partner
from .errors import CapacityError, DomainError, InputError
from .laurent import DELTA, LaurentPoly
from .tl import _generator_array, boundary_arcs, element_of_diagram, kl_basis_of_fc, word_diagram
from .weyl_lines import _letter_bits, all_reflections, dot_extend_batch, reflections_of_batch

VERIFY_CAP = 8
ORACLE_CAP = 6
ORACLE_HARD_CAP = 7
DECOMPOSE_CAP = 10
MAX_REPORTED_FAILURES = 50


def _nonempty_word(seq: Iterable[int], n: int | None) -> tuple[Word, int]:
    seq = tuple(seq)
    if not seq:
        raise InputError("sequence must be nonempty")
    n = max(seq) if n is None else n
    check_rank(n)
    return check_word(seq, n), n


def annihilator_varieties(seq: Iterable[int]) -> tuple[DenseSet, DenseSet]:
    """Dense sets of the left and right annihilator varieties of B_{i1} * ... * B_{ik}."""
    seq = tuple(seq)
    if not seq:
        raise InputError("sequence must be nonempty")
    return dense_of_sequence(seq), dense_of_sequence(seq[::-1])


@dataclass(frozen=True)
class DecompositionRecord:
    """A multiset of shifted fully commutative summands (w, shift)."""

    summands: tuple[tuple[tuple[Permutation, int], int], ...]

    @classmethod
    def from_counter(cls, counts: Counter) -> "DecompositionRecord":
        items = sorted(((k, v) for k, v in counts.items() if v), key=lambda kv: (kv[0][0], -kv[0][1]))
        return cls(tuple(items))

    def as_counter(self) -> Counter:
        return Counter(dict(self.summands))

    def expanded(self) -> list[tuple[Permutation, int]]:
        return [key for key, mult in self.summands for _ in range(mult)]

    def elements(self) -> set[Permutation]:
        return {w for (w, _), _ in self.summands}

    def laurent(self, element: Permutation) -> LaurentPoly:
        """The coefficient of b_element, reading shift s as tau^s."""
        return LaurentPoly({s: m for (w, s), m in self.summands if w == element})

    def __len__(self) -> int:
        return sum(m for _, m in self.summands)

    def to_json(self) -> list[dict]:
        return [
            {"element": list(lex_min_reduced_word(w)), "permutation": list(w), "shift": s, "multiplicity": m}
            for (w, s), m in self.summands
        ]


def decompose_product(seq: Iterable[int], n: int | None = None) -> DecompositionRecord:
    """Split B_{i1} * ... * B_{ik} into shifted copies of one B_w."""
    seq, n = _nonempty_word(seq, n)
    if n > DECOMPOSE_CAP:
        raise CapacityError(f"decomposition supports rank up to {DECOMPOSE_CAP}")
    loops, d = word_diagram(seq, n)
    w = element_of_diagram(d)
    counts = Counter({(w, shift): c for shift, c in (DELTA**loops).items()})
    return DecompositionRecord.from_counter(counts)


@dataclass(frozen=True)
class StaircaseForm:
    """Descending runs (i, j) meaning b_i b_{i-1} ... b_j, left factor first."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, j in self.runs:
            if not (isinstance(i, int) and isinstance(j, int)) or j > i or j < 1:
                raise InputError(f"bad run ({i}, {j})")
        for (i0, j0), (i1, j1) in zip(self.runs, self.runs[1:]):
            if not (i0 < i1 and j0 < j1):
                raise InputError(f"runs {self.runs} violate the staircase chains")

    @classmethod
    def parse(cls, text: str) -> "StaircaseForm":
        """Parse ``"(321)(43)(9)"``.

        Runs reaching indices >= 10 are written with commas, e.g.
        ``"(11,10)(12,)"``; the trailing comma marks a one-letter run.
        """
        groups = re.findall(r"\(([^()]*)\)", text)
        if not groups or re.sub(r"\s|\([^()]*\)", "", text):
            raise InputError(f"cannot parse staircase form {text!r}")
        runs = []
        for g in groups:
            try:
                letters = [int(x) for x in g.split(",") if x.strip()] if "," in g else [int(c) for c in g.strip()]
            except ValueError:
                raise InputError(f"cannot parse run ({g})") from None
            if not letters or any(b != a - 1 for a, b in zip(letters, letters[1:])):
                raise InputError(f"run ({g}) is not a descending run")
            runs.append((letters[0], letters[-1]))
        return cls(tuple(runs))

    def word(self) -> Word:
        return tuple(x for i, j in self.runs for x in range(i, j - 1, -1))

    @property
    def rank(self) -> int:
        return len(self.runs)

    def __str__(self) -> str:
        def run(i, j):
            xs = range(i, j - 1, -1)
            if i < 10:
                return "".join(map(str, xs))
            return ",".join(map(str, xs)) + ("," if i == j else "")

        return "".join(f"({run(i, j)})" for i, j in self.runs)


def split_runs(word: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive letters decreasing by one."""
    runs: list[tuple[int, int]] = []
    for x in word:
        if runs and runs[-1][1] - 1 == x:
            runs[-1] = (runs[-1][0], x)
        else:
            runs.append((x, x))
    return runs


def staircase_factorization(p: Iterable[int]) -> StaircaseForm:
    p = check_permutation(p)
    if not is_fully_commutative(p):
        raise DomainError(f"{p!r} is not fully commutative")
    word = lex_min_reduced_word(p)
    form = StaircaseForm(tuple(split_runs(word)))
    if word_to_permutation(form.word(), len(p) - 1) != p:
        raise AssertionError("staircase form does not multiply back to the element")
    return form


@dataclass(frozen=True)
class IntertwinedClass:
    """The most specific class of a staircase form.

    Every intertwined form is also generalized intertwined, so ``kind`` is
    ``"intertwined"`` whenever the stricter definition holds; use
    :attr:`is_generalized` to ask for membership in the wider class.
    """

    kind: str
    intertwining_sets: tuple[frozenset[int], ...] = ()

    @property
    def is_intertwined(self) -> bool:
        return self.kind == "intertwined"

    @property
    def is_generalized(self) -> bool:
        return self.kind in ("intertwined", "generalized")


def classify_intertwined(form: StaircaseForm) -> IntertwinedClass:
    """Intertwined, generalized intertwined, or neither.

    Runs are numbered from the right: run 1 is the last factor. The
    intertwining sets start from {i_1}; each next run must contain n - 1,
    where n is the least index of the previous set.
    """
    runs = list(reversed(form.runs))
    if not runs:
        return IntertwinedClass("neither")
    sets = [frozenset({runs[0][0]})]
    for i, j in runs[1:]:
        low = min(sets[-1]) - 1
        if not j <= low <= i:
            sets = None
            break
        sets.append(frozenset({low}) if low == j else frozenset({low - 1, low}))
    top = runs[0][0]
    intertwined = all(j <= top - 2 * step and top - 2 * step + 1 <= i for step, (i, j) in enumerate(runs[1:], start=1))
    if intertwined:
        if sets is None:
            raise AssertionError("intertwined form failed the generalized rule")
        return IntertwinedClass("intertwined", tuple(sets))
    if sets is not None:
        return IntertwinedClass("generalized", tuple(sets))
    return IntertwinedClass("neither")


def dense_table(n: int) -> list[dict]:
    """One row per fully commutative element: lex-min word, left and right dense sets."""
    check_rank(n, VERIFY_CAP)
    rows = []
    for p in enumerate_fully_commutative(n):
        word = lex_min_reduced_word(p)
        if word:
            left, right = annihilator_varieties(word)
        else:
            left = right = ReflectionSet()
        rows.append({"element": list(word), "left": [list(t) for t in sorted(left)], "right": [list(t) for t in sorted(right)]})
    return rows


@dataclass
class VerificationReport:
    n: int
    elements: int = 0
    words: int = 0
    checks: int = 0
    oracle: bool = False
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def summary(self) -> str:
        oracle = ", Weyl-line oracle on" if self.oracle else ""
        return (
            f"n={self.n}: {self.elements} elements, {self.failure_count} failures "
            f"({self.words} reduced words, {self.checks} checks{oracle})"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "elements": self.elements,
            "words": self.words,
            "checks": self.checks,
            "oracle": self.oracle,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "rows": self.rows,
        }


def _reflection_indicator(q: Iterable[tuple[int, int]], n: int) -> np.ndarray:
    members = set(q)
    return np.array([t in members for t in all_reflections(n)], dtype=bool)


def _sweep(elements: list[Permutation], n: int, from_right: bool, oracle: bool):
    """Walk every reduced word of every element, one letter per level.

    With ``from_right`` the words grow by prepending letters, so the state
    holds the dense set and variety of the word itself and the diagram is
    multiplied by b_i on the left. Otherwise letters are appended, the state
    holds the dense set and variety of the reversed word, and the diagram is
    multiplied by b_i on the right.

    Yields completed states: (element ids, words, loops, diagrams, dense, line masks).
    """
    m = n + 1
    count = len(elements)
    # from the right we peel right descents of the remaining element, from
    # the left we peel left descents, i.e. right descents of its inverse
    start = np.array([p if from_right else inverse(p) for p in elements], dtype=np.int16)
    ident_diag = np.array(list(range(m, 2 * m)) + list(range(m)), dtype=_kernels.INDEX_DTYPE)
    state = {
        "elem": np.arange(count),
        "rem": start,
        "diag": np.tile(ident_diag, (count, 1)),
        "dense": np.full((count, m), -1, dtype=_kernels.INDEX_DTYPE),
        "loops": np.zeros(count, dtype=np.int64),
        "word": np.zeros((count, 0), dtype=np.int16),
    }
    if oracle:
        state["lines"] = np.ones((count, 2**n - 1), dtype=bool)
    ident = np.arange(1, m + 1, dtype=np.int16)
    compose, update = _kernels.compose_batch, _kernels.dense_update_batch

    while len(state["elem"]):
        done = np.all(state["rem"] == ident, axis=1)
        if done.any():
            yield {k: v[done] for k, v in state.items()}
            state = {k: v[~done] for k, v in state.items()}
            if not len(state["elem"]):
                break
        parts = []
        for i in range(1, n + 1):
            sel = state["rem"][:, i - 1] > state["rem"][:, i]
            if not sel.any():
                continue
            sub = {k: v[sel] for k, v in state.items()}
            rem = sub["rem"].copy()
            rem[:, [i - 1, i]] = rem[:, [i, i - 1]]
            gen = _generator_array(i, n)[None, :]
            if from_right:
                loops, diag = compose(gen, sub["diag"])
            else:
                loops, diag = compose(sub["diag"], gen)
            new = {
                "elem": sub["elem"],
                "rem": rem,
                "diag": diag,
                "dense": update(sub["dense"], i - 1),
                "loops": sub["loops"] + loops,
                "word": np.concatenate([sub["word"], np.full((len(rem), 1), i, dtype=np.int16)], axis=1),
            }
            if oracle:
                new["lines"] = dot_extend_batch(i, sub["lines"], n)
            parts.append(new)
        state = {k: np.concatenate([p[k] for p in parts]) for k in parts[0]}


def verify_correspondence(n: int, oracle: bool | None = None) -> VerificationReport:
    """Check dense sets against diagram arcs for every reduced word of every fc element."""
    check_rank(n, VERIFY_CAP)
    if oracle is None:
        oracle = n <= ORACLE_CAP
    if oracle and n > ORACLE_HARD_CAP:
        raise CapacityError(f"the Weyl-line oracle supports rank up to {ORACLE_HARD_CAP}")
    # warm the bit tables before sweeping
    if oracle:
        _letter_bits(n)
    elements = enumerate_fully_commutative(n)
    report = VerificationReport(n=n, elements=len(elements), oracle=oracle)

    expected_diag, expected_top, expected_bottom = [], [], []
    for p in elements:
        d = kl_basis_of_fc(p)
        top, bottom = boundary_arcs(d)
        expected_diag.append(d.partner)
        expected_top.append(top)
        expected_bottom.append(bottom)
        report.rows.append({
            "element": list(lex_min_reduced_word(p)),
            "left": [list(t) for t in sorted(top)],
            "right": [list(t) for t in sorted(bottom)],
        })
    diag_arr = np.array(expected_diag, dtype=_kernels.INDEX_DTYPE)
    top_arr = np.array([to_partner(q, n) for q in expected_top])
    bottom_arr = np.array([to_partner(q, n) for q in expected_bottom])
    if oracle:
        top_ind = np.array([_reflection_indicator(q, n) for q in expected_top])
        bottom_ind = np.array([_reflection_indicator(q, n) for q in expected_bottom])

    identity_index = elements.index(identity(n))
    for from_right in (True, False):
        side = "left" if from_right else "right"
        for batch in _sweep(elements, n, from_right, oracle):
            elem = batch["elem"]
            # the identity has only the empty word; its dense sets are undefined
            real = elem != identity_index
            checks = {
                "diagram": np.all(batch["diag"] == diag_arr[elem], axis=1),
                "loops": batch["loops"] == 0,
                f"{side} dense set": np.all(batch["dense"] == (top_arr if from_right else bottom_arr)[elem], axis=1) | ~real,
            }
            if oracle:
                found = reflections_of_batch(batch["lines"], n)
                want = (top_ind if from_right else bottom_ind)[elem]
                checks[f"{side} Weyl-line oracle"] = np.all(found == want, axis=1) | ~real
            if from_right:
                report.words += len(elem)
            report.checks += sum(len(elem) for _ in checks)
            for name, passed in checks.items():
                report.failure_count += int((~passed).sum())
                for r in np.flatnonzero(~passed):
                    if len(report.failures) >= MAX_REPORTED_FAILURES:
                        break
                    letters = [int(x) for x in batch["word"][r]]
                    word = letters[::-1] if from_right else letters
                    report.failures.append({
                        "element": list(lex_min_reduced_word(elements[elem[r]])),
                        "word": word,
                        "check": name,
                    })
    return report
