"""Acceptance suite: the nine end-to-end criteria, each at its stated tolerance.

Every criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary (see conftest.py) and when this file is run as a
script.
"""
from __future__ import annotations

import json
import time
from itertools import product

import pytest

from tlweyl.categorify import StaircaseForm, classify_intertwined, decompose_product, verify_correspondence
from tlweyl.cli import main
from tlweyl.coxeter import catalan, enumerate_fully_commutative, inverse, word_to_permutation
from tlweyl.dense import dense_of_sequence, dense_to_sequence, enumerate_dense_sets, update
from tlweyl.laurent import DELTA
from tlweyl.tl import TLElement, boundary_arcs, enumerate_diagrams, kl_basis_of_fc, multiply
from tlweyl.weyl_lines import (
    all_lines,
    all_reflections,
    hyperplane_lines,
    reflections_of,
    sequence_variety,
    simple_transverse,
    transverse_lines,
)

RESULTS: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[number] = line
    print(line)


class Criterion:
    """Context manager that records PASS, or FAIL with the assertion text."""

    def __init__(self, number: int):
        self.number = number
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            record(self.number, True, f"{self.detail} [{elapsed:.2f} s]")
        else:
            record(self.number, False, f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''} [{elapsed:.2f} s]")
        return False


def as_set(pairs):
    return {tuple(t) for t in pairs}


# --- 1 ---------------------------------------------------------------------

ANCHORS = [
    ((1, 2), {(1, 2)}, {(2, 3)}),
    ((2, 1, 3), {(1, 4), (2, 3)}, {(1, 2), (3, 4)}),
    ((2, 1, 3, 2), {(1, 4), (2, 3)}, {(1, 4), (2, 3)}),
    ((3, 4, 2, 3, 1, 2), {(2, 5), (3, 4)}, {(1, 4), (2, 3)}),
]


def test_criterion_1_a4_table(capsys, a4_figure):
    with Criterion(1) as c:
        start = time.perf_counter()
        code = main(["table", "--rank", "4", "--format", "json"])
        out = capsys.readouterr().out
        elapsed = time.perf_counter() - start
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 42, f"{len(rows)} records"
        assert elapsed < 1.0, f"table took {elapsed:.2f} s"

        by_element = {word_to_permutation(r["element"], 4): (as_set(r["left"]), as_set(r["right"])) for r in rows}
        assert len(by_element) == 42
        for word, left, right in ANCHORS:
            assert by_element[word_to_permutation(word, 4)] == (left, right), word

        figure = {word_to_permutation(r["element"], 4): (as_set(r["left"]), as_set(r["right"])) for r in a4_figure}
        assert set(figure) == set(by_element), "figure and table list different elements"
        differing = [p for p in figure if figure[p] != by_element[p]]
        # A figure row can only be wrong in a way the figure itself exposes: its
        # left column must equal the right column of the inverse element's row.
        for p in differing:
            fig_left, fig_right = figure[p]
            ours_left, ours_right = by_element[p]
            assert fig_right == ours_right, "right column disagrees with the figure"
            assert fig_left != figure[inverse(p)][1], "figure row is self-consistent yet differs"
            word = next(r["element"] for r in rows if word_to_permutation(r["element"], 4) == p)
            assert ours_left == reflections_of(sequence_variety(word, 4)) == boundary_arcs(kl_basis_of_fc(p))[0]
        assert len(differing) <= 1
        c.detail = (
            f"42 records in {elapsed:.3f} s, 4 anchors exact, {42 - len(differing)}/42 figure rows verbatim"
            + (
                "; the remaining row (s2 s1 s3 s2 s4 s3) matches the figure's own inverse row and the"
                " Weyl-line oracle, not its printed left column (figure erratum)"
                if differing
                else ""
            )
        )


S2S1S3S2S4S3 = (2, 1, 3, 2, 4, 3)


@pytest.mark.xfail(strict=True, reason="printed A4 figure row for s2 s1 s3 s2 s4 s3 contradicts the figure's "
                   "row for its inverse s3 s4 s2 s3 s1 s2; the computed left set is {(1,4),(2,3)}")
def test_a4_figure_row_verbatim(a4_figure):
    row = next(r for r in a4_figure if tuple(r["element"]) == S2S1S3S2S4S3)
    assert dense_of_sequence(S2S1S3S2S4S3) == as_set(row["left"])


# --- 2 ---------------------------------------------------------------------


def test_criterion_2_correspondence():
    with Criterion(2) as c:
        start = time.perf_counter()
        counts, words, checks = [], 0, 0
        for n in range(1, 8):
            report = verify_correspondence(n)
            assert report.ok, f"n={n}: {report.failure_count} failures, first {report.failures[:1]}"
            assert report.elements == catalan(n + 1)
            counts.append(report.elements)
            words += report.words
            checks += report.checks
        elapsed = time.perf_counter() - start
        assert counts == [2, 5, 14, 42, 132, 429, 1430]
        assert elapsed < 120, f"{elapsed:.1f} s"
        c.detail = f"n=1..7: {sum(counts)} elements, {words} reduced words, {checks} checks, 0 failures"


# --- 3 ---------------------------------------------------------------------


def test_criterion_3_oracle_equivalence():
    with Criterion(3) as c:
        start = time.perf_counter()
        total = 0
        for n in range(1, 6):
            for length in range(1, 7):
                for seq in product(range(1, n + 1), repeat=length):
                    assert dense_of_sequence(seq) == reflections_of(sequence_variety(seq, n)), (n, seq)
                    total += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"{elapsed:.1f} s"
        c.detail = f"{total} words (n<=5, length<=6) agree exactly"


# --- 4 ---------------------------------------------------------------------


def test_criterion_4_tl_relations():
    with Criterion(4) as c:
        checked = 0
        for n in range(1, 6):
            b = {i: TLElement.generator(i, n) for i in range(1, n + 1)}
            for i, j in product(b, repeat=2):
                if abs(i - j) == 1:
                    assert b[j] * b[i] * b[j] == b[j], (n, i, j)
                elif abs(i - j) > 1:
                    assert b[i] * b[j] == b[j] * b[i], (n, i, j)
                else:
                    assert b[i] * b[i] == DELTA * b[i], (n, i)
                checked += 1
        c.detail = f"{checked} relations over n<=5 hold as exact Laurent identities"


# --- 5 ---------------------------------------------------------------------


def test_criterion_5_dimension():
    with Criterion(5) as c:
        for n in range(1, 11):
            d, f = len(enumerate_diagrams(n)), len(enumerate_fully_commutative(n))
            assert d == f == catalan(n + 1), (n, d, f)
        assert len(enumerate_diagrams(10)) == 58786
        c.detail = "diagrams = fc elements = Catalan(n+1) for n<=10 (n=10: 58786)"


# --- 6 ---------------------------------------------------------------------


def test_criterion_6_round_trip():
    with Criterion(6) as c:
        start = time.perf_counter()
        total = 0
        for n in range(1, 7):
            for q in enumerate_dense_sets(n):
                assert dense_of_sequence(dense_to_sequence(q)) == q, q
                total += 1
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"{elapsed:.1f} s"
        c.detail = f"{total} dense sets (n<=6) round-trip exactly"


# --- 7 ---------------------------------------------------------------------


def _third(t, t1):
    """t1 t t1 for transpositions sharing one letter."""
    (shared,) = set(t) & set(t1)
    a = (set(t) - {shared}).pop()
    b = (set(t1) - {shared}).pop()
    return tuple(sorted((a, b)))


def test_criterion_7_line_identity_sweeps():
    with Criterion(7) as c:
        triples = 0
        for n in range(2, 7):
            refl = all_reflections(n)
            for t, t1 in product(refl, refl):
                if t == t1 or not set(t) & set(t1):
                    continue
                t2 = _third(t, t1)
                vt, vt1, ht2 = transverse_lines(t, n), transverse_lines(t1, n), hyperplane_lines(t2, n)
                assert vt & vt1 == vt & ht2 == vt1 & ht2, (n, t, t1)
                assert vt & (vt1 | transverse_lines(t2, n)) == vt, (n, t, t1)
                triples += 1
        runs = 0
        for n in range(1, 9):
            for m in range(1, n + 1):
                vm = simple_transverse(m, n)
                for j in range(1, m + 1):
                    assert sequence_variety(range(m, j - 1, -1), n) == vm, (n, m, j)
                    runs += 1
                for i in range(m, n + 1):
                    assert sequence_variety(range(m, i + 1), n) == vm, (n, m, i)
                    runs += 1
        for n in range(1, 13):
            assert len(all_lines(n)) == 2**n - 1, n
        c.detail = f"{triples} non-commuting triples (n<=6), {runs} monotone runs (n<=8), line counts n<=12"


# --- 8 ---------------------------------------------------------------------


def test_criterion_8_positivity():
    with Criterion(8) as c:
        pairs = 0
        for n in range(1, 6):
            basis = [TLElement.from_diagram(d) for d in enumerate_diagrams(n)]
            for x, y in product(basis, repeat=2):
                z = multiply(x, y)
                assert len(z) == 1, "product is not a single diagram"
                (coeff,) = z.terms.values()
                k = len(coeff.terms) - 1
                assert k >= 0 and coeff == DELTA**k, coeff
                pairs += 1
        shifts = 0
        for n in range(1, 5):
            for length in range(1, 6):
                for seq in product(range(1, n + 1), repeat=length):
                    for (_, shift), _ in decompose_product(seq, n).summands:
                        assert shift <= 0 and shift % 2 == 0, (seq, shift)
                        shifts += 1
        c.detail = f"{pairs} basis products are (1+tau^-2)^k b_w; {shifts} decomposition shifts even and <= 0"


# --- 9 ---------------------------------------------------------------------

INTERTWINED = ["(321)(43)(7654)(876)(9)", "(21)(43)(65)(87)(98)", "(54321)(6543)(765)(87)(9)"]
GENERALIZED = ["(1)(32)(4)(765)(87)(9)", "(87)(9)"]
NOT_GENERALIZED = ["(1)(32)(65)(87)(9)", "(7)(98)"]
NEITHER = ["(1)(432)(654)(7)(98)"]


def test_criterion_9_intertwined():
    with Criterion(9) as c:
        kinds = {}
        for text in INTERTWINED + GENERALIZED + NOT_GENERALIZED + NEITHER:
            kinds[text] = classify_intertwined(StaircaseForm.parse(text))
        for text in INTERTWINED:
            assert kinds[text].is_intertwined, text
        for text in GENERALIZED:
            assert kinds[text].is_generalized, text
        for text in NOT_GENERALIZED + NEITHER:
            assert kinds[text].kind == "neither" and not kinds[text].is_generalized, text
        assert kinds["(1)(32)(4)(765)(87)(9)"].kind == "generalized"
        c.detail = "all 8 worked examples classified as stated ((87)(9) is generalized, and also meets the stricter intertwined rule)"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
