import pytest
from hypothesis import given, strategies as st

from tlweyl.errors import InputError
from tlweyl.laurent import DELTA, TAU, LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_zero_terms_dropped():
    assert LaurentPoly({0: 0, 2: 3}).terms == {2: 3}
    assert LaurentPoly() == 0
    assert not LaurentPoly({1: 0})


@pytest.mark.parametrize(
    "poly, text",
    [
        (DELTA, "1 + tau^-2"),
        (LaurentPoly(), "0"),
        (TAU, "tau"),
        (LaurentPoly({-2: -3, 0: 1}), "1 - 3*tau^-2"),
        (LaurentPoly({1: -1}), "-tau"),
    ],
)
def test_str(poly, text):
    assert str(poly) == text


@pytest.mark.parametrize(
    "k, expected",
    [
        (0, {0: 1}),
        (1, {0: 1, -2: 1}),
        (2, {0: 1, -2: 2, -4: 1}),
        (3, {0: 1, -2: 3, -4: 3, -6: 1}),
    ],
)
def test_delta_powers(k, expected):
    assert (DELTA**k).terms == expected


def test_negative_powers_of_units():
    assert TAU**-2 == LaurentPoly({-2: 1})
    assert LaurentPoly({3: -1}) ** -1 == LaurentPoly({-3: -1})
    assert LaurentPoly({3: -1}) ** -2 == LaurentPoly({-6: 1})
    with pytest.raises(InputError):
        DELTA**-1


def test_rejects_non_integers():
    with pytest.raises(InputError):
        LaurentPoly({0: 1.5})


def test_json_round_trip():
    p = LaurentPoly({-4: 1, 0: 2})
    assert p.to_json() == {"-4": 1, "0": 2}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_delta_in_tau():
    assert DELTA == 1 + TAU**-2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(polys, st.integers(-6, 6))
def test_evaluation_is_a_homomorphism(a, x):
    from fractions import Fraction

    def ev(p):
        return sum(Fraction(x) ** e * c for e, c in p.items()) if x else None

    if x:
        assert ev(a * a) == ev(a) ** 2
        assert ev(a + DELTA) == ev(a) + 1 + Fraction(1, x * x)
