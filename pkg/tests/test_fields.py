"""Rational field backend behavior."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polywit.fields import QQ


def test_basic_constants():
    assert QQ.zero() == Fraction(0)
    assert QQ.one() == Fraction(1)
    assert QQ.characteristic() == 0
    assert QQ.name == "rationals"


def test_coerce_accepts_exact_inputs():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.coerce("3/2") == Fraction(3, 2)
    assert QQ.coerce(Fraction(-7, 4)) == Fraction(-7, 4)


def test_coerce_rejects_floats():
    with pytest.raises(TypeError):
        QQ.coerce(0.5)


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-3", Fraction(-3)), ("3/2", Fraction(3, 2)),
     ("+5/10", Fraction(1, 2)), (" 4 / 6 ", Fraction(2, 3))],
)
def test_parse_literals(text, value):
    assert QQ.parse(text) == value


@pytest.mark.parametrize("text", ["", "x", "1.5", "3/0", "1/2/3", "2e3"])
def test_parse_rejects_non_literals(text):
    with pytest.raises(ValueError):
        QQ.parse(text)


def test_inverse():
    assert QQ.inverse(Fraction(3, 2)) == Fraction(2, 3)
    with pytest.raises(ZeroDivisionError):
        QQ.inverse(Fraction(0))


@given(st.fractions())
def test_format_parse_round_trip(q):
    assert QQ.parse(QQ.format(q)) == q
