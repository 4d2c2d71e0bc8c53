"""Tests for rational parsing, formatting, and comparison helpers."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from phenkf.exact_arith import (
    RationalParseError,
    approx_text,
    compare,
    format_rational,
    parse_rational,
    reciprocal,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/4", Fraction(3, 4)),
        ("7", Fraction(7)),
        ("-2", Fraction(-2)),
        ("+5/10", Fraction(1, 2)),
        (" 3 / 4 ", Fraction(3, 4)),
        ("0", Fraction(0)),
        ("6/-4", Fraction(-3, 2)),
    ],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/0", "a/b", "1.5", "1/2/3", "1 2", "/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(5)) == "5"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert format_rational(Fraction(2, 4)) == "1/2"


def test_approx_text():
    assert approx_text(Fraction(1, 2)) == "0.5"
    assert approx_text(Fraction(1, 3), digits=3).startswith("0.333")


def test_reciprocal():
    assert reciprocal(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        reciprocal(Fraction(0))


def test_compare():
    assert compare(Fraction(1, 3), Fraction(1, 2)) == -1
    assert compare(Fraction(1, 2), Fraction(1, 2)) == 0
    assert compare(Fraction(2), Fraction(1, 2)) == 1


@given(st.fractions())
def test_parse_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(st.integers(), st.integers(min_value=1))
def test_parse_plain_ratio(num, den):
    assert parse_rational(f"{num}/{den}") == Fraction(num, den)


def test_compare_agrees_with_order():
    rng = random.Random(7)
    for _ in range(1000):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        assert compare(a, b) == (a > b) - (a < b)
