"""
Tests for the rational value object.
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qappell.domain.exceptions.domain_exceptions import InvalidRationalException
from qappell.domain.value_objects.rational import format_rational, parse_rational


@pytest.mark.parametrize("text, expected", [
    ("1/2", Fraction(1, 2)),
    ("-3", Fraction(-3)),
    (" 4/6 ", Fraction(2, 3)),
    ("+5/1", Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["0.5", "1/0", "abc", "", "1/-2", True])
def test_parse_rational_rejects(text):
    with pytest.raises(InvalidRationalException):
        parse_rational(text)


def test_format_rational_is_lowest_terms():
    assert format_rational(Fraction(6, -8)) == "-3/4"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(0) == "0"


@given(st.fractions())
def test_format_then_parse_is_identity(value):
    assert parse_rational(format_rational(value)) == value
