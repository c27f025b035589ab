"""
Rational value object: exact fractions and their "p/q" wire format.
"""
import re
from fractions import Fraction
from typing import Union

from qappell.domain.exceptions.domain_exceptions import InvalidRationalException

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """
    Parse a rational written as "p/q" or "p".

    Decimals are rejected so that every value entering a computation is exact.

    Args:
        text: String literal, int or Fraction

    Returns:
        Fraction in lowest terms
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise InvalidRationalException(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InvalidRationalException(f"Not a rational: {text!r}")
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise InvalidRationalException(f"Not a rational literal: {text!r} (expected 'p/q' or 'p')")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InvalidRationalException(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """Render a rational in lowest terms: "3", "-1/4"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
