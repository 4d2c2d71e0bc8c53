"""Exact rational arithmetic.

Every correctness-bearing quantity in this package is a Rational.  Floats
appear only in clearly labeled approximate renderings for human output.
"""

import re
from fractions import Fraction

# Canonical-form arbitrary-precision rationals.  Fraction already keeps
# gcd(num, den) == 1 and den > 0, so normalization is free.
Rational = Fraction

ZERO = Rational(0)
ONE = Rational(1)

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class RationalParseError(ValueError):
    """Input string is not an integer or p/q fraction."""


def parse_rational(text: str) -> Rational:
    """Parse "p", "p/q", or "-p/q" into a Rational.

    Rejects floats, empty strings, and zero denominators.
    """
    if not isinstance(text, str):
        raise RationalParseError(f"expected string, got {type(text).__name__}")
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise RationalParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Rational(num, den)


def format_rational(q) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def approx_text(q, digits: int = 12) -> str:
    """Float rendering for display only; never used in comparisons."""
    return format(float(Rational(q)), f".{digits}g")


def reciprocal(q) -> Rational:
    q = Rational(q)
    if q == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1 / q


def compare(a, b) -> int:
    """Three-way compare: -1, 0, or 1."""
    a, b = Rational(a), Rational(b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0
