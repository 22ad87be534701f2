"""Exact rational coefficients.

Coefficients are :class:`fractions.Fraction` values, which are always stored
in lowest terms with a positive denominator and zero as ``0/1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*\Z")


def rat_add(a: Rational, b: Rational) -> Rational:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Rational, b: Rational) -> Rational:
    return Fraction(a) * Fraction(b)


def rat_inv(a: Rational) -> Rational:
    """Reciprocal of ``a``; raises ``ZeroDivisionError`` for zero."""
    a = Fraction(a)
    if a == 0:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    return 1 / a


def format_rational(a: Rational) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse ``p``, ``p/q``, ``-p/q`` or ``+p``.

    Raises ``ValueError`` on malformed input and ``ZeroDivisionError`` on a
    zero denominator.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    sign, num, den = m.groups()
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value
