"""Exact rationals are :class:`fractions.Fraction`; this adds strict parsing."""
from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$")


def parse_rational(text, name: str = "value") -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly.  Floats are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise ValueError(f"{name}: {text!r} is not a rational of the form p or p/q")
    num, _, den = text.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise ValueError(f"{name}: zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    return str(Fraction(q))
