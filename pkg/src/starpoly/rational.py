"""Exact rational helpers on top of :class:`fractions.Fraction`."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def to_fraction(value: RationalLike | None) -> Fraction | None:
    """Coerce ints, Fractions and strings such as ``"3/2"`` or ``"-1"``.

    Floats are refused on purpose: parameters must be exact.
    """
    if value is None:
        return None
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"`` with the denominator always present."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out
