"""Exact rational scalars.

Scalars are plain :class:`fractions.Fraction` values; this module only fixes
their text forms (``"p/q"``, or ``"p"`` when ``q == 1``).
"""

from fractions import Fraction

Rational = Fraction


def parse_rational(text) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` (or an int / Fraction) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def latex_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
