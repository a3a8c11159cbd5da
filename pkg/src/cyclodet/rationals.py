"""Exact rational scalars.

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction``, which already keeps the canonical reduced form with a
positive denominator.  This module pins down the constructors, powers and the
"p/q" text format the rest of the package relies on.
"""

from fractions import Fraction


def rational(numer, denom=1) -> Fraction:
    """Canonical rational numer/denom; a zero denominator is rejected."""
    if denom == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numer, denom)


def rat_pow(a, e: int) -> Fraction:
    """Exact a**e; negative e requires a != 0."""
    a = Fraction(a)
    if e < 0 and a == 0:
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    return a ** e


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (decimal digits, optional sign) into a Fraction."""
    text = text.strip()
    num, slash, den = text.partition("/")
    try:
        if slash:
            return rational(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rational(q) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
