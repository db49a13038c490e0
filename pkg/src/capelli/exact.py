"""Exact rational coefficients, stored as plain int whenever integral.

Python promotes mixed int/Fraction arithmetic to Fraction and compares the
two representations equal, so keeping integers unwrapped costs nothing in
correctness and saves most of the Fraction overhead in the hot loops.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["as_exact"]


def as_exact(value) -> int | Fraction:
    """Coerce to an exact rational: int if integral, Fraction otherwise."""
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    f = Fraction(value)
    return f.numerator if f.denominator == 1 else f
