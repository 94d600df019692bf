"""
Exact and floating scalars

ExactScalar is ``fractions.Fraction``: always in lowest terms with a
positive denominator, exact under + - * /, and raising ZeroDivisionError
on division by zero. Floating work uses ``float`` and ``complex``.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

ExactScalar = Fraction
Scalar = Union[Fraction, float, complex]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_exact(value: Union[int, str, Rational]) -> Fraction:
    """
    Convert an int, a rational or a "p/q" / decimal string to a Fraction.

    Floats are refused: they only enter exact work through an explicit
    ``Fraction(x)`` by the caller.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def parse_scalar(value: Union[int, float, str, Rational]) -> Union[Fraction, float]:
    """Strings and integers become exact, JSON floats stay floating."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, float):
        return value
    return to_exact(value)


def format_exact(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when q == 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_exact(value: object) -> bool:
    """True for ints and Fractions; bools are not scalars."""
    return isinstance(value, Rational) and not isinstance(value, bool)


def all_exact(values: Iterable[object]) -> bool:
    """
    Whether every value is exact.

    Args:
        values: scalars of any kind

    Returns:
        bool: True when no value is a float or complex
    """
    return all(is_exact(v) for v in values)


def conj(value: Scalar) -> Scalar:
    """Complex conjugate; the identity on real scalars."""
    return value.conjugate()


def log_abs(value: Scalar) -> float:
    """log|value| without overflowing on huge exact rationals."""
    if is_exact(value):
        q = Fraction(value)
        if q == 0:
            return -math.inf
        return math.log(abs(q.numerator)) - math.log(q.denominator)
    magnitude = abs(value)
    return math.log(magnitude) if magnitude > 0 else -math.inf
