"""Exact integer and rational primitives.

Everything downstream works over Python's unbounded ``int`` and
:class:`fractions.Fraction`, which already stores values reduced with a
positive denominator and rejects a zero denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["ExactRational", "factorial", "binomial", "as_rational", "is_integral"]

#: Reduced fraction of arbitrary-precision integers.
ExactRational = Fraction


def _check_nonnegative(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def factorial(n: int) -> int:
    """Return ``n!``; ``0! == 1``."""
    return math.factorial(_check_nonnegative("n", n))


def binomial(n: int, j: int) -> int:
    """Return ``C(n, j)``, which is 0 when ``j > n``."""
    return math.comb(_check_nonnegative("n", n), _check_nonnegative("j", j))


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1
