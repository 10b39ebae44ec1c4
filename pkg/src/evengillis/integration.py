"""Exact integration against the weight ``e^{-x}`` on ``[0, inf)``.

Uses the moments ``integral_0^inf x^m e^{-x} dx = m!``, so a polynomial
integrates to a finite sum of its coefficients times factorials. No
quadrature, no floats.
"""
from __future__ import annotations

from fractions import Fraction

from .exact_core import factorial
from .laguerre import Polynomial

__all__ = ["exp_moment", "integrate_exp_weight"]


def exp_moment(m: int) -> int:
    """``integral_0^inf x^m e^{-x} dx``."""
    return factorial(m)


def integrate_exp_weight(p: Polynomial) -> Fraction:
    total = Fraction(0)
    weight = 1
    for m, c in enumerate(p.coefficients):
        if m:
            weight *= m
        total += c * weight
    return total
