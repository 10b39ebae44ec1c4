"""Dense exact polynomials and the Laguerre family.

Coefficients are held in ascending order (index ``m`` is the coefficient of
``x**m``) and trailing zeros are always stripped, so the zero polynomial is
the empty tuple and two equal polynomials are structurally identical.

The Laguerre polynomials use the normalization in which
``integral_0^inf L_m L_n e^{-x} dx`` equals the Kronecker delta.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .exact_core import as_rational, binomial, factorial

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "laguerre",
    "laguerre_explicit",
]


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable univariate polynomial with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        self._coeffs = _strip([as_rational(c) for c in coefficients])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, m: int, c=1) -> "Polynomial":
        return cls([0] * m + [c])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, m: int) -> Fraction:
        if m < 0:
            raise IndexError(m)
        return self._coeffs[m] if m < len(self._coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Polynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for m, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if m == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if m == 1 else f"x^{m}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def _coerce(value) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial([value])
    return None


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


@lru_cache(maxsize=None)
def laguerre(n: int) -> Polynomial:
    """Laguerre polynomial ``L_n`` from the three-term recurrence

    ``(k + 1) L_{k+1} = (2k + 1 - x) L_k - k L_{k-1}``, with ``L_0 = 1`` and
    ``L_1 = 1 - x``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    prev, cur = Polynomial([1]), Polynomial([1, -1])
    if n == 0:
        return prev
    for k in range(1, n):
        nxt = (Polynomial([2 * k + 1, -1]) * cur - k * prev) * Fraction(1, k + 1)
        prev, cur = cur, nxt
    return cur


def laguerre_explicit(n: int) -> Polynomial:
    """``L_n`` from the closed sum ``sum_j C(n, j) (-x)^j / j!``.

    Kept separate from :func:`laguerre` so each can check the other.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Polynomial(
        Fraction((-1) ** j * binomial(n, j), factorial(j)) for j in range(n + 1)
    )
