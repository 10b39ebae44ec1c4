"""Laguerre linearization coefficients and the derangement identity.

``E(n_1, ..., n_k) = (-1)^N integral_0^inf prod_i L_{n_i}(x) e^{-x} dx``
is computed by expanding the product exactly and summing moments. The
classical statement is for three arguments; any ``k`` is accepted here and
the agreement with the derangement count is checked, never assumed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .derangements import (
    DEFAULT_GUARD,
    MultisetSpec,
    SpecLike,
    as_spec,
    multiset_derangements_enum,
    multiset_derangements_ie,
)
from .integration import integrate_exp_weight
from .laguerre import Polynomial, laguerre

__all__ = [
    "IdentityReport",
    "laguerre_product",
    "linearization_integral",
    "linearization_coefficient",
    "verify_identity",
    "orthonormality_check",
    "verify_range",
]


def laguerre_product(spec: SpecLike) -> Polynomial:
    product = Polynomial([1])
    for n in as_spec(spec):
        product = product * laguerre(n)
    return product


def linearization_integral(spec: SpecLike) -> Fraction:
    """The unsigned integral ``integral_0^inf prod_i L_{n_i} e^{-x} dx``."""
    return integrate_exp_weight(laguerre_product(spec))


def linearization_coefficient(spec: SpecLike) -> Fraction:
    spec = as_spec(spec)
    value = linearization_integral(spec)
    return -value if spec.total % 2 else value


@dataclass(frozen=True)
class IdentityReport:
    spec: MultisetSpec
    d_ie: int
    e_value: Fraction
    d_enum: Optional[int] = None

    @property
    def holds(self) -> bool:
        if self.e_value.denominator != 1 or self.e_value != self.d_ie:
            return False
        return self.d_enum is None or self.d_enum == self.d_ie

    def __str__(self) -> str:
        parts = [f"D_ie={self.d_ie}", f"E={self.e_value}"]
        if self.d_enum is not None:
            parts.insert(0, f"D_enum={self.d_enum}")
        status = "holds" if self.holds else "FAILS"
        return f"{self.spec}: {' '.join(parts)} [{status}]"


def verify_identity(
    spec: SpecLike, use_oracle: bool = False, guard: int = DEFAULT_GUARD
) -> IdentityReport:
    """Compare the derangement count with the linearization coefficient.

    A mismatch is reported through ``holds`` rather than raised. With
    ``use_oracle`` the brute-force count is included, which raises
    :class:`~evengillis.derangements.GuardExceeded` for large specs.
    """
    spec = as_spec(spec)
    d_enum = multiset_derangements_enum(spec, guard) if use_oracle else None
    return IdentityReport(
        spec=spec,
        d_ie=multiset_derangements_ie(spec),
        e_value=linearization_coefficient(spec),
        d_enum=d_enum,
    )


def orthonormality_check(m: int, n: int) -> bool:
    return integrate_exp_weight(laguerre(m) * laguerre(n)) == (1 if m == n else 0)


def verify_range(
    maxes, use_oracle: bool = False, guard: int = DEFAULT_GUARD
) -> list[IdentityReport]:
    """Check every spec in the box ``0 <= n_i <= maxes[i]``, in lexicographic order.

    The brute-force count is added only for specs within ``guard``.
    """
    return [
        verify_identity(spec, use_oracle and sum(spec) <= guard, guard)
        for spec in itertools.product(*(range(m + 1) for m in maxes))
    ]
