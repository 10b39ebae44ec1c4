"""Classical and multiset derangement counts.

A multiset spec ``(n_1, ..., n_k)`` describes ``n_i`` letters addressed to
address ``i`` and the same number of envelopes at that address. Letters
sharing an address are indistinguishable, so ``D(n, n) == 1``. Positions are
laid out block by block: the first ``n_1`` positions are the envelopes of
address 0, the next ``n_2`` those of address 1, and so on.

Two independent counts are provided: a brute-force enumeration over every
distinct arrangement, and a closed inclusion-exclusion sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence, Union

from .exact_core import binomial, factorial

__all__ = [
    "DEFAULT_GUARD",
    "GuardExceeded",
    "MultisetSpec",
    "SpecLike",
    "as_spec",
    "classical_derangements",
    "classical_alternating_sum",
    "multiset_permutations",
    "multiset_derangements_enum",
    "multiset_derangements_ie",
]

DEFAULT_GUARD = 12


class GuardExceeded(ValueError):
    """Raised when the enumeration oracle is asked for too many letters."""

    def __init__(self, total: int, limit: int):
        self.total = total
        self.limit = limit
        super().__init__(
            f"enumeration needs N={total} letters but the guard is {limit}; "
            "use the inclusion-exclusion method instead"
        )


@dataclass(frozen=True)
class MultisetSpec:
    """Argument vector ``(n_1, ..., n_k)``; zeros and the empty spec are allowed."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        ms = tuple(self.multiplicities)
        for n in ms:
            if isinstance(n, bool) or not isinstance(n, int):
                raise TypeError(f"multiplicities must be ints, got {n!r}")
            if n < 0:
                raise ValueError(f"multiplicities must be nonnegative, got {n}")
        object.__setattr__(self, "multiplicities", ms)

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    @property
    def k(self) -> int:
        return len(self.multiplicities)

    def canonical(self) -> "MultisetSpec":
        """Zeros dropped, sorted descending. D and E depend only on this."""
        return MultisetSpec(tuple(sorted((n for n in self.multiplicities if n), reverse=True)))

    def __iter__(self):
        return iter(self.multiplicities)

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.multiplicities)) + ")"


SpecLike = Union[MultisetSpec, Sequence[int]]


def as_spec(spec: SpecLike) -> MultisetSpec:
    return spec if isinstance(spec, MultisetSpec) else MultisetSpec(tuple(spec))


def classical_alternating_sum(n: int) -> Fraction:
    """``n! * sum_{j=0..n} (-1)^j / j!`` evaluated term by term."""
    nf = factorial(n)
    return sum((Fraction((-1) ** j * nf, factorial(j)) for j in range(n + 1)), Fraction(0))


def classical_derangements(n: int) -> int:
    """Number of fixed-point-free permutations of ``n`` items.

    Uses ``D(n) = sum_j (-1)^j n!/j!``; each term is an integer.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total, term = 0, 1
    # term runs through n!/j! for j = n, n-1, ..., 0
    for j in range(n, -1, -1):
        total += term if j % 2 == 0 else -term
        term *= j if j else 1
    return total


def multiset_permutations(spec: SpecLike, guard: int = DEFAULT_GUARD) -> Iterator[tuple[int, ...]]:
    """Yield each distinct arrangement of the multiset exactly once.

    An arrangement is a tuple of address indices, one per position, in
    lexicographic order. There are ``N! / prod(n_i!)`` of them.
    """
    spec = as_spec(spec)
    if spec.total > guard:
        raise GuardExceeded(spec.total, guard)
    counts = list(spec.multiplicities)
    size = spec.total
    current: list[int] = [0] * size

    def place(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == size:
            yield tuple(current)
            return
        for sym, left in enumerate(counts):
            if left:
                counts[sym] -= 1
                current[pos] = sym
                yield from place(pos + 1)
                counts[sym] += 1

    return place(0)


def _block_labels(spec: MultisetSpec) -> tuple[int, ...]:
    return tuple(i for i, n in enumerate(spec.multiplicities) for _ in range(n))


def multiset_derangements_enum(spec: SpecLike, guard: int = DEFAULT_GUARD) -> int:
    """Count derangements by checking every distinct arrangement."""
    spec = as_spec(spec)
    blocks = _block_labels(spec)
    return sum(
        1
        for arrangement in multiset_permutations(spec, guard)
        if all(sym != blk for sym, blk in zip(arrangement, blocks))
    )


def multiset_derangements_ie(spec: SpecLike) -> int:
    """Count derangements by inclusion-exclusion over forced correct placements.

    For each choice of ``j_i`` correctly filled envelopes in block ``i``, the
    remaining ``N - J`` letters are arranged freely::

        D = sum_{0 <= j_i <= n_i} (-1)^J prod_i C(n_i, j_i) * (N - J)! / prod_i (n_i - j_i)!

    The summand factors per block apart from ``(N - J)!``, so terms are
    grouped by ``J`` through a product of per-block integer polynomials
    (scaled by ``prod_i n_i!`` to stay integral). That keeps the cost
    polynomial even for many small blocks.
    """
    ms = as_spec(spec).canonical().multiplicities
    by_forced = [1]  # coefficient J holds the scaled signed sum over all j with sum J
    for n in ms:
        block = [
            (-1) ** j * binomial(n, j) * (factorial(n) // factorial(n - j)) for j in range(n + 1)
        ]
        merged = [0] * (len(by_forced) + n)
        for a, x in enumerate(by_forced):
            for b, y in enumerate(block):
                merged[a + b] += x * y
        by_forced = merged
    total = sum(ms)
    scaled = sum(c * factorial(total - forced) for forced, c in enumerate(by_forced))
    scale = prod(factorial(n) for n in ms)
    result, rem = divmod(scaled, scale)
    assert rem == 0
    return result
