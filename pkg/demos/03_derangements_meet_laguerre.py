"""
Multiset derangements equal Laguerre linearization coefficients
===============================================================

With n_i letters for address i, count arrangements where no letter
reaches its own address. The same numbers appear as
(-1)^N times the integral of L_{n_1} ... L_{n_k} e^{-x}.
"""

import itertools

from evengillis import (
    linearization_coefficient,
    multiset_derangements_enum,
    multiset_derangements_ie,
    verify_identity,
)

# Two addresses: a derangement exists only when the counts match, and then
# it is unique (swap the blocks wholesale).
print("k=2:", [[multiset_derangements_ie((a, b)) for b in range(5)] for a in range(5)])

# Three addresses: brute force, inclusion-exclusion and the integral.
for spec in [(1, 1, 1), (2, 1, 1), (2, 2, 2), (3, 3, 3)]:
    print(
        spec,
        multiset_derangements_enum(spec),
        multiset_derangements_ie(spec),
        linearization_coefficient(spec),
    )

# Sweep a box of specs; any mismatch would show up as holds=False.
reports = [verify_identity(s) for s in itertools.product(range(7), repeat=3)]
print(f"{sum(r.holds for r in reports)} of {len(reports)} specs agree")

# Nothing restricts the integral side to three factors.
reports = [verify_identity(s) for s in itertools.product(range(5), repeat=4)]
print(f"k=4: {sum(r.holds for r in reports)} of {len(reports)} specs agree")
