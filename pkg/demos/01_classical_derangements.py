"""
Classical derangements and the nearest integer to n!/e
======================================================

Letters and envelopes: count the ways to place n distinct letters so that
none lands in its own envelope.
"""

from fractions import Fraction
import math

from evengillis import classical_derangements, multiset_derangements_enum

# The alternating sum gives exact integers.
print("n   D(n)")
for n in range(11):
    print(f"{n:<3} {classical_derangements(n)}")

# The same numbers come out of the multiset counter when every address
# receives exactly one letter.
assert all(
    classical_derangements(n) == multiset_derangements_enum((1,) * n) for n in range(8)
)

# D(n) is the integer nearest to n!/e. The gap is an alternating tail whose
# size is below its first term, 1/(n+1), so it never reaches 1/2.
for n in (1, 5, 10, 18):
    gap = sum(Fraction((-1) ** j * math.factorial(n), math.factorial(j)) for j in range(n + 1, n + 30))
    print(f"n={n:2d}: n!/e - D(n) ~ {float(gap):+.3e}")
