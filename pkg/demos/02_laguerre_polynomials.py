"""
Laguerre polynomials with exact coefficients
============================================

Build L_n from the three-term recurrence and from the closed sum, and
integrate products against e^{-x} exactly via moments.
"""

from evengillis import integrate_exp_weight, laguerre, laguerre_explicit

for n in range(5):
    print(f"L_{n}(x) = {laguerre(n)}")

# Recurrence and closed sum are built independently and must agree.
assert all(laguerre(n) == laguerre_explicit(n) for n in range(21))

# An integral of x^m e^{-x} over [0, inf) is m!, so every polynomial
# integral is a finite sum. The Laguerre family is orthonormal:
print()
print("Gram matrix <L_m, L_n> for m, n < 6")
for m in range(6):
    print(" ".join(str(integrate_exp_weight(laguerre(m) * laguerre(n))) for n in range(6)))
