"""
Finite fields and polynomials over them
=======================================

Fields GF(p^k) are built with a fixed modulus so results are reproducible.
Elements are plain integers whose base-p digits are the coefficients.
"""

from ffcurves import make_field
from ffcurves.unipoly import UniPoly, count_irreducible

# %%
# The modulus of GF(9) is the smallest monic irreducible quadratic.
F9 = make_field(3, 2)
print(F9, "modulus", F9.modulus)

x = F9.elem((0, 1))
print("x^2 =", (x * x).coeffs, " x^8 =", (x**8).coeffs)

# %%
# The count of monic irreducibles of degree n should match the necklace
# formula: the sum of mu(n/e) q^e over divisors e of n, divided by n.
F4 = make_field(2, 2)
for n in range(1, 6):
    print(n, count_irreducible(F4, n))

# %%
# Factorization types of a few polynomials in GF(9)[T].
T = UniPoly.T(F9)
for f in (T**4 + 1, T**3 - T - 1, T**9 - T):
    print(f, "->", f.factor_type())
