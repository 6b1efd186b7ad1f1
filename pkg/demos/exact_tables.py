"""Exact Bernoulli / Euler tables and the structure of their denominators.

Everything here is arbitrary-precision rational arithmetic; run it with
`python3 demos/exact_tables.py`.
"""

from fractions import Fraction

from eirreg import (
    bernoulli,
    bernoulli_denominator,
    euler_generating_series,
    euler_number,
    euler_poly_eval,
    euler_zero,
    euler_zero_den_valuation,
    euler_zero_oracle,
    split_k,
)

# The package keeps three independent routes to E_n(0): the Bernoulli
# bridge 2(1 - 2^(n+1)) B_{n+1}/(n+1), a self-contained recursion, and
# plain division of the generating function 2 e^(xt)/(e^t + 1) as a power
# series.  They must agree to the last digit.
print("n : E_n(0) by bridge, by recursion, by series division")
series = euler_generating_series(0, 13)
for n in range(1, 14, 2):
    values = (euler_zero(n), euler_zero_oracle(n), series[n])
    assert values[0] == values[1] == values[2]
    print(f"{n:2d} : {values[0]}")

# Denominators of E_n(0) are pure powers of two: exactly 2^(v2(n+1)).
print("\nn : denominator of E_n(0) = 2^v2(n+1)")
for n in (1, 3, 7, 15, 31, 63):
    print(f"{n:2d} : 2^{euler_zero_den_valuation(n)} = {euler_zero(n).denominator}")

# Euler numbers are scaled midpoint values of the Euler polynomials.
print("\nE_n = 2^n E_n(1/2):")
for n in range(0, 11, 2):
    halfway = 2**n * euler_poly_eval(n, Fraction(1, 2))
    assert halfway == euler_number(n)
    print(f"  E_{n} = {euler_number(n)}")

# Bernoulli denominators follow von Staudt-Clausen: D_2k is the squarefree
# product of the primes p with (p - 1) | 2k.  That induces a split of the
# index k itself, and the part of k prime to the denominator always
# divides the numerator N_2k.
print("\nk : B_2k, structural denominator, split k = k1 * k2")
for k in (1, 6, 7, 12, 25):
    s = split_k(k)
    print(f"{k:2d} : B_{2*k} = {bernoulli(2*k)}  D = {bernoulli_denominator(k)}  "
          f"k1 = {s.k1}, k2 = {s.k2}")
