"""Exact relative refined class numbers and their E-irregularity equivalence.

Run with `python3 demos/class_numbers.py`.
"""

from eirreg import (
    cyclotomic_poly,
    gen_euler_e0,
    relative_refined_class_number,
    sieve_primes,
)

# The computation happens in Z[x]/Phi_{p-1}(x), exact integer coefficients
# throughout.  Each odd character power k contributes the generalised
# Euler value E0(k) = sum_a (-1)^a x^(k ind(a)); their product collapses
# to a plain integer, divisible by 2^(p-2), and the quotient (with a
# parity sign) is the relative refined class number.
p = 11
print(f"worked example p = {p}: ring modulus Phi_10 = {cyclotomic_poly(10)}")
for k in range(1, 10, 2):
    print(f"  E0({k}) coefficients: {gen_euler_e0(p, k).coeffs}")
report = relative_refined_class_number(p)
print(f"  product = {report.product_value} = sign * h * 2^{p-2} with h = {report.h_minus}")

# Across every odd prime p <= 60: p divides h exactly when p is
# E-irregular by the independent modular sieve.  The class numbers grow
# fast and can be negative; divisibility is what matters.
print("\np : h, p | h, E-irregular")
for q in [int(r) for r in sieve_primes(60) if r >= 3]:
    rep = relative_refined_class_number(q)
    assert rep.divisible_by_p == rep.e_irregular
    mark = " <-- agreement at an E-irregular prime" if rep.e_irregular else ""
    print(f"{q:2d} : {rep.h_minus:>13d}  {str(rep.divisible_by_p):5s} {str(rep.e_irregular):5s}{mark}")

print("\nanchors: |h(3)| = |h(5)| = 1; 17 | h(17); 31 | h(31); 37 | h(37)")
assert abs(relative_refined_class_number(3).h_minus) == 1
assert abs(relative_refined_class_number(5).h_minus) == 1
for q in (17, 31, 37):
    assert relative_refined_class_number(q).h_minus % q == 0
print("all anchor facts hold")
