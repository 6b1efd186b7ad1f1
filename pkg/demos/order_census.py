"""Census of E-irregularity certificates driven by the order of 2 mod p.

Run with `python3 demos/order_census.py`.
"""

from eirreg import artin_constant, e_irregular_indices, profile, scan, sieve_primes

# Let r be the order of 2 mod p and m the even one of r, 2r.  Whenever
# m < p - 1, the index n = m - 1 is a ready-made E-irregularity witness:
# p divides the numerator of E_n(0) because 2^m = 1 mod p.  The census
# splits primes into the two exceptional order classes and the certified
# remainder.
print("profiles of a few primes:")
for p in (5, 7, 17, 23, 73):
    prof = profile(p)
    klass = "half-order class" if prof.in_p1 else "full-order class" if prof.in_p2 else "certified"
    extra = f", witness n = {prof.witness}" if prof.witness is not None else ""
    print(f"  p = {p:2d}: r = {prof.r:2d}, m = {prof.m:2d}  ->  {klass}{extra}")

# Certificates are real: the witness index always lands in the exact sieve.
for p in (17, 73, 89):
    w = profile(p).witness
    assert w in e_irregular_indices(p)
print("\nwitnesses for 17, 73, 89 confirmed by the exact modular sieve")

# The half-order class (p = 3 mod 4 with ord = (p-1)/2) forces 2 to be a
# quadratic residue, hence p = 7 mod 8.  Both 24n+7 and 24n+23 members
# exist though; 23 is the least member with residue 23 mod 24.
members = [p for p in [int(q) for q in sieve_primes(2000) if q >= 5] if profile(p).in_p1]
assert all(p % 8 == 7 for p in members)
by_residue = {7: [], 23: []}
for p in members:
    by_residue[p % 24].append(p)
print(f"\nhalf-order class up to 2000: {len(members)} members, all 7 mod 8")
print(f"  residue 7  mod 24: {len(by_residue[7]):3d}  first {by_residue[7][:5]}")
print(f"  residue 23 mod 24: {len(by_residue[23]):3d}  first {by_residue[23][:5]}")

# Full census at 20000, with the Artin-constant reference line.  Heuristic:
# the full-order class has density A = 0.3739... among primes, and the
# reference curve (0.875 - A) x / log x tracks the certified count only
# loosely at desk scale.
report = scan(20000)
artin = artin_constant(10**6)
print(f"\nscan to {report.x}: pi = {report.pi_x}, half-order = {report.count_p1}, "
      f"full-order = {report.count_p2}, certified = {report.certified_count}")
print(f"certified split mod 4: {report.class_1mod4} / {report.class_3mod4}, "
      f"mod 6: {report.class_1mod6} / {report.class_5mod6}")
print(f"Artin constant A = {str(artin.value)[:12]}... "
      f"(truncation tail < {artin.tail_bound})")
print(f"reference curve value at x: {report.bound_value:.1f}")
