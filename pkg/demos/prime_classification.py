"""Classifying primes: Bernoulli-irregular, E-irregular, and the Wieferich boundary.

Run with `python3 demos/prime_classification.py`.
"""

from eirreg import classify, is_wieferich, sieve_primes

# A prime is E-irregular when it divides the numerator of E_n(0) for some
# odd n <= p - 2.  The sieve works modulo p via the alternating power sum
# sum_{a<p} (-1)^a a^n, so no big rationals are involved.
print("first E-irregular primes and their index sets:")
for p in [int(q) for q in sieve_primes(60) if q >= 3]:
    cls = classify(p)
    if cls.is_e_irregular:
        tags = []
        if cls.is_irregular:
            tags.append(f"also Bernoulli-irregular at {sorted(cls.irregular_indices)}")
        print(f"  p = {p:2d}: E-irregular at {sorted(cls.e_irregular_indices)}"
              + (f"  ({'; '.join(tags)})" if tags else ""))

# 17 is the least E-irregular prime (witness index 7), a fact of this
# computation: no smaller odd prime divides any eligible numerator.
assert classify(17).e_irregular_indices == frozenset({7})

# Every Bernoulli-irregular index 2k comes with the E-irregular companion
# 2k - 1, so classical irregular primes are a subset of E-irregular ones.
# classify() re-checks that containment on every call; count both kinds.
sweep = [classify(p) for p in [int(q) for q in sieve_primes(500) if q >= 3]]
irregular = [c.p for c in sweep if c.is_irregular]
e_irregular = [c.p for c in sweep if c.is_e_irregular]
print(f"\nup to 500: {len(irregular)} Bernoulli-irregular primes {irregular}")
print(f"up to 500: {len(e_irregular)} E-irregular primes (a superset)")
assert set(irregular) <= set(e_irregular)

# The boundary index n = p - 2 is special: it is E-irregular exactly for
# Wieferich primes, those with 2^(p-1) = 1 mod p^2.  The first one is 1093.
print("\nWieferich check at the boundary index:")
for p in (1091, 1093, 3511):
    marker = "Wieferich" if is_wieferich(p) else "ordinary"
    print(f"  p = {p}: {marker}")
cls = classify(1093)
assert 1093 - 2 in cls.e_irregular_indices
print("  1093 is E-irregular at its own boundary index 1091")
