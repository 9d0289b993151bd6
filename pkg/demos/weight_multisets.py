"""Integer multisets attached to a highest weight, two ways.

The direct route shifts the weight by the half-sum data and takes signed
subset sums; the slow route evaluates every diagonal spin weight.  Both
agree, and two notions of regularity fall out of the same numbers.
"""

from gspin import (
    b_shift,
    ht_multiset,
    ht_via_spin_weights,
    is_spin_regular,
    is_std_regular,
)

n = 3
for lam in ((0, 0, 0, 0), (0, 3, 2, 1), (0, 16, 4, 1)):
    print(f"lambda = {lam}: shifted tuple b = {b_shift(lam)}")
    for eps in (1, -1):
        direct = ht_multiset(n, eps, lam)
        slow = ht_via_spin_weights(n, eps, lam)
        flat = sorted(direct.values.elements())
        print(f"  eps={eps:+d}: multiset {flat} (routes agree: {direct == slow})")
    print(f"  std-regular: {is_std_regular(lam)}   spin-regular: {is_spin_regular(lam)}")

print("\nspin-regular forces std-regular; the converse fails:")
lam_gap = (0, 1, 1, 1)  # shifts to (-3, 3, 2, 1), and 3 = 2 + 1 collides two subset sums
print(f"  {lam_gap} is std-regular {is_std_regular(lam_gap)} but spin-regular {is_spin_regular(lam_gap)}")
