"""Conjugacy fingerprints: when does the spin character separate orbits?

A fingerprint bundles the spinor norm with characteristic polynomials in
the standard and both half-spin representations.  The script twists an
element by the outer involution (same standard data, swapped half-spin
blocks), runs the small-rank discriminator, and exhibits the weight-level
reason the minus block tells the merged orbits apart.
"""

import random

from gspin import (
    even_space,
    fingerprint,
    is_conjugate_gpin,
    is_conjugate_gspin,
    is_outer_conjugate,
    random_gspin,
    spin7_orbit_discriminator,
    spin_minus_irreducibility_weight_check,
    theta,
    torus_point,
)

rng = random.Random(17)
sp = even_space(4)
g = torus_point((1, 2, 3, 5, 7))
h = theta(g)

fg, fh = fingerprint(g), fingerprint(h)
print("regular torus point vs its outer twist:")
print("  same std charpoly:     ", fg.cp_std == fh.cp_std)
print("  swapped half-spin data:", fg.cp_spin_plus == fh.cp_spin_minus and fg.cp_spin_minus == fh.cp_spin_plus)
print("  GSpin-conjugate:       ", is_conjugate_gspin(g, h))
print("  outer-conjugate:       ", is_outer_conjugate(g, h))
print("  GPin-conjugate:        ", is_conjugate_gpin(g, h))

a = random_gspin(sp, rng)
print("\nactual conjugates agree on everything:")
print("  ", is_conjugate_gspin(g, a * g * a.inverse()))

print("\nsemisimple orbits in the rank-3 group, by half-multiset balance:")
for weights in ((6, 4, 2), (8, 4, 2), (2, 0, 0), (0, 0, 0)):
    merged = spin7_orbit_discriminator(*weights)
    word = "merge" if merged else "stay separate"
    print(f"  weights {weights}: the two orbits {word}")

print("\nweight matching for the minus block at n=4 (which factor sees which weight):")
for lam in ((8, 4, 2), (6, 4, 2)):
    verdict = spin_minus_irreducibility_weight_check(4, lam)
    print(f"  lambda={lam}: + matches {verdict['+']}, - matches {verdict['-']}")
