"""The order-two outer twist and what it does on each layer.

The twist is conjugation by theta_elt = sqrt(-1)*(e_n - e_{2n}).  This
script shows it permuting the basis on the vector side, acting on torus
coordinates, and commuting with the odd-rank embedding.
"""

import random

from gspin import (
    CliffordElement,
    GPinElement,
    TorusCoordinates,
    coords_of,
    even_space,
    i_std,
    odd_space,
    random_gspin,
    theta,
    theta_circ_matrix,
    theta_element,
    theta_on_coords,
    torus_point,
)

n = 3
sp = even_space(n)
th = GPinElement(theta_element(sp))
print("theta element:", th.elt)
print("squares to one:", (th * th).elt == CliffordElement.one(sp))
print("vector-side matrix (negates the basis, swapping e_n with e_2n):")
print(theta_circ_matrix(n))
print("pr_circ of the element matches:", th.pr_circ() == theta_circ_matrix(n))

rng = random.Random(11)
g = random_gspin(sp, rng)
tg = theta(g)
print("\ntwist is an involution on a random element:", theta(tg) == g)
print("twist preserves the spinor norm:", tg.spinor_norm() == g.spinor_norm())

s = TorusCoordinates((2, 3, 4, 5))  # (s0, s1, ..., sn)
t = torus_point(s)
print("\ntorus point with coordinates", s)
print("theta of it has coordinates", theta_on_coords(s))
print("which matches twisting the element:", coords_of(theta(t)) == theta_on_coords(s))

# the odd-rank subgroup is fixed pointwise
small = odd_space(n)
h = random_gspin(small, rng)
emb = i_std(h)
print("\nodd-rank element embeds into the even group and survives the twist:")
print("theta fixes it:", theta(emb) == emb)
