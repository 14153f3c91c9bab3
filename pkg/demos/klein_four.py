"""
The Klein four-group as a product of two cyclic groups
======================================================

With two factors of order 2 the labels come from pivot positions: a subgroup
is read as a subspace of GF(2)^2 and each factor is a coordinate.
"""

from cosetshell import (all_subgroups, betti, build_context, coset_poset, falling_chains,
                        labeled_hasse, order_complex, parse_group_expr, predicted_spheres,
                        subgroup_pivots, verify_coel)
from cosetshell.cosets import render

g = parse_group_expr("Z2 x Z2")

# pivot positions of each subgroup, 1-based over the factors
for h in all_subgroups(g):
    print(sorted(h), "->", sorted(subgroup_pivots(g, h, 2)))

lh = labeled_hasse(build_context(g))
print("EL:", verify_coel(lh).ok)
print("falling chains:", len(falling_chains(lh)))

k = order_complex(coset_poset(g))
print("reduced betti:", betti(k).ranks)
print("predicted (dimension, spheres):", predicted_spheres(g))
print("facets:", len(k.facets))
for f in k.facets[:3]:
    print("  ", [render(g, x) for x in sorted(f, key=lambda x: len(x.elements))])
