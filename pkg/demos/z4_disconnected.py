"""
The coset complex of Z4 falls apart
===================================

Z4 has a single proper nontrivial subgroup, {0, 2}.  Its cosets split the
four elements into two pairs, and nothing ties one pair to the other.
"""

import itertools

from cosetshell import betti, coset_poset, order_complex, parse_group_expr, verify_shelling
from cosetshell.cosets import render

g = parse_group_expr("Z4")
poset = coset_poset(g)
k = order_complex(poset)

# each component is a little path: point, edge, point
for comp in k.components():
    print("component:", sorted(render(g, x) for x in comp))

# one independent 0-cycle in reduced homology
print("reduced betti:", betti(k).ranks)

# no ordering of the four edges can be a shelling
orders = list(itertools.permutations(k.facets))
print("shellings among", len(orders), "orders:",
      sum(verify_shelling(k, o).ok for o in orders))
