"""
Why A4 cannot be shelled
========================

A4 is solvable but not supersolvable, and its coset complex is not even
sequentially Cohen-Macaulay.  The 2-skeleton is where things break, and it
coincides with the cosets that meet the Klein four subgroup in the right way.
"""

from cosetshell import (betti, c0_subposet, classify, coset_poset, is_seq_cm,
                        normal_subgroups, order_complex, parse_group_expr, pure_skeleton,
                        quotient_group)

g = parse_group_expr("A4")
print(classify(g))

k = order_complex(coset_poset(g))
print("dimension", k.dim, "f-vector", k.f_vector())
print("reduced betti:", betti(k).ranks)

# the link test fails on the pure 2-skeleton, at the empty face
res = is_seq_cm(k)
print("sequentially CM:", res.ok, "skeleton", res.skeleton, "degree", res.degree)

# the subposet attached to V4 has the pure 2-skeleton as its order complex
v4 = next(n for n in normal_subgroups(g) if len(n) == 4)
c0 = order_complex(c0_subposet(g, v4))
print("C0 equals the pure 2-skeleton:",
      set(c0.facets) == set(pure_skeleton(k, 2).facets))

# and it carries the homology of the quotient A4/V4 = Z3, three points
q, _ = quotient_group(g, v4)
print("betti C0:", betti(c0).ranks, " betti C(Z3):", betti(order_complex(coset_poset(q))).ranks)
