"""
Labelling the coset lattice of Z6
=================================

Every cover relation of the coset lattice gets an integer label.  Reading
chains from the top down, each interval has exactly one strictly increasing
chain, which is what makes the lexicographic facet order a shelling.
"""

from cosetshell import (betti, build_context, coset_poset, facet_order_from_labels,
                        falling_chains, labeled_hasse, order_complex, parse_group_expr,
                        verify_coel, verify_shelling)
from cosetshell.cosets import render
from cosetshell.dot import hasse_dot
from cosetshell.labeling import dump_labels

g = parse_group_expr("Z6")

# "prime" levels use the prime itself as the label size: -2, -3 or 0 on edges
# that drop into a distinguished subgroup, +2 or +3 otherwise
lh = labeled_hasse(build_context(g, "prime"))
print(dump_labels(lh))

report = verify_coel(lh)
print("EL on", report.intervals, "intervals:", report.ok)

k = order_complex(coset_poset(g))
order = facet_order_from_labels(lh, report)
print("first facet:", [render(g, x) for x in order[0]])
print("label order shells the complex:", verify_shelling(k, order).ok)

# weakly decreasing chains are the spheres of the bouquet
for chain in falling_chains(lh):
    print("falling:", [render(g, x) for x in chain], lh.word(chain))
print("reduced betti:", betti(k).ranks)

# a Graphviz picture of the labelled lattice
with open("z6_labels.dot", "w") as fh:
    fh.write(hasse_dot(g, lh.lattice, lh.labels))
