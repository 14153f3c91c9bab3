"""
Pivot sets over a prime field
=============================

Row reduction over GF(p) picks out leading columns.  Between two nested
subspaces whose pivot sets differ, there is one intermediate subspace that
adds only the largest new pivot and one that drops only the smallest.
"""

import numpy as np

from cosetshell import GFMatrix, pivot_set, rref, w_down, w_up

p = 3
u1 = GFMatrix.of(p, [[0, 0, 1, 2]], 4)
u2 = GFMatrix.of(p, [[1, 2, 0, 1], [0, 1, 1, 0], [0, 0, 1, 2], [0, 0, 0, 1]], 4)

print("rref(U2):")
print(np.array(rref(u2).rows))
print("I(U1) =", sorted(pivot_set(u1)), " I(U2) =", sorted(pivot_set(u2)))

up = w_up(p, u1, u2)
down = w_down(p, u1, u2)
print("w_up pivots  ", sorted(pivot_set(up)))
print("w_down pivots", sorted(pivot_set(down)))
