"""
Wreath coordinates and idempotents
==================================

Elements of T(X,P) as [f_1, ..., f_m; fbar], acting on the right.
"""

from idemwreath import transformation as tr
from idemwreath import wreath
from idemwreath.wreath import PartitionMap

T = tr.Transformation.from_one_based

# two blocks of size three: swap the blocks, rotate the second one
f = PartitionMap.from_one_based([[1, 2, 3], [2, 3, 1]], [2, 1])
g = PartitionMap.from_one_based([[1, 1, 3], [3, 2, 1]], [1, 1])
print("f  =", f)
print("g  =", g)
print("fg =", f * g)

# the same product in T_6 after flattening block i to points 3(i-1)+1..3i
print(wreath.flatten(f) * wreath.flatten(g) == wreath.flatten(f * g))

# idempotency reads off the coordinates; compare with f*f == f by brute force
fast = wreath.enumerate_idempotents(2, 3)
slow = {x for x in wreath.all_elements(2, 3) if x * x == x}
print(len(fast), len(slow), fast == slow)

# e_{ij;f} carries a permutation and is still idempotent
e = wreath.make_eijf(3, 3, 1, 2, T([2, 3, 1]))
print(e, wreath.is_idempotent(e), wreath.classify(e))
