"""
Generating E_n from rank n-1 idempotents
========================================

A set U of idempotents e_ij generates E_n exactly when the digraph with
an edge i -> j for each e_ij is strongly connected and complete.
"""

from itertools import combinations

from idemwreath import closure, counting, genset
from idemwreath import digraph as dg
from idemwreath import transformation as tr

n = 4
pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

# check a few sets both ways
for U in [[(1, 2), (2, 3), (3, 4), (4, 1)],
          [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4)],
          [(1, 2), (2, 3), (3, 1), (1, 4), (4, 2), (3, 4)]]:
    print(U, genset.howie_check(U, n), genset.howie_check_by_closure(U, n))

# count generating sets by size and compare with w_nk
for k in range(4):
    size = n * (n - 1) // 2 + k
    hits = sum(genset.howie_check(U, n) for U in combinations(pairs, size))
    print(f"|U| = {size}: {hits} generating sets, w_{n}{k} = {counting.wnk(n, k)}")

# strip double edges until a strongly connected tournament is left
full = dg.CompleteDigraph(n, [dg.EdgeState.DOUBLE] * 6)
small = dg.reduce_to_minimal_scc(full)
print(sorted(small.edges()), dg.is_strongly_connected(small.to_digraph()))

# those six idempotents generate all 233 elements of E_4
gens = [tr.make_eij(n, i, j) for i, j in small.edges()]
print(closure.generate(gens).cardinality)
