"""
Counting tables
===============

Closed forms and recurrences for idempotents, sizes, ranks and numbers
of minimal generating sets.  All arithmetic is exact.
"""

from idemwreath import counting, tables

# strongly connected complete digraphs, by number of double edges
print(tables.render(tables.TableSpec("wnk")))

# n=2 is the odd one out: no tournament on two vertices is strongly
# connected, so the only option is the double edge
print("w_2 =", counting.w(2), " w_21 =", counting.wnk(2, 1))

# idempotents of T(X,P): the recurrence and the direct sum agree
for m in range(1, 5):
    print(m, [counting.idempotents_TXP_recurrence(m, n) for n in range(1, 5)],
          [counting.idempotents_TXP_direct(m, n) for n in range(1, 5)])

# rank grows like n! * C(m,2) once n is moderately large
print(tables.render(tables.TableSpec("rank", rows=range(1, 6), cols=range(1, 8))))

# the number of minimal idempotent generating sets gets big quickly
big = counting.count_min_gensets(4, 4)
print(f"(4,4): {big}")
print(f"       {float(big):.15e}")

# values off the proven range come from the tables; literal=True gives the bare formula
print("rank(2,1):", counting.rank_EXP(2, 1), "formula:", counting.rank_EXP(2, 1, literal=True))
