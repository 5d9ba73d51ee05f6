"""
Minimal idempotent generating sets
==================================

Build one from a seeded spec, check it, close it up, and pull a minimal
set back out of a redundant one.
"""

import random

from idemwreath import closure, counting, genset, wreath

m, n = 3, 2
rng = random.Random(1)
spec = genset.random_spec(m, n, rng)
print("V      =", spec.V)
print("U_i    =", spec.U_locals)
print("splits =", [(pair, [str(f) for f in A]) for pair, A in spec.splits])

W = genset.build_min_genset(spec)
print(len(W), "elements; rank is", counting.rank_EXP(m, n))

# validation recovers the spec from the bare set
print(genset.validate_min_genset(W) == spec)

# closure reaches every element of E(X,P)
res = closure.generate(W)
print(res.cardinality, counting.size_EXP(m, n), res.rounds)

# removing anything breaks it, with a reason
try:
    genset.validate_min_genset(sorted(W)[1:])
except genset.GensetRejected as exc:
    print("rejected:", exc.reason)

# add the whole of G_2 and extract a minimal set again
bigger = W | wreath.generators_G2(m, n)
out = genset.extract_minimal_from(bigger)
print(len(bigger), "->", len(out), genset.is_min_genset(out))

# at (2,2) there are only two minimal sets
for s in genset.enumerate_min_gensets(2, 2):
    print(sorted(str(f) for f in genset.build_min_genset(s)))
