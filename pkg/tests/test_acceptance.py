"""Acceptance criteria 1-14, each with its time limit.

Every test records one PASS/FAIL line, printed in the terminal summary.
Caches are cleared first so that the timings are cold.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations, product

import pytest

from idemwreath import closure, counting, genset, wreath
from idemwreath import digraph as dg
from idemwreath import transformation as tr

from conftest import ACCEPTANCE
from golden import EXP_SIZE, IDEMPOTENTS, MIN_GENSETS, MIN_GENSETS_44_DISPLAY, RANK, SUM_WNK, WNK


def _cold():
    counting._w_rows.clear()
    counting._etxp_rows.clear()
    dg._census.cache_clear()
    genset.minimal_howie_sets.cache_clear()


@contextmanager
def criterion(num, text, limit):
    _cold()
    ACCEPTANCE[num] = (False, f"{text} (did not finish)")
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    ok = limit is None or elapsed < limit
    bound = "no time limit" if limit is None else f"limit {limit}s"
    ACCEPTANCE[num] = (ok, f"{text} [{elapsed:.2f}s, {bound}]")
    assert ok, f"criterion {num} took {elapsed:.2f}s, limit {limit}s"


def test_c01_wnk_table():
    with criterion(1, "w_nk matches table for n <= 5", 1):
        for n, row in WNK.items():
            assert [counting.wnk(n, k) for k in range(len(row))] == row
        assert counting.wnk(5, 3) == 13660 and counting.wnk(4, 2) == 186


def test_c02_sum_wnk_table():
    with criterion(2, "sum of w_nk matches table for n <= 8", 1):
        assert [counting.sum_wnk(n) for n in range(9)] == SUM_WNK


def test_c03_idempotent_table():
    with criterion(3, "|E(T(X,P))| recurrence and direct formula match 36 values", 10):
        for m, n in product(range(6), range(6)):
            rec = counting.idempotents_TXP_recurrence(m, n)
            assert rec == counting.idempotents_TXP_direct(m, n) == IDEMPOTENTS[m][n]
        assert counting.idempotents_TXP_recurrence(5, 5) == 977698734939376


def test_c04_exp_size_table():
    with criterion(4, "|E(X,P)| matches table for m,n <= 5", 1):
        for m, n in product(range(6), range(6)):
            assert counting.size_EXP(m, n) == EXP_SIZE[m][n]


def test_c05_rank_table():
    with criterion(5, "rank matches the 10x10 table", 1):
        for m, n in product(range(1, 11), range(1, 11)):
            assert counting.rank_EXP(m, n) == RANK[m - 1][n - 1]


def test_c06_min_genset_table():
    with criterion(6, "minimal generating set counts match the 4x4 table", 1):
        for m, n in product(range(1, 5), range(1, 5)):
            expected = MIN_GENSETS[m - 1][n - 1]
            value = counting.count_min_gensets(m, n)
            if expected is None:
                assert f"{float(value):.15e}" == MIN_GENSETS_44_DISPLAY
            else:
                assert value == expected


def test_c07_digraph_oracle():
    with criterion(7, "brute-force census equals w_nk for n <= 5", 30):
        for n in range(6):
            for k in range(n * (n - 1) // 2 + 1):
                assert dg.brute_force_wnk(n, k) == counting.wnk(n, k)


def test_c08_idempotent_oracle():
    with criterion(8, "exhaustive f*f == f counts at (2,2),(2,3),(3,2),(3,3)", 120):
        for (m, n), expected in {(2, 2): 21, (2, 3): 256, (3, 2): 189, (3, 3): 9028}.items():
            assert wreath.count_idempotents_exhaustive(m, n) == expected == IDEMPOTENTS[m][n]


def test_c09_closure_oracle():
    with criterion(9, "closure of E(T(X,P)) has size |E(X,P)| at (2,2),(3,2),(2,3)", 120):
        for (m, n), expected in {(2, 2): 41, (3, 2): 1371, (2, 3): 1942}.items():
            res = closure.generate(wreath.enumerate_idempotents(m, n), "monoid")
            assert res.cardinality == expected == counting.size_EXP(m, n)


def test_c10_digraph_criterion_equivalence():
    with criterion(10, "digraph criterion agrees with closure on all 64 subsets at n=3", 10):
        pairs = [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j]
        passing = {}
        for r in range(len(pairs) + 1):
            for U in combinations(pairs, r):
                ok = genset.howie_check(U, 3)
                assert ok == genset.howie_check_by_closure(U, 3)
                passing[r] = passing.get(r, 0) + ok
        assert passing[3] == 2
        assert [passing[3 + k] for k in (1, 2, 3)] == [counting.wnk(3, k) for k in (1, 2, 3)] == [6, 6, 1]


def test_c11_genset_round_trip():
    with criterion(11, "100 seeded specs per size build, validate and generate", 300):
        for m, n in [(2, 2), (2, 3), (3, 2)]:
            for seed in range(100):
                spec = genset.random_spec(m, n, random.Random(seed))
                W = genset.build_min_genset(spec)
                assert len(W) == counting.rank_EXP(m, n)
                assert genset.validate_min_genset(W) == spec
                if (m, n) != (2, 3):
                    assert closure.generates_S(W)


def test_c12_min_genset_census():
    with criterion(12, "exactly 2 of the 54264 six-subsets at (2,2) generate S", 600):
        E = sorted(wreath.enumerate_idempotents(2, 2))
        assert len(E) == 21
        hits = [c for c in combinations(E, 6) if closure.generates_S(c, m=2, n=2)]
        assert len(hits) == counting.count_min_gensets(2, 2) == 2
        for W in hits:
            genset.validate_min_genset(W)


def test_c13_containment():
    with criterion(13, "extraction from 50 random idempotent supersets at (2,2)", 300):
        rng = random.Random(13)
        E = sorted(wreath.enumerate_idempotents(2, 2))
        for _ in range(50):
            base = genset.build_min_genset(genset.random_spec(2, 2, rng))
            rest = [f for f in E if f not in base]
            U = base | set(rng.sample(rest, rng.randrange(len(rest) + 1)))
            out = genset.extract_minimal_from(U)
            assert out <= U
            genset.validate_min_genset(out)
            assert closure.generates_S(out)


def test_c14_determinism():
    with criterion(14, "closure dumps byte-identical for 1 and 4 workers", None):
        for m, n in [(2, 2), (3, 2), (2, 3)]:
            gens = wreath.enumerate_idempotents(m, n)
            one = closure.generate(gens, workers=1)
            four = closure.generate(gens, workers=4)
            assert one.elements == four.elements
            assert "\n".join(one.dump_lines()).encode() == "\n".join(four.dump_lines()).encode()
