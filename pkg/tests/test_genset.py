import random
from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from idemwreath import closure, counting, genset, wreath
from idemwreath import transformation as tr
from idemwreath.genset import GensetRejected, InvalidSpec, MinGenSetSpec

T = tr.Transformation.from_one_based


def all_pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def test_digraph_criterion_all_subsets_n3():
    by_size = {}
    for r in range(7):
        for U in combinations(all_pairs(3), r):
            ok = genset.howie_check(U, 3)
            assert ok == genset.howie_check_by_closure(U, 3)
            by_size[r] = by_size.get(r, 0) + ok
    assert [by_size[r] for r in range(3, 7)] == [2, 6, 6, 1]
    assert by_size[0] == by_size[1] == by_size[2] == 0


@settings(max_examples=40, deadline=None)
@given(st.sets(st.sampled_from(all_pairs(4))))
def test_digraph_criterion_random_n4(U):
    assert genset.howie_check(U, 4) == genset.howie_check_by_closure(U, 4)


def test_digraph_criterion_examples():
    assert genset.howie_check([(1, 2), (2, 1)], 2)
    assert not genset.howie_check([(1, 2)], 2)
    assert genset.howie_check([(1, 2), (2, 3), (3, 1)], 3)


@pytest.mark.parametrize("n", range(2, 5))
def test_digraph_criterion_counts_by_size(n):
    for k in range(comb(n, 2) + 1):
        hits = sum(genset.howie_check(U, n) for U in combinations(all_pairs(n), comb(n, 2) + k))
        assert hits == counting.wnk(n, k)


def test_digraph_criterion_186():
    assert sum(genset.howie_check(U, 4) for U in combinations(all_pairs(4), 8)) == 186


def test_minimal_howie_sets():
    assert genset.minimal_howie_sets(2) == (((1, 2), (2, 1)),)
    assert len(genset.minimal_howie_sets(3)) == 2
    assert len(genset.minimal_howie_sets(4)) == 24


def test_xi_phi():
    assert genset.xi_phi_of(all_pairs(3), 3) == ([(1, 2), (1, 3), (2, 3)], [])
    xi, phi = genset.xi_phi_of([(1, 2), (2, 3), (3, 1)], 3)
    assert xi == [] and len(phi) == 3
    assert genset.xi_phi_of([(1, 2), (2, 1), (2, 3), (3, 1)], 3) == ([(1, 2)], [(2, 3), (3, 1)])
    with pytest.raises(InvalidSpec):
        genset.xi_phi_of([(1, 2), (2, 3)], 3)


def spec22(A=(tr.identity(2),)):
    U = [[(1, 2), (2, 1)]] * 2
    return MinGenSetSpec.create(2, 2, U, [(1, 2), (2, 1)], {(1, 2): A})


def test_build_W_2_2():
    W = genset.build_W(spec22())
    swap = T([2, 1])
    assert W == {wreath.make_eijf(2, 2, 1, 2, tr.identity(2)),
                 wreath.make_eijf(2, 2, 2, 1, tr.inverse(swap))}
    sgp = closure.generate(W, "semigroup")
    assert sgp.cardinality == factorial(2) ** 2 * (2 ** 2 - 2) == 8
    assert all(wreath.classify(f).in_S3 for f in sgp.decoded())
    assert {f for f in wreath.all_elements(2, 2) if wreath.classify(f).in_S3} == set(sgp.decoded())


def test_build_W_sizes_and_S3():
    rng = random.Random(11)
    for m, n in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        for _ in range(5):
            spec = genset.random_spec(m, n, rng)
            W = genset.build_W(spec)
            assert len(W) == factorial(n) * comb(m, 2)
            assert all(wreath.is_idempotent(f) for f in W)
            full = genset.build_min_genset(spec)
            assert len(full) == counting.rank_EXP(m, n) == m * counting.rho(n) + len(W)


def test_S3_generated_by_W_3_2():
    spec = genset.random_spec(3, 2, random.Random(5))
    sgp = closure.generate(genset.build_W(spec), "semigroup")
    s3 = sum(1 for f in wreath.all_elements(3, 2) if wreath.classify(f).in_S3)
    assert sgp.cardinality == s3 == 2 ** 3 * (27 - 6)


def test_spec_check_errors():
    with pytest.raises(InvalidSpec, match="local sets"):
        MinGenSetSpec.create(2, 2, [[(1, 2), (2, 1)]], [(1, 2), (2, 1)], {(1, 2): [tr.identity(2)]}).check()
    with pytest.raises(InvalidSpec):
        MinGenSetSpec.create(2, 2, [[(1, 2)], [(1, 2), (2, 1)]], [(1, 2), (2, 1)],
                             {(1, 2): [tr.identity(2)]}).check()
    with pytest.raises(InvalidSpec):
        spec22(A=()).check()
    with pytest.raises(InvalidSpec):
        spec22(A=tuple(tr.symmetric_group(2))).check()


def test_spec_json_round_trip():
    rng = random.Random(2)
    for m, n in [(2, 2), (3, 3), (4, 2)]:
        spec = genset.random_spec(m, n, rng)
        assert MinGenSetSpec.from_json(spec.to_json()) == spec
    with pytest.raises(InvalidSpec):
        MinGenSetSpec.from_json({"m": 2})


def test_validate_round_trip():
    rng = random.Random(7)
    for m, n in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]:
        spec = genset.random_spec(m, n, rng)
        W = genset.build_min_genset(spec)
        assert genset.validate_min_genset(W) == spec
        assert genset.is_min_genset(W)


def test_validate_mutations():
    spec = genset.random_spec(2, 3, random.Random(1))
    W = sorted(genset.build_min_genset(spec))
    e2 = [f for f in W if wreath.eijf_parts(f) is not None]
    with pytest.raises(GensetRejected, match="split not covering S_n"):
        genset.validate_min_genset([f for f in W if f != e2[0]])
    i, j, perm = wreath.eijf_parts(e2[0])
    twin = wreath.make_eijf(2, 3, j, i, tr.inverse(perm))
    with pytest.raises(GensetRejected, match="not disjoint"):
        genset.validate_min_genset(W + [twin])
    with pytest.raises(GensetRejected, match="repeated"):
        genset.validate_min_genset(W + [W[0]])
    non_idem = wreath.make_block_embed(2, 3, 1, T([2, 3, 1]))
    with pytest.raises(GensetRejected, match="not idempotent"):
        genset.validate_min_genset(W[1:] + [non_idem])
    local = [f for f in W if wreath.block_embed_parts(f) is not None]
    with pytest.raises(GensetRejected, match="block 1|block 2"):
        genset.validate_min_genset([f for f in W if f != local[0]])
    const = wreath.make_block_embed(2, 3, 1, T([1, 1, 1]))
    with pytest.raises(GensetRejected, match="rank n-1"):
        genset.validate_min_genset(W + [const])
    with pytest.raises(GensetRejected, match="shape"):
        genset.validate_min_genset(W + [wreath.identity(2, 2)])
    with pytest.raises(GensetRejected):
        genset.validate_min_genset([])


def test_validate_rejects_extra_local():
    spec = genset.random_spec(2, 3, random.Random(4))
    W = genset.build_min_genset(spec)
    used = {tr.eij_pair(wreath.block_embed_parts(f)[1]) for f in W
            if wreath.block_embed_parts(f) and wreath.block_embed_parts(f)[0] == 1}
    spare = next(p for p in all_pairs(3) if p not in used)
    extra = wreath.make_block_embed(2, 3, 1, tr.make_eij(3, *spare))
    with pytest.raises(GensetRejected):
        genset.validate_min_genset(W | {extra})


@pytest.mark.parametrize("m,n,expected", [(2, 2, 2), (2, 3, 248), (3, 2, 46)])
def test_enumerate_counts(m, n, expected):
    specs = list(genset.enumerate_min_gensets(m, n))
    assert len(specs) == len(set(specs)) == expected == counting.count_min_gensets(m, n)
    gensets = {frozenset(genset.build_min_genset(s)) for s in specs}
    assert len(gensets) == expected


def test_enumerate_budget():
    with pytest.raises(ValueError):
        list(genset.enumerate_min_gensets(3, 3, budget=1000))


def test_enumerated_sets_generate_2_2():
    for spec in genset.enumerate_min_gensets(2, 2):
        assert closure.generates_S(genset.build_min_genset(spec))


def test_random_spec_deterministic():
    a = genset.random_spec(3, 3, random.Random(42))
    b = genset.random_spec(3, 3, random.Random(42))
    assert a == b
    a.check()


def test_extract_examples():
    spec = genset.random_spec(2, 2, random.Random(0))
    W = genset.build_min_genset(spec)
    assert genset.extract_minimal_from(W) == W
    E = wreath.enumerate_idempotents(2, 2)
    out = genset.extract_minimal_from(E)
    assert out <= E and len(out) == 6 and genset.is_min_genset(out)
    assert closure.generates_S(out)


def test_extract_with_redundant_elements():
    minimal = [frozenset(genset.build_min_genset(s)) for s in genset.enumerate_min_gensets(2, 2)]
    E = sorted(wreath.enumerate_idempotents(2, 2))
    rng = random.Random(9)
    for W in minimal:
        extra = rng.sample([f for f in E if f not in W], 3)
        out = genset.extract_minimal_from(set(W) | set(extra))
        assert frozenset(out) in minimal


def test_extract_3_2():
    spec = genset.random_spec(3, 2, random.Random(3))
    W = genset.build_min_genset(spec)
    extra = set(wreath.generators_G2(3, 2)) | set(wreath.generators_G1(3, 2))
    out = genset.extract_minimal_from(W | extra)
    assert out <= W | extra and genset.is_min_genset(out)
    assert closure.generates_S(out)


def test_extract_rejects_non_generating():
    W = sorted(genset.build_min_genset(genset.random_spec(2, 2, random.Random(0))))
    with pytest.raises(ValueError):
        genset.extract_minimal_from(W[1:])
    with pytest.raises(ValueError):
        genset.extract_minimal_from(W + [wreath.make_block_embed(2, 2, 1, T([2, 1]))])


def test_irredundant_generating_set_of_E3_above_rank():
    # four singular maps generating E_3 with no generating proper subset, though rank(E_3) = 3,
    # so a generating set need not contain one of minimum size
    gens = [T(x) for x in ([1, 1, 2], [1, 3, 1], [1, 2, 2], [2, 3, 2])]
    assert closure.generate(gens, "monoid").cardinality == 22
    for r in range(4):
        for sub in combinations(gens, r):
            assert closure.generate(sub, "monoid", ambient=3).cardinality < 22
    assert counting.rho(3) == 3
