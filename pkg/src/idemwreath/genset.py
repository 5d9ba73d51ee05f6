"""Minimal idempotent generating sets of E_n and of E(X,P).

A minimal idempotent generating set of E(X,P) (for ``m, n >= 2``) is fixed by

* a minimal generating set ``U_i`` of E_n on each block, given as pairs
  ``(r, s)`` standing for the idempotent ``e_rs``;
* a set ``V`` of pairs ``(i, j)`` whose idempotents ``e_ij`` generate
  T_m minus S_m;
* for each pair ``i < j`` with both ``e_ij`` and ``e_ji`` in ``V``, a split
  ``S_n = A_ij | B_ij`` into two non-empty parts.

:class:`MinGenSetSpec` stores exactly this data in canonical form (only
``A_ij`` is stored; ``B_ij`` is its complement).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from . import closure
from . import counting
from . import digraph as dg
from . import transformation as tr
from . import wreath
from .transformation import Transformation
from .wreath import PartitionMap

Pair = tuple[int, int]


class InvalidSpec(ValueError):
    pass


class GensetRejected(ValueError):
    """Raised by :func:`validate_min_genset`; ``reason`` names the failed condition."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def howie_check(U: Iterable[Pair], n: int) -> bool:
    """Do the idempotents ``e_ij``, ``(i, j)`` in ``U``, generate E_n?"""
    g = dg.gamma_of(U, n)
    return g.is_complete() and dg.is_strongly_connected(g)


def howie_check_by_closure(U: Iterable[Pair], n: int) -> bool:
    """Brute-force version of :func:`howie_check`: does the closure contain T_n minus S_n?"""
    gens = [tr.make_eij(n, i, j) for i, j in U]
    singular = n ** n - factorial(n)
    if not gens:
        return singular == 0
    res = closure.generate(gens, "semigroup", ambient=n)
    count = sum(1 for key in res.elements if len(set(key)) < n)
    return count == singular


def xi_phi_of(V: Iterable[Pair], m: int) -> tuple[list[Pair], list[Pair]]:
    """Split the pairs of a generating set ``V`` of T_m minus S_m.

    Returns ``(xi, phi)``: ``xi`` has the pairs ``i < j`` with both
    directions in ``V``; ``phi`` has the pairs present in one direction only.
    """
    V = set(V)
    if not howie_check(V, m):
        raise InvalidSpec("V does not generate T_m minus S_m (its graph is not "
                          "strongly connected and complete)")
    xi = sorted((i, j) for i, j in V if i < j and (j, i) in V)
    phi = sorted((i, j) for i, j in V if (j, i) not in V)
    return xi, phi


@lru_cache(maxsize=None)
def minimal_howie_sets(n: int) -> tuple[tuple[Pair, ...], ...]:
    """All minimal idempotent generating sets of E_n, as sorted pair tuples.

    These are the strongly connected complete digraphs with ``rho(n)`` edges:
    the strongly connected tournaments, or the single double edge when n == 2.
    """
    rho = counting.rho(n)
    extra = rho - comb(n, 2)
    out = []
    for cd in dg.enumerate_complete_digraphs(n, extra):
        g = cd.to_digraph()
        if len(g.edges) == rho and dg.is_strongly_connected(g):
            out.append(tuple(sorted(g.edges)))
    return tuple(sorted(out))


def _perm_key(f: Transformation) -> tuple[int, ...]:
    return f.images


@dataclass(frozen=True)
class MinGenSetSpec:
    m: int
    n: int
    U_locals: tuple[tuple[Pair, ...], ...]
    V: tuple[Pair, ...]
    splits: tuple[tuple[Pair, tuple[Transformation, ...]], ...]

    @classmethod
    def create(cls, m: int, n: int, U_locals: Sequence[Iterable[Pair]], V: Iterable[Pair],
               splits: Mapping[Pair, Iterable[Transformation]]) -> "MinGenSetSpec":
        """Canonicalize.  ``splits`` maps each double pair ``(i, j)`` to ``A_ij``."""
        U = tuple(tuple(sorted(tuple(p) for p in u)) for u in U_locals)
        Vt = tuple(sorted(tuple(p) for p in V))
        canon = tuple(sorted((tuple(pair), tuple(sorted(set(A), key=_perm_key)))
                             for pair, A in splits.items()))
        return cls(m, n, U, Vt, canon)

    def split(self, i: int, j: int) -> tuple[list[Transformation], list[Transformation]]:
        for pair, A in self.splits:
            if pair == (i, j):
                rest = [f for f in tr.symmetric_group(self.n) if f not in set(A)]
                return list(A), rest
        raise KeyError((i, j))

    def xi_phi(self) -> tuple[list[Pair], list[Pair]]:
        return xi_phi_of(self.V, self.m)

    def check(self) -> None:
        """Raise :class:`InvalidSpec` naming the first violated condition."""
        m, n = self.m, self.n
        if len(self.U_locals) != m:
            raise InvalidSpec(f"expected {m} local sets, got {len(self.U_locals)}")
        rho = counting.rho(n)
        for idx, u in enumerate(self.U_locals, 1):
            if not howie_check(u, n):
                raise InvalidSpec(f"U_{idx} does not generate E_n")
            if len(u) != rho:
                raise InvalidSpec(f"U_{idx} has {len(u)} elements, a minimal set has {rho}")
        xi, _ = xi_phi_of(self.V, m)
        keys = [p for p, _ in self.splits]
        if keys != xi:
            raise InvalidSpec(f"splits given for {keys}, double pairs of V are {xi}")
        sn = set(tr.symmetric_group(n))
        for pair, A in self.splits:
            if not A:
                raise InvalidSpec(f"A_{pair} is empty")
            if not set(A) <= sn:
                raise InvalidSpec(f"A_{pair} contains a non-permutation")
            if len(set(A)) == len(sn):
                raise InvalidSpec(f"B_{pair} is empty")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "U": [[list(p) for p in u] for u in self.U_locals],
            "V": [list(p) for p in self.V],
            "splits": [
                {"pair": list(pair),
                 "A": [f.one_based() for f in A],
                 "B": [f.one_based() for f in self.split(*pair)[1]]}
                for pair, A in self.splits
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinGenSetSpec":
        try:
            m, n = int(data["m"]), int(data["n"])
            splits = {}
            for entry in data["splits"]:
                pair = tuple(entry["pair"])
                A = [tr.from_json(f) for f in entry["A"]]
                if "B" in entry:
                    B = {tr.from_json(f) for f in entry["B"]}
                    if B | set(A) != set(tr.symmetric_group(n)) or B & set(A):
                        raise InvalidSpec(f"split for {pair} is not a partition of S_n")
                splits[pair] = A
            return cls.create(m, n, [[tuple(p) for p in u] for u in data["U"]],
                              [tuple(p) for p in data["V"]], splits)
        except (KeyError, TypeError) as exc:
            raise InvalidSpec(f"malformed spec: missing or bad field {exc}") from None


def build_W(spec: MinGenSetSpec) -> set[PartitionMap]:
    spec.check()
    m, n = spec.m, spec.n
    xi, phi = spec.xi_phi()
    sn = tr.symmetric_group(n)
    W = set()
    for i, j in phi:
        W.update(wreath.make_eijf(m, n, i, j, f) for f in sn)
    for i, j in xi:
        A, B = spec.split(i, j)
        W.update(wreath.make_eijf(m, n, i, j, f) for f in A)
        W.update(wreath.make_eijf(m, n, j, i, tr.inverse(f)) for f in B)
    return W


def build_min_genset(spec: MinGenSetSpec) -> set[PartitionMap]:
    W = build_W(spec)
    for k, u in enumerate(spec.U_locals, 1):
        W.update(wreath.make_block_embed(spec.m, spec.n, k, tr.make_eij(spec.n, r, s))
                 for r, s in u)
    return W


def validate_min_genset(W: Iterable[PartitionMap], m: Optional[int] = None,
                        n: Optional[int] = None) -> MinGenSetSpec:
    """Recover the spec of a minimal idempotent generating set, or raise :class:`GensetRejected`."""
    W = list(W)
    if m is None or n is None:
        if not W:
            raise GensetRejected("empty set with no declared shape")
        m, n = W[0].m, W[0].n
    for f in W:
        if (f.m, f.n) != (m, n):
            raise GensetRejected(f"element {f} has shape ({f.m},{f.n}), expected ({m},{n})")
    if len(set(W)) != len(W):
        raise GensetRejected("repeated element")
    for f in W:
        if not wreath.is_idempotent(f):
            raise GensetRejected(f"element {f} is not idempotent")

    locals_: list[set[Pair]] = [set() for _ in range(m)]
    w2: dict[Pair, set[Transformation]] = {}
    for f in W:
        parts = wreath.block_embed_parts(f)
        if parts is not None:
            k, g = parts
            pair = tr.eij_pair(g)
            if pair is None:
                raise GensetRejected(f"element {f} fixes the base but its block map is not "
                                     f"a rank n-1 idempotent")
            locals_[k - 1].add(pair)
            continue
        parts = wreath.eijf_parts(f)
        if parts is None:
            raise GensetRejected(f"element {f} is neither a block-local e_rs nor an e_(ij;f)")
        i, j, perm = parts
        w2.setdefault((i, j), set()).add(perm)

    rho = counting.rho(n)
    for k, u in enumerate(locals_, 1):
        if not howie_check(u, n):
            raise GensetRejected(f"local set on block {k} does not generate E_n")
        if len(u) != rho:
            raise GensetRejected(f"local set on block {k} has {len(u)} elements, minimal is {rho}")

    sn = tr.symmetric_group(n)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            fwd = w2.get((i, j), set())
            bwd = {tr.inverse(g) for g in w2.get((j, i), set())}
            for f in sn:
                hits = (f in fwd) + (f in bwd)
                if hits == 0:
                    raise GensetRejected(f"split not covering S_n: pair ({i},{j}) misses {f}")
                if hits == 2:
                    raise GensetRejected(f"split not disjoint: pair ({i},{j}) carries {f} both ways")

    V = set(w2)
    if not howie_check(V, m):
        raise GensetRejected("base idempotents do not generate T_m minus S_m")
    expected = counting.rank_EXP(m, n, literal=True)
    if len(W) != expected:
        raise GensetRejected(f"wrong total size {len(W)}, expected {expected}")

    xi, _ = xi_phi_of(V, m)
    splits = {pair: sorted(w2[pair], key=_perm_key) for pair in xi}
    spec = MinGenSetSpec.create(m, n, locals_, V, splits)
    spec.check()
    return spec


def is_min_genset(W: Iterable[PartitionMap]) -> bool:
    try:
        validate_min_genset(W)
    except GensetRejected:
        return False
    return True


def _nonempty_proper_subsets(items: Sequence[Transformation]) -> Iterator[tuple[Transformation, ...]]:
    size = len(items)
    for mask in range(1, (1 << size) - 1):
        yield tuple(items[b] for b in range(size) if mask >> b & 1)


def enumerate_min_gensets(m: int, n: int, budget: int = 10 ** 6) -> Iterator[MinGenSetSpec]:
    """Every spec of a minimal idempotent generating set, without repeats."""
    total = counting.count_min_gensets(m, n, literal=True)
    if total > budget:
        raise ValueError(f"{total} generating sets at ({m},{n}) exceeds the budget of {budget}")
    sn = tr.symmetric_group(n)
    local_choices = minimal_howie_sets(n)
    bases = []
    for cd in dg.enumerate_complete_digraphs(m):
        g = cd.to_digraph()
        if dg.is_strongly_connected(g):
            bases.append(sorted(g.edges))
    for V in bases:
        xi, _ = xi_phi_of(V, m)
        split_choices = [list(_nonempty_proper_subsets(sn)) for _ in xi]
        for U in product(local_choices, repeat=m):
            for As in product(*split_choices):
                yield MinGenSetSpec.create(m, n, U, V, dict(zip(xi, As)))


def _random_complete(order: int, doubles: Optional[int], rng: random.Random) -> dg.CompleteDigraph:
    """Uniform over strongly connected complete digraphs (with ``doubles`` double edges if given)."""
    npairs = comb(order, 2)
    for _ in range(100000):
        if doubles is None:
            states = [rng.choice(list(dg.EdgeState)) for _ in range(npairs)]
        else:
            chosen = set(rng.sample(range(npairs), doubles))
            states = [dg.EdgeState.DOUBLE if p in chosen
                      else rng.choice((dg.EdgeState.FORWARD, dg.EdgeState.BACKWARD))
                      for p in range(npairs)]
        cd = dg.CompleteDigraph(order, states)
        if dg.is_strongly_connected(cd.to_digraph()):
            return cd
    raise RuntimeError(f"no strongly connected digraph found on {order} vertices")


def random_spec(m: int, n: int, rng: random.Random) -> MinGenSetSpec:
    """A uniformly drawn valid spec for each component (tournaments, V, splits)."""
    if factorial(n) < 2 and counting.w(m) == 0:
        raise ValueError(f"no generating set of the standard form exists at ({m},{n})")
    extra = counting.rho(n) - comb(n, 2)
    U = [sorted(_random_complete(n, extra, rng).edges()) for _ in range(m)]
    # with n! == 1 there is no proper split, so V must be a tournament
    V = sorted(_random_complete(m, 0 if factorial(n) < 2 else None, rng).edges())
    xi, _ = xi_phi_of(V, m)
    sn = tr.symmetric_group(n)
    splits = {}
    for pair in xi:
        mask = rng.randrange(1, (1 << len(sn)) - 1)
        splits[pair] = [sn[b] for b in range(len(sn)) if mask >> b & 1]
    return MinGenSetSpec.create(m, n, U, V, splits)


class ExtractionFailed(RuntimeError):
    pass


def _shortest_factorization(target: PartitionMap, gens: Sequence[PartitionMap],
                            max_length: int) -> Optional[list[PartitionMap]]:
    """Breadth-first search over left-to-right products; shortest word for ``target``."""
    parent: dict[PartitionMap, tuple[Optional[PartitionMap], PartitionMap]] = {}
    queue = deque()
    for g in gens:
        if g not in parent:
            parent[g] = (None, g)
            queue.append((g, 1))
    while queue:
        x, length = queue.popleft()
        if x == target:
            word = []
            while x is not None:
                prev, g = parent[x]
                word.append(g)
                x = prev
            return word[::-1]
        if length >= max_length:
            continue
        for g in gens:
            y = wreath.compose(x, g)
            if y not in parent:
                parent[y] = (x, g)
                queue.append((y, length + 1))
    return None


def _unreachable_pairs(V: Iterable[Pair], m: int) -> list[Pair]:
    g = dg.gamma_of(V, m)
    out = []
    for i in range(1, m + 1):
        reach = g.reachable_from(i)
        out.extend((i, j) for j in range(1, m + 1) if j != i and not reach >> j & 1)
    return out


def extract_minimal_from(U: Iterable[PartitionMap], *, max_word_length: int = 16,
                         max_rounds: int = 1000) -> set[PartitionMap]:
    """A minimal idempotent generating set inside an idempotent generating set ``U``.

    Desk-scale only: the input is closure-checked, and each repair round
    factors some ``e_{rs;1}`` by breadth-first search with words of length at
    most ``max_word_length``.  A shortest factorization only uses elements of
    the form ``e_{ij;f}``, so the search runs over those members of ``U``.
    """
    U = set(U)
    if not U:
        raise ValueError("empty generating set")
    m, n = next(iter(U)).m, next(iter(U)).n
    if not all(wreath.is_idempotent(f) for f in U):
        raise ValueError("input contains non-idempotents")
    if not closure.generates_S(U, m=m, n=n):
        raise ValueError("input does not generate E(X,P)")

    # block-local part
    W1 = set()
    for k in range(1, m + 1):
        local = set()
        for f in U:
            parts = wreath.block_embed_parts(f)
            if parts is not None and parts[0] == k:
                pair = tr.eij_pair(parts[1])
                if pair is not None:
                    local.add(pair)
        cd = dg.CompleteDigraph.from_digraph(dg.gamma_of(local, n))
        reduced = dg.reduce_to_minimal_scc(cd)
        W1.update(wreath.make_block_embed(m, n, k, tr.make_eij(n, r, s))
                  for r, s in reduced.edges())

    # one of e_{ij;f}, e_{ji;f^-1} for every i < j and f
    g2 = [f for f in U if wreath.eijf_parts(f) is not None]
    g2_set = set(g2)
    W2 = set()
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for f in tr.symmetric_group(n):
                fwd = wreath.make_eijf(m, n, i, j, f)
                bwd = wreath.make_eijf(m, n, j, i, tr.inverse(f))
                if fwd in g2_set:
                    W2.add(fwd)
                elif bwd in g2_set:
                    W2.add(bwd)
                else:
                    raise ExtractionFailed(f"neither {fwd} nor {bwd} is in the input")

    one = tr.identity(n)
    for _ in range(max_rounds):
        V = {wreath.eijf_parts(f)[:2] for f in W2}
        missing = _unreachable_pairs(V, m)
        if not missing:
            break
        r, s = missing[0]
        target = wreath.make_eijf(m, n, r, s, one)
        word = _shortest_factorization(target, sorted(g2), max_word_length)
        if word is None:
            raise ExtractionFailed(
                f"no factorization of e_({r}{s};1) of length <= {max_word_length}")
        swapped = False
        for g in word:
            a, b, f = wreath.eijf_parts(g)
            if (a, b) not in V:
                W2.discard(wreath.make_eijf(m, n, b, a, tr.inverse(f)))
                W2.add(g)
                swapped = True
        if not swapped:
            raise ExtractionFailed(f"factorization of e_({r}{s};1) stays inside V")
    else:
        raise ExtractionFailed(f"repair did not finish in {max_rounds} rounds")

    result = W1 | W2
    validate_min_genset(result, m, n)
    return result
