"""Loopless digraphs on {1..order}, complete digraphs, and brute-force census.

Vertices are 1-based throughout.  An edge ``(i, j)`` is ``i -> j``; for the
graph of a set of idempotents ``e_ij`` the edge ``i -> j`` records ``e_ij``.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

MAX_CENSUS_ORDER = 5


class Digraph:
    __slots__ = ("order", "edges", "_succ", "_pred")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        edges = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= order and 1 <= v <= order):
                raise ValueError(f"edge ({u}, {v}) outside 1..{order}")
        self.order = order
        self.edges = edges
        succ = [0] * (order + 1)
        pred = [0] * (order + 1)
        for u, v in edges:
            succ[u] |= 1 << v
            pred[v] |= 1 << u
        self._succ = succ
        self._pred = pred

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        return f"Digraph({self.order}, {sorted(self.edges)})"

    def successors(self, u: int) -> list[int]:
        return [v for v in range(1, self.order + 1) if self._succ[u] >> v & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._succ[u] >> v & 1)

    def is_complete(self) -> bool:
        return all(self.has_edge(u, v) or self.has_edge(v, u)
                   for u, v in combinations(range(1, self.order + 1), 2))

    def is_tournament(self) -> bool:
        return all(self.has_edge(u, v) != self.has_edge(v, u)
                   for u, v in combinations(range(1, self.order + 1), 2))

    def reachable_from(self, u: int) -> int:
        """Bitmask (bit v set for vertex v) of vertices reachable from ``u``, including ``u``."""
        return _reach(self._succ, u)

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.edges)]


def _reach(adj: Sequence[int], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        bits = frontier
        while bits:
            low = bits & -bits
            nxt |= adj[low.bit_length() - 1]
            bits ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def _all_mask(order: int) -> int:
    return ((1 << (order + 1)) - 1) & ~1


def _strongly_connected_adj(order: int, succ: Sequence[int], pred: Sequence[int]) -> bool:
    if order <= 1:
        return True
    full = _all_mask(order)
    return _reach(succ, 1) == full and _reach(pred, 1) == full


def is_strongly_connected(g: Digraph) -> bool:
    """Forward and backward reachability from vertex 1 both cover every vertex."""
    return _strongly_connected_adj(g.order, g._succ, g._pred)


def from_json(order: int, data: Sequence[Sequence[int]]) -> Digraph:
    return Digraph(order, (tuple(e) for e in data))


def gamma_of(U: Iterable[tuple[int, int]], n: int) -> Digraph:
    """The graph with an edge ``i -> j`` for each ``e_ij`` in ``U``."""
    return Digraph(n, U)


def strongly_connected_components(g: Digraph) -> list[frozenset[int]]:
    """Tarjan's algorithm, iterative; components come out in reverse topological order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(1, g.order + 1):
        if root in index:
            continue
        work = [(root, iter(g.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return comps


class NotTotallyOrdered(ValueError):
    pass


def scc_order(g: Digraph) -> list[frozenset[int]]:
    """Strongly connected components listed maximal-first.

    ``A > B`` when every edge between them points from A to B.  Raises
    :class:`NotTotallyOrdered` if two components have no edge between them
    (only possible when ``g`` is not complete).
    """
    comps = strongly_connected_components(g)[::-1]
    for x, a in enumerate(comps):
        for b in comps[x + 1:]:
            if not any(g.has_edge(u, v) for u in a for v in b):
                raise NotTotallyOrdered(f"components {sorted(a)} and {sorted(b)} are incomparable")
    return comps


class EdgeState(enum.IntEnum):
    FORWARD = 0   # u -> v for u < v
    BACKWARD = 1  # v -> u
    DOUBLE = 2


class CompleteDigraph:
    """A complete digraph stored as one state per unordered pair ``u < v``.

    Pairs are in lexicographic order, matching :func:`pairs`.
    """

    __slots__ = ("order", "states")

    def __init__(self, order: int, states: Sequence[EdgeState]):
        states = tuple(EdgeState(s) for s in states)
        if len(states) != order * (order - 1) // 2:
            raise ValueError(f"need {order * (order - 1) // 2} pair states, got {len(states)}")
        self.order = order
        self.states = states

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompleteDigraph):
            return NotImplemented
        return self.order == other.order and self.states == other.states

    def __hash__(self) -> int:
        return hash((self.order, self.states))

    def __repr__(self) -> str:
        return f"CompleteDigraph({self.order}, {self.to_json()})"

    @property
    def double_edge_count(self) -> int:
        return sum(1 for s in self.states if s == EdgeState.DOUBLE)

    def state(self, u: int, v: int) -> EdgeState:
        lo, hi = min(u, v), max(u, v)
        return self.states[pairs(self.order).index((lo, hi))]

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for (u, v), s in zip(pairs(self.order), self.states):
            if s != EdgeState.BACKWARD:
                out.add((u, v))
            if s != EdgeState.FORWARD:
                out.add((v, u))
        return out

    def to_digraph(self) -> Digraph:
        return Digraph(self.order, self.edges())

    @classmethod
    def from_digraph(cls, g: Digraph) -> "CompleteDigraph":
        states = []
        for u, v in pairs(g.order):
            fw, bw = g.has_edge(u, v), g.has_edge(v, u)
            if fw and bw:
                states.append(EdgeState.DOUBLE)
            elif fw:
                states.append(EdgeState.FORWARD)
            elif bw:
                states.append(EdgeState.BACKWARD)
            else:
                raise ValueError(f"pair {u}-{v} has no edge; digraph is not complete")
        return cls(g.order, states)

    def to_json(self) -> dict[str, str]:
        return {f"{u}-{v}": s.name.lower() for (u, v), s in zip(pairs(self.order), self.states)}

    @classmethod
    def from_json(cls, order: int, data: dict[str, str]) -> "CompleteDigraph":
        states = []
        for u, v in pairs(order):
            key = f"{u}-{v}"
            if key not in data:
                raise ValueError(f"missing state for pair {key}")
            states.append(EdgeState[data[key].upper()])
        return cls(order, states)


_PAIRS_CACHE: dict[int, tuple[tuple[int, int], ...]] = {}


def pairs(order: int) -> tuple[tuple[int, int], ...]:
    p = _PAIRS_CACHE.get(order)
    if p is None:
        p = tuple(combinations(range(1, order + 1), 2))
        _PAIRS_CACHE[order] = p
    return p


def _check_census_order(n: int) -> None:
    if n > MAX_CENSUS_ORDER:
        raise ValueError(
            f"brute-force census on {n} vertices means 3**{n * (n - 1) // 2} digraphs; "
            f"refusing above {MAX_CENSUS_ORDER}")


def enumerate_complete_digraphs(n: int, k: int | None = None) -> Iterator[CompleteDigraph]:
    """All complete digraphs on ``n`` vertices (with exactly ``k`` double edges if given).

    Deterministic order: pairs lexicographic, states FORWARD < BACKWARD < DOUBLE,
    the first pair varying slowest.
    """
    _check_census_order(n)
    npairs = n * (n - 1) // 2
    for states in product(EdgeState, repeat=npairs):
        if k is not None and sum(1 for s in states if s == EdgeState.DOUBLE) != k:
            continue
        yield CompleteDigraph(n, states)


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[int, ...]:
    """Number of strongly connected complete digraphs on n vertices, by double-edge count."""
    _check_census_order(n)
    prs = pairs(n)
    npairs = len(prs)
    counts = [0] * (npairs + 1)
    for states in product((0, 1, 2), repeat=npairs):
        succ = [0] * (n + 1)
        pred = [0] * (n + 1)
        doubles = 0
        for (u, v), s in zip(prs, states):
            if s != 1:
                succ[u] |= 1 << v
                pred[v] |= 1 << u
            if s != 0:
                succ[v] |= 1 << u
                pred[u] |= 1 << v
            if s == 2:
                doubles += 1
        if _strongly_connected_adj(n, succ, pred):
            counts[doubles] += 1
    return tuple(counts)


def brute_force_wnk(n: int, k: int) -> int:
    if k < 0 or k > n * (n - 1) // 2:
        _check_census_order(n)
        return 0
    return _census(n)[k]


def brute_force_w(n: int) -> int:
    """Strongly connected tournaments on n vertices, by enumerating all 2**C(n,2) tournaments."""
    _check_census_order(n)
    prs = pairs(n)
    count = 0
    for states in product((EdgeState.FORWARD, EdgeState.BACKWARD), repeat=len(prs)):
        if is_strongly_connected(CompleteDigraph(n, states).to_digraph()):
            count += 1
    return count


def brute_force_wnk_row(n: int) -> list[int]:
    return list(_census(n))


def strongly_connected_tournaments(n: int) -> list[CompleteDigraph]:
    _check_census_order(n)
    out = []
    for states in product((EdgeState.FORWARD, EdgeState.BACKWARD), repeat=n * (n - 1) // 2):
        cd = CompleteDigraph(n, states)
        if is_strongly_connected(cd.to_digraph()):
            out.append(cd)
    return out


def reduce_to_minimal_scc(g: CompleteDigraph) -> CompleteDigraph:
    """Drop one direction of double edges while strong connectivity survives.

    Double edges are scanned in lexicographic pair order, trying to remove
    ``u -> v`` before ``v -> u``.  For order >= 3 the result is a strongly
    connected tournament inside ``g``.  On two vertices the double edge can
    never be removed and ``g`` comes back unchanged.
    """
    if not is_strongly_connected(g.to_digraph()):
        raise ValueError("input digraph is not strongly connected")
    states = list(g.states)
    changed = True
    while changed:
        changed = False
        for idx, s in enumerate(states):
            if s != EdgeState.DOUBLE:
                continue
            # dropping u->v leaves v->u, i.e. BACKWARD; dropping v->u leaves FORWARD
            for keep in (EdgeState.BACKWARD, EdgeState.FORWARD):
                states[idx] = keep
                if is_strongly_connected(CompleteDigraph(g.order, states).to_digraph()):
                    changed = True
                    break
                states[idx] = EdgeState.DOUBLE
        assert is_strongly_connected(CompleteDigraph(g.order, states).to_digraph())
    return CompleteDigraph(g.order, states)
