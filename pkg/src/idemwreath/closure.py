"""Breadth-first closure of a generating set under right multiplication.

Elements are handled as flat image tuples (0-based): a :class:`Transformation`
by its images, a :class:`PartitionMap` by the images of its flattening to
degree ``m*n``.  Composition of flat tuples is ``g[f[x]]``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import counting
from . import transformation as tr
from . import wreath
from .transformation import Transformation
from .wreath import PartitionMap

DEFAULT_BUDGET = 10 ** 7

Ambient = Union[int, tuple[int, int]]
Element = Union[Transformation, PartitionMap]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ClosureResult:
    ambient: Ambient
    mode: str
    elements: frozenset
    rounds: tuple[int, ...] = field(default=())
    budget_exceeded: bool = False

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __contains__(self, item: Element) -> bool:
        return _encode(item) in self.elements

    def decoded(self) -> list[Element]:
        """The elements as objects, sorted by flat encoding."""
        return [_decode(self.ambient, key) for key in sorted(self.elements)]

    def dump_lines(self) -> list[str]:
        """One JSON document per element, sorted; byte-stable across runs."""
        out = []
        for el in self.decoded():
            doc = wreath.to_json(el) if isinstance(el, PartitionMap) else tr.to_json(el)
            out.append(json.dumps(doc, separators=(",", ":"), sort_keys=True))
        return sorted(out)


def ambient_of(x: Element) -> Ambient:
    if isinstance(x, PartitionMap):
        return (x.m, x.n)
    if isinstance(x, Transformation):
        return x.degree
    raise TypeError(f"cannot take closure of {type(x).__name__}")


def _encode(x: Element) -> tuple[int, ...]:
    if isinstance(x, PartitionMap):
        return wreath.flatten(x).images
    return x.images


def _decode(ambient: Ambient, key: tuple[int, ...]) -> Element:
    t = Transformation(key)
    if isinstance(ambient, tuple):
        return wreath.unflatten(t, *ambient)
    return t


def _identity_key(ambient: Ambient) -> tuple[int, ...]:
    if isinstance(ambient, tuple):
        m, n = ambient
        return tuple(range(m * n))
    return tuple(range(ambient))


def _expand(frontier: list[tuple[int, ...]], gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    out = set()
    for x in frontier:
        for g in gens:
            out.add(tuple([g[y] for y in x]))
    return out


def _chunks(seq: list, parts: int) -> list[list]:
    size = max(1, -(-len(seq) // parts))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def generate(gens: Iterable[Element], mode: str = "monoid", *,
             ambient: Optional[Ambient] = None,
             budget: int = DEFAULT_BUDGET,
             workers: int = 1) -> ClosureResult:
    """Submonoid (``mode="monoid"``) or subsemigroup generated by ``gens``.

    Exceeding ``budget`` elements stops the expansion and returns a partial
    result with ``budget_exceeded`` set.  ``workers > 1`` expands each round
    in worker processes; the element set does not depend on it.
    """
    if mode not in ("monoid", "semigroup"):
        raise ValueError(f"unknown mode {mode!r}")
    gens = list(gens)
    for g in gens:
        a = ambient_of(g)
        if ambient is None:
            ambient = a
        elif a != ambient:
            raise ValueError(f"generator lives in {a}, expected {ambient}")
    if ambient is None:
        raise ValueError("empty generating set needs an explicit ambient")

    gen_keys = sorted({_encode(g) for g in gens})
    if mode == "monoid":
        known = {_identity_key(ambient)}
        known.update(gen_keys)
    else:
        known = set(gen_keys)
    frontier = sorted(known)
    rounds = [len(known)]
    exceeded = len(known) > budget

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier and not exceeded:
            if pool is None:
                produced = _expand(frontier, gen_keys)
            else:
                produced = set()
                for part in pool.map(_expand, _chunks(frontier, workers),
                                     [gen_keys] * workers):
                    produced |= part
            new = produced - known
            known |= new
            frontier = sorted(new)
            if new:
                rounds.append(len(new))
            if len(known) > budget:
                exceeded = True
    finally:
        if pool is not None:
            pool.shutdown()

    return ClosureResult(ambient, mode, frozenset(known), tuple(rounds), exceeded)


def generates_S(gens: Iterable[PartitionMap], *, m: Optional[int] = None, n: Optional[int] = None,
                budget: int = DEFAULT_BUDGET, workers: int = 1) -> bool:
    """Whether ``gens`` generates the whole idempotent-generated monoid E(X,P)."""
    gens = list(gens)
    ambient = (m, n) if m is not None else None
    result = generate(gens, "monoid", ambient=ambient, budget=budget, workers=workers)
    if result.budget_exceeded:
        raise BudgetExceeded(f"closure exceeded {budget} elements")
    m, n = result.ambient
    if result.cardinality != counting.size_EXP(m, n):
        return False
    return all(wreath.classify(f).in_S for f in result.decoded())
