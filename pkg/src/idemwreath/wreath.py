"""Elements of T(X,P) for a uniform partition, in wreath coordinates.

X has m blocks C_1..C_m of size n.  An element is ``[f_1, ..., f_m; fbar]``
with ``(i, x) -> (i * fbar, x * f_i)``.  Products follow the right-action
rule ``fg = [f_1 g_{1 fbar}, ..., f_m g_{m fbar}; fbar gbar]``.

When flattened to a transformation of degree ``m*n``, block ``C_i`` (1-based)
is the contiguous range of points ``(i-1)*n .. i*n - 1`` (0-based).

The structural statements about S_1, S_2, S_3 assume ``m, n >= 2``.  The
predicates here are still evaluated literally for smaller sizes.
"""

from __future__ import annotations

from functools import total_ordering
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import transformation as tr
from .transformation import Transformation


@total_ordering
class PartitionMap:
    __slots__ = ("m", "n", "blocks", "base", "_key", "_hash")

    def __init__(self, blocks: Sequence[Transformation], base: Transformation):
        blocks = tuple(blocks)
        m = base.degree
        if len(blocks) != m:
            raise ValueError(f"{len(blocks)} block maps for a base of degree {m}")
        if m == 0:
            raise ValueError("need at least one block")
        n = blocks[0].degree
        if any(b.degree != n for b in blocks):
            raise ValueError("block maps must share one degree")
        self.m = m
        self.n = n
        self.blocks = blocks
        self.base = base
        self._key = base.images + tuple(y for b in blocks for y in b.images)
        self._hash = hash((m, n, self._key))

    @classmethod
    def from_one_based(cls, blocks: Sequence[Sequence[int]], base: Sequence[int]) -> "PartitionMap":
        return cls([Transformation.from_one_based(b) for b in blocks],
                   Transformation.from_one_based(base))

    def encode(self) -> tuple[int, ...]:
        """Canonical encoding: base images followed by all block images (0-based)."""
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionMap):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self._key == other._key

    def __lt__(self, other: "PartitionMap") -> bool:
        return (self.m, self.n, self._key) < (other.m, other.n, other._key)

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "PartitionMap") -> "PartitionMap":
        return compose(self, other)

    def __repr__(self) -> str:
        blocks = [b.one_based() for b in self.blocks]
        return f"PartitionMap.from_one_based({blocks}, {self.base.one_based()})"

    def __str__(self) -> str:
        return "[" + ", ".join(str(b) for b in self.blocks) + "; " + str(self.base) + "]"

    def is_idempotent(self) -> bool:
        return is_idempotent(self)


def identity(m: int, n: int) -> PartitionMap:
    one = tr.identity(n)
    return PartitionMap([one] * m, tr.identity(m))


def compose(f: PartitionMap, g: PartitionMap) -> PartitionMap:
    if (f.m, f.n) != (g.m, g.n):
        raise ValueError(f"shape mismatch: ({f.m},{f.n}) vs ({g.m},{g.n})")
    fb = f.base.images
    blocks = [tr.compose(fi, g.blocks[fb[i]]) for i, fi in enumerate(f.blocks)]
    return PartitionMap(blocks, tr.compose(f.base, g.base))


def is_idempotent(f: PartitionMap) -> bool:
    """Coordinate test: base idempotent, blocks over the image idempotent,
    and each other block lands inside the image of the block it is sent to."""
    fb = f.base.images
    if not tr.is_idempotent(f.base):
        return False
    im = set(fb)
    for i, fi in enumerate(f.blocks):
        if i in im:
            if not tr.is_idempotent(fi):
                return False
        elif not fi.image() <= f.blocks[fb[i]].image():
            return False
    return True


def make_eijf(m: int, n: int, i: int, j: int, f: Transformation) -> PartitionMap:
    """``e_{ij;f}``: base ``e_ij`` in T_m, permutation ``f`` on block ``j``, identity elsewhere."""
    if f.degree != n:
        raise ValueError(f"block map has degree {f.degree}, expected {n}")
    if not tr.is_permutation(f):
        raise ValueError("e_{ij;f} is only defined for permutations f")
    base = tr.make_eij(m, i, j)
    one = tr.identity(n)
    blocks = [one] * m
    blocks[j - 1] = f
    return PartitionMap(blocks, base)


def make_block_embed(m: int, n: int, i: int, g: Transformation) -> PartitionMap:
    """``g^(i)``: ``g`` on block ``i``, identity on the other blocks and on the base."""
    if not 1 <= i <= m:
        raise ValueError(f"block index {i} outside 1..{m}")
    if g.degree != n:
        raise ValueError(f"block map has degree {g.degree}, expected {n}")
    one = tr.identity(n)
    blocks = [one] * m
    blocks[i - 1] = g
    return PartitionMap(blocks, tr.identity(m))


def eijf_parts(f: PartitionMap):
    """Return ``(i, j, perm)`` when ``f == e_{ij;perm}``, else ``None``."""
    pair = tr.eij_pair(f.base)
    if pair is None:
        return None
    i, j = pair
    one = tr.identity(f.n)
    for k, b in enumerate(f.blocks):
        if k != j - 1 and b != one:
            return None
    perm = f.blocks[j - 1]
    if not tr.is_permutation(perm):
        return None
    return i, j, perm


def block_embed_parts(f: PartitionMap):
    """Return ``(i, g)`` when ``f == g^(i)`` for a non-identity ``g``, else ``None``."""
    if f.base != tr.identity(f.m):
        return None
    one = tr.identity(f.n)
    moved = [k for k, b in enumerate(f.blocks) if b != one]
    if len(moved) != 1:
        return None
    k = moved[0]
    return k + 1, f.blocks[k]


class Membership(NamedTuple):
    in_S1: bool
    in_S2: bool
    in_S3: bool
    in_S: bool


def _in_En(g: Transformation) -> bool:
    # E_n = {1} u (T_n \ S_n)
    return not tr.is_permutation(g) or g == tr.identity(g.degree)


def classify(f: PartitionMap) -> Membership:
    base_perm = tr.is_permutation(f.base)
    in_s1 = f.base == tr.identity(f.m) and all(_in_En(b) for b in f.blocks)
    in_s2 = not base_perm
    in_s3 = in_s2 and all(tr.is_permutation(b) for b in f.blocks)
    return Membership(in_s1, in_s2, in_s3, in_s1 or in_s2)


def flatten(f: PartitionMap) -> Transformation:
    n = f.n
    images = []
    for i, fi in enumerate(f.blocks):
        off = f.base.images[i] * n
        images.extend(off + y for y in fi.images)
    return Transformation(images)


def unflatten(t: Transformation, m: int, n: int) -> PartitionMap:
    if t.degree != m * n:
        raise ValueError(f"degree {t.degree} != m*n = {m * n}")
    blocks = []
    base = []
    for i in range(m):
        chunk = t.images[i * n:(i + 1) * n]
        targets = {y // n for y in chunk}
        if len(targets) != 1:
            raise ValueError(f"block {i + 1} is split across blocks {sorted(b + 1 for b in targets)}")
        b = targets.pop()
        base.append(b)
        blocks.append(Transformation(y - b * n for y in chunk))
    return PartitionMap(blocks, Transformation(base))


def all_elements(m: int, n: int) -> Iterator[PartitionMap]:
    """Every element of T(X,P): m**m * n**(n*m) of them."""
    tn = list(tr.all_transformations(n))
    for base in tr.all_transformations(m):
        for blocks in product(tn, repeat=m):
            yield PartitionMap(blocks, base)


def count_idempotents_exhaustive(m: int, n: int) -> int:
    """Count ``f`` with ``f * f == f`` over all of T(X,P)."""
    return sum(1 for f in all_elements(m, n) if compose(f, f) == f)


def enumerate_idempotents(m: int, n: int) -> set[PartitionMap]:
    """E(T(X,P)) built from the coordinate characterization (no full scan)."""
    out = set()
    for base in tr.enumerate_idempotents(m):
        im = sorted(set(base.images))
        # blocks over the image are idempotent; the rest map into the image of their target block
        for head in product(sorted(tr.enumerate_idempotents(n)), repeat=len(im)):
            chosen = dict(zip(im, head))
            per_block = []
            for i in range(m):
                if i in chosen:
                    per_block.append([chosen[i]])
                else:
                    target = sorted(chosen[base.images[i]].image())
                    per_block.append([Transformation(t) for t in product(target, repeat=n)])
            for blocks in product(*per_block):
                out.add(PartitionMap(blocks, base))
    return out


def generators_G1(m: int, n: int) -> set[PartitionMap]:
    """All ``e_rs^(k)``: the block-local rank n-1 idempotents."""
    return {make_block_embed(m, n, k, tr.make_eij(n, r, s))
            for k in range(1, m + 1)
            for r in range(1, n + 1) for s in range(1, n + 1) if r != s}


def generators_G2(m: int, n: int) -> set[PartitionMap]:
    """All ``e_{ij;f}`` with ``i != j`` and ``f`` in S_n."""
    sn = tr.symmetric_group(n)
    return {make_eijf(m, n, i, j, f)
            for i in range(1, m + 1) for j in range(1, m + 1) if i != j
            for f in sn}


def to_json(f: PartitionMap) -> dict:
    return {"m": f.m, "n": f.n, "base": f.base.one_based(),
            "blocks": [b.one_based() for b in f.blocks]}


def from_json(data: dict) -> PartitionMap:
    try:
        m, n = data["m"], data["n"]
        f = PartitionMap([tr.from_json(b) for b in data["blocks"]], tr.from_json(data["base"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed partition map {data!r}: {exc}") from None
    if (f.m, f.n) != (m, n):
        raise ValueError(f"declared shape ({m},{n}) disagrees with data ({f.m},{f.n})")
    return f


def from_json_many(items: Iterable[dict]) -> list[PartitionMap]:
    return [from_json(d) for d in items]
