"""Transformations of the finite set {1, ..., n}.

Maps act on the right: ``x * (f * g) == (x * f) * g``, so ``compose(f, g)``
applies ``f`` first and then ``g``.  This is the opposite of the usual
function-composition convention and matches the wreath product rule used in
:mod:`idemwreath.wreath`.

Images are stored 0-based.  Every public index argument (``i``, ``j`` in
``make_eij`` and friends) and every serialized form is 1-based.
"""

from __future__ import annotations

from functools import total_ordering
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Optional, Sequence


@total_ordering
class Transformation:
    """A total map on {1..n}, stored as a tuple of 0-based images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        for y in images:
            if not 0 <= y < n:
                raise ValueError(f"image {y} out of range for degree {n}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Transformation":
        return cls(int(y) - 1 for y in images)

    def one_based(self) -> list[int]:
        return [y + 1 for y in self.images]

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Transformation") -> bool:
        return (len(self.images), self.images) < (len(other.images), other.images)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Transformation.from_one_based({self.one_based()})"

    def __str__(self) -> str:
        return "[" + ",".join(str(y) for y in self.one_based()) + "]"

    def image(self) -> frozenset[int]:
        """The image as a set of 0-based points."""
        return frozenset(self.images)

    def rank(self) -> int:
        return len(set(self.images))

    def kernel(self) -> frozenset[frozenset[int]]:
        """Kernel classes (0-based) of the map."""
        classes: dict[int, set[int]] = {}
        for x, y in enumerate(self.images):
            classes.setdefault(y, set()).add(x)
        return frozenset(frozenset(c) for c in classes.values())

    def is_idempotent(self) -> bool:
        return is_idempotent(self)

    def is_permutation(self) -> bool:
        return is_permutation(self)

    def inverse(self) -> "Transformation":
        return inverse(self)


def identity(n: int) -> Transformation:
    return Transformation(range(n))


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Apply ``f`` then ``g``."""
    if len(f.images) != len(g.images):
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    gi = g.images
    return Transformation(gi[y] for y in f.images)


def is_idempotent(f: Transformation) -> bool:
    imgs = f.images
    return all(imgs[y] == y for y in imgs)


def is_permutation(f: Transformation) -> bool:
    return len(set(f.images)) == len(f.images)


def inverse(f: Transformation) -> Transformation:
    if not is_permutation(f):
        raise ValueError(f"{f} is not a permutation")
    inv = [0] * f.degree
    for x, y in enumerate(f.images):
        inv[y] = x
    return Transformation(inv)


def make_eij(n: int, i: int, j: int) -> Transformation:
    """The idempotent sending ``j`` to ``i`` and fixing every other point (1-based)."""
    if i == j:
        raise ValueError("e_ij needs i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range for n={n}")
    images = list(range(n))
    images[j - 1] = i - 1
    return Transformation(images)


def eij_pair(f: Transformation) -> Optional[tuple[int, int]]:
    """Return ``(i, j)`` if ``f == e_ij``, else ``None``."""
    moved = [x for x, y in enumerate(f.images) if x != y]
    if len(moved) != 1:
        return None
    j = moved[0]
    i = f.images[j]
    if f.images[i] != i:
        return None
    return (i + 1, j + 1)


def all_transformations(n: int) -> Iterator[Transformation]:
    """All n**n maps in lexicographic order of image sequences."""
    for images in product(range(n), repeat=n):
        yield Transformation(images)


def symmetric_group(n: int) -> list[Transformation]:
    """S_n sorted by image sequence."""
    return [Transformation(p) for p in permutations(range(n))]


def enumerate_idempotents(n: int, k: Optional[int] = None) -> set[Transformation]:
    """Idempotents of T_n, optionally restricted to rank ``k``.

    Built directly: choose the image, then send each remaining point somewhere
    in it.
    """
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"rank filter {k} outside 1..{n}")
    ranks = range(1, n + 1) if k is None else (k,)
    if n == 0:
        return {Transformation(())}
    out = set()
    for r in ranks:
        for im in combinations(range(n), r):
            rest = [x for x in range(n) if x not in im]
            for targets in product(im, repeat=len(rest)):
                images = list(range(n))
                for x, y in zip(rest, targets):
                    images[x] = y
                out.add(Transformation(images))
    return out


def to_json(f: Transformation) -> list[int]:
    return f.one_based()


def from_json(data: Sequence[int]) -> Transformation:
    if not isinstance(data, (list, tuple)) or not all(isinstance(y, int) for y in data):
        raise ValueError(f"expected a list of integers, got {data!r}")
    return Transformation.from_one_based(data)
