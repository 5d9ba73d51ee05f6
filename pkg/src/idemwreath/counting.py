"""Exact counts for T_n, T(X,P) and the idempotent-generated monoid E(X,P).

Everything is Python ``int``; nothing here touches floating point.

Several closed forms are only proven for ``m, n >= 2`` and fail at a few
small sizes (the empty set, and ``(m, n) == (2, 1)`` for rank and for the
number of minimal generating sets).  By default the functions return the true
count, which is what the published tables print; pass ``literal=True`` to get
the bare formula value.  :func:`proven_range` tells which regime a size is in.
"""

from __future__ import annotations

import threading
from itertools import product
from math import comb, factorial, prod
from typing import Iterator


def proven_range(m: int, n: int) -> bool:
    """True when ``m, n >= 2``, the range where the closed forms are proven."""
    return m >= 2 and n >= 2


def compositions(p: int, q: int) -> Iterator[tuple[int, ...]]:
    """All q-tuples of non-negative integers summing to p, in lexicographic order."""
    if p < 0 or q < 1:
        raise ValueError("need p >= 0 and q >= 1")
    if q == 1:
        yield (p,)
        return
    for first in range(p + 1):
        for rest in compositions(p - first, q - 1):
            yield (first,) + rest


def multinomial(total: int, parts) -> int:
    parts = list(parts)
    if sum(parts) != total or any(a < 0 for a in parts):
        return 0
    return factorial(total) // prod(factorial(a) for a in parts)


# --- T_n -------------------------------------------------------------------

def idempotents_Dnk(n: int, k: int) -> int:
    """Idempotents of rank k in T_n."""
    if not 1 <= k <= n:
        raise ValueError(f"rank {k} outside 1..{n}")
    return comb(n, k) * k ** (n - k)


def idempotents_Tn(n: int) -> int:
    if n == 0:
        return 1  # the empty map
    return sum(idempotents_Dnk(n, k) for k in range(1, n + 1))


# --- E(T(X,P)) ---------------------------------------------------------------

def idempotents_TXP_direct(m: int, n: int) -> int:
    """Sum over base rank k, preimage sizes a and block ranks l."""
    if m == 0 or n == 0:
        return 1
    total = 0
    for k in range(1, m + 1):
        for a in compositions(m - k, k):
            coeff = multinomial(m, (k,) + a)
            inner = 0
            for ls in product(range(1, n + 1), repeat=k):
                inner += prod(comb(n, l) * l ** ((ai + 1) * n - l) for ai, l in zip(a, ls))
            total += coeff * inner
    return total


_etxp_lock = threading.Lock()
_etxp_rows: dict[int, list[int]] = {}


def idempotents_TXP_recurrence(m: int, n: int) -> int:
    """Recurrence over the class of block 1 under the base map; memoized per n."""
    if m < 0 or n < 0:
        raise ValueError("sizes must be non-negative")
    if n == 0:
        # T(X,P) is T_0; the recurrence's inner sum is empty here
        return 1
    with _etxp_lock:
        row = _etxp_rows.setdefault(n, [1])
        while len(row) <= m:
            mm = len(row)
            val = 0
            for k in range(1, mm + 1):
                inner = sum(comb(n, l) * l ** (k * n - l) for l in range(1, n + 1))
                val += comb(mm - 1, k - 1) * k * row[mm - k] * inner
            row.append(val)
        return row[m]


# --- |E(X,P)|, rank, minimal generating sets ---------------------------------

def size_EXP(m: int, n: int, literal: bool = False) -> int:
    """Size of the monoid generated by the idempotents of T(X,P)."""
    value = (n ** n - factorial(n) + 1) ** m + n ** (m * n) * (m ** m - factorial(m))
    if literal:
        return value
    if m == 0 or n == 0:
        return 1
    return value


def rho(n: int) -> int:
    """Rank of E_n: C(n,2), except 2 for n == 2 (and 0 for n <= 1)."""
    if n == 2:
        return 2
    return comb(n, 2)


def rank_EXP(m: int, n: int, literal: bool = False) -> int:
    """rank(E(X,P)) = idrank(E(X,P)) = m*rho(n) + n!*C(m,2)."""
    value = m * rho(n) + factorial(n) * comb(m, 2)
    if literal:
        return value
    if n == 0:
        return 0
    if (m, n) == (2, 1):
        return 2  # E(X,P) is E_2 here
    return value


_w_lock = threading.Lock()
_w_rows: list[list[int]] = []


def F_nk(n: int, k: int) -> int:
    """Complete digraphs on n labelled vertices with exactly k double edges."""
    pairs = comb(n, 2)
    if k < 0 or k > pairs:
        return 0
    return comb(pairs, k) * 2 ** (pairs - k)


def _wnk_row(n: int) -> list[int]:
    with _w_lock:
        while len(_w_rows) <= n:
            nn = len(_w_rows)
            if nn == 0:
                _w_rows.append([1])
                continue
            top = comb(nn, 2)
            row = []
            for k in range(top + 1):
                val = F_nk(nn, k)
                for s in range(1, nn):
                    ws = _w_rows[s]
                    acc = 0
                    for l in range(min(k, len(ws) - 1) + 1):
                        acc += ws[l] * F_nk(nn - s, k - l)
                    val -= comb(nn, s) * acc
                row.append(val)
            _w_rows.append(row)
        return _w_rows[n]


def wnk(n: int, k: int) -> int:
    """Strongly connected complete digraphs on n labelled vertices with k double edges."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    row = _wnk_row(n)
    return row[k] if k < len(row) else 0


def w(n: int) -> int:
    """Strongly connected tournaments on n labelled vertices."""
    return wnk(n, 0)


def w_direct(n: int) -> int:
    """The tournament-only recurrence ``w_n = F_n - sum C(n,s) w_s F_{n-s}``."""
    ws = [1]
    for nn in range(1, n + 1):
        val = 2 ** comb(nn, 2)
        for s in range(1, nn):
            val -= comb(nn, s) * ws[s] * 2 ** comb(nn - s, 2)
        ws.append(val)
    return ws[n]


def sum_wnk(n: int) -> int:
    return sum(_wnk_row(n))


def sigma(n: int) -> int:
    """Number of minimal idempotent generating sets of E_n."""
    if n == 2:
        return 1
    return w(n)


def count_min_gensets(m: int, n: int, literal: bool = False) -> int:
    """Number of minimal idempotent generating sets of E(X,P)."""
    splits = 2 ** factorial(n) - 2
    value = sigma(n) ** m * sum(wnk(m, k) * splits ** k for k in range(comb(m, 2) + 1))
    if literal:
        return value
    if m == 0 or n == 0:
        return 1  # trivial monoid; the empty set is its only minimal generating set
    if (m, n) == (2, 1):
        return 1  # E(X,P) is E_2, which has a unique minimal generating set
    return value


def total_idempotent_gensets_En(n: int, semigroup: bool = False) -> int:
    """All idempotent generating sets of E_n (monoid convention unless ``semigroup``).

    Any generating set of rank n-1 idempotents, plus any subset of the
    idempotents of rank <= n-2, plus the identity or not.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    low_rank = sum(comb(n, l) * l ** (n - l) for l in range(1, n - 1))
    total = sum_wnk(n) * 2 ** (1 + low_rank)
    return total // 2 if semigroup else total
