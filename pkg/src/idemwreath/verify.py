"""Oracle cross-checks: closed forms against brute force."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import closure, counting, digraph, genset, wreath


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: expected={self.expected} actual={self.actual}"


def suite_idempotents() -> list[Check]:
    checks = []
    for m in range(1, 4):
        for n in range(1, 4):
            rec = counting.idempotents_TXP_recurrence(m, n)
            checks.append(Check(f"direct formula ({m},{n})", rec, counting.idempotents_TXP_direct(m, n)))
            checks.append(Check(f"exhaustive f*f == f ({m},{n})", rec,
                                wreath.count_idempotents_exhaustive(m, n)))
    return checks


def suite_closure(workers: int = 1) -> list[Check]:
    checks = []
    for m, n in [(2, 2), (2, 3), (3, 2)]:
        res = closure.generate(wreath.enumerate_idempotents(m, n), "monoid", workers=workers)
        checks.append(Check(f"|<E(T(X,P))>| ({m},{n})", counting.size_EXP(m, n), res.cardinality))
    return checks


def suite_digraphs() -> list[Check]:
    checks = []
    for n in range(0, 6):
        checks.append(Check(f"w_{n}k row", [counting.wnk(n, k) for k in range(n * (n - 1) // 2 + 1)],
                            digraph.brute_force_wnk_row(n)))
    for n in range(1, 5):
        checks.append(Check(f"w_{n} tournaments", counting.w(n), digraph.brute_force_w(n)))
    return checks


def suite_gensets() -> list[Check]:
    checks = []
    for m, n in [(2, 2), (2, 3), (3, 2)]:
        specs = list(genset.enumerate_min_gensets(m, n))
        checks.append(Check(f"minimal generating sets ({m},{n})",
                            counting.count_min_gensets(m, n), len(set(specs))))
        bad = 0
        for spec in specs:
            W = genset.build_min_genset(spec)
            if len(W) != counting.rank_EXP(m, n) or genset.validate_min_genset(W) != spec:
                bad += 1
        checks.append(Check(f"build/validate round trip ({m},{n})", 0, bad))
    for spec in genset.enumerate_min_gensets(2, 2):
        checks.append(Check(f"generates S: {spec.V} {spec.splits[0][1][0]}", True,
                            closure.generates_S(genset.build_min_genset(spec))))
    E = sorted(wreath.enumerate_idempotents(2, 2))
    hits = sum(1 for c in combinations(E, 6) if closure.generates_S(c))
    checks.append(Check("6-subsets of E generating S at (2,2)", counting.count_min_gensets(2, 2), hits))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "idempotents": suite_idempotents,
    "closure": suite_closure,
    "digraphs": suite_digraphs,
    "gensets": suite_gensets,
}


def run(name: str, workers: int = 1) -> list[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run(key, workers))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "closure":
        return suite_closure(workers)
    return SUITES[name]()
