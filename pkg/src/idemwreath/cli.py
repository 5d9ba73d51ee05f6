"""Command-line front end.

Exit status: 0 on success or accept, 1 on a failed check or a rejected set,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import closure, counting, genset, tables, verify, wreath

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_table(args) -> int:
    try:
        spec = tables.TableSpec(
            args.table_id,
            rows=tables.parse_range(args.rows) if args.rows else None,
            cols=tables.parse_range(args.cols) if args.cols else None,
            fmt=args.format,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(tables.render(spec))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify.run(args.suite, workers=args.workers)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        _emit(json.dumps({
            "suite": args.suite,
            "passed": ok,
            "checks": [{"name": c.name, "expected": str(c.expected), "actual": str(c.actual),
                        "passed": c.passed} for c in checks],
        }, indent=2))
    else:
        for c in checks:
            _emit(c.line())
        _emit(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_construct(args) -> int:
    rng = random.Random(args.seed)
    try:
        spec = genset.random_spec(args.m, args.n, rng)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    W = sorted(genset.build_min_genset(spec))
    doc = {
        "seed": args.seed,
        "m": args.m,
        "n": args.n,
        "rank": str(counting.rank_EXP(args.m, args.n)),
        "spec": spec.to_json(),
        "genset": [wreath.to_json(f) for f in W],
    }
    status = EXIT_OK
    if args.verify_closure:
        res = closure.generate(W, "monoid", budget=args.budget, workers=args.workers)
        if res.budget_exceeded:
            print(f"error: closure exceeded budget {args.budget}", file=sys.stderr)
            return EXIT_FAIL
        expected = counting.size_EXP(args.m, args.n)
        doc["closure_size"] = str(res.cardinality)
        doc["expected_size"] = str(expected)
        if res.cardinality != expected:
            status = EXIT_FAIL
    if args.format == "json":
        _emit(json.dumps(doc, indent=2))
    else:
        _emit(f"seed {args.seed}: minimal idempotent generating set at (m,n)=({args.m},{args.n})")
        _emit(f"V = {[tuple(p) for p in spec.V]}")
        for k, u in enumerate(spec.U_locals, 1):
            _emit(f"U_{k} = {list(u)}")
        for pair, A in spec.splits:
            _emit(f"A_{pair} = {[str(f) for f in A]}")
        _emit(f"{len(W)} elements (rank {doc['rank']})")
        for f in W:
            _emit(f"  {f}")
        if "closure_size" in doc:
            _emit(f"closure size {doc['closure_size']} (expected {doc['expected_size']})")
    return status


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise ValueError(f"{path}: {exc.strerror}") from None


def check_document(doc) -> tuple[bool, str]:
    """Validate a genset document, a spec document, or a construct output."""
    if isinstance(doc, list):
        elements = wreath.from_json_many(doc)
        declared = None
    elif isinstance(doc, dict) and "genset" in doc:
        elements = wreath.from_json_many(doc["genset"])
        declared = genset.MinGenSetSpec.from_json(doc["spec"]) if "spec" in doc else None
    elif isinstance(doc, dict) and "U" in doc:
        spec = genset.MinGenSetSpec.from_json(doc)
        try:
            spec.check()
        except genset.InvalidSpec as exc:
            return False, str(exc)
        return True, f"valid spec; generating set of size {len(genset.build_min_genset(spec))}"
    else:
        raise ValueError("expected a list of partition maps, a spec, or an object with 'genset'")
    m = n = None
    if isinstance(doc, dict) and "m" in doc and "n" in doc:
        m, n = int(doc["m"]), int(doc["n"])
    try:
        spec = genset.validate_min_genset(elements, m, n)
    except genset.GensetRejected as exc:
        return False, exc.reason
    if declared is not None and declared != spec:
        return False, "generating set does not match the declared spec"
    return True, f"minimal idempotent generating set of size {len(elements)}"


def cmd_check(args) -> int:
    try:
        doc = _load_json(args.path)
        ok, message = check_document(doc)
    except (ValueError, genset.InvalidSpec) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        _emit(json.dumps({"accepted": ok, "reason": message}))
    else:
        _emit(("accept: " if ok else "reject: ") + message)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_closure(args) -> int:
    if args.genset:
        try:
            doc = _load_json(args.genset)
            items = doc["genset"] if isinstance(doc, dict) else doc
            gens = wreath.from_json_many(items)
        except (ValueError, KeyError, TypeError) as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        gens = sorted(wreath.enumerate_idempotents(args.m, args.n))
    res = closure.generate(gens, args.mode, ambient=(args.m, args.n),
                           budget=args.budget, workers=args.workers)
    if args.dump:
        with open(args.dump, "w") as fh:
            for line in res.dump_lines():
                fh.write(line + "\n")
    doc = {
        "m": args.m,
        "n": args.n,
        "mode": args.mode,
        "generators": str(len(gens)),
        "cardinality": str(res.cardinality),
        "rounds": [str(r) for r in res.rounds],
        "budget_exceeded": res.budget_exceeded,
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2))
    else:
        _emit(f"closure of {len(gens)} generators at ({args.m},{args.n}), {args.mode} mode: "
              f"{res.cardinality} elements in {len(res.rounds)} rounds")
        if res.budget_exceeded:
            _emit(f"budget of {args.budget} elements exceeded; result is partial")
    return EXIT_FAIL if res.budget_exceeded else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def common(p, fmt="text"):
        p.add_argument("--format", choices=tables.FORMATS, default=fmt)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--budget", type=int, default=closure.DEFAULT_BUDGET)
        return p

    parser = argparse.ArgumentParser(
        prog="idemwreath",
        description="Idempotent generation in the monoid of a uniform partition.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = common(sub.add_parser("table", help="print a count table"))
    p.add_argument("table_id", choices=sorted(tables.LAYOUTS))
    p.add_argument("--rows", help="row range, e.g. 0-5")
    p.add_argument("--cols", help="column range, e.g. 1-10")
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("verify", help="run oracle cross-checks"))
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("construct", help="build a seeded minimal idempotent generating set"),
               fmt="json")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify-closure", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("check", help="validate a generating set or spec file"))
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("closure", help="closure of E(T(X,P)) or of a file"))
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--genset", help="JSON file of generators (defaults to all idempotents)")
    p.add_argument("--mode", choices=("monoid", "semigroup"), default="monoid")
    p.add_argument("--dump", help="write the sorted elements as JSON lines")
    p.set_defaults(func=cmd_closure)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
