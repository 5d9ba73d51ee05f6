"""Count tables in the published row/column orientation, rendered as text, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from . import counting


@dataclass(frozen=True)
class TableLayout:
    row_label: str
    col_label: str
    rows: range
    cols: range
    cell: Callable[[int, int], Optional[int]]
    single_row: bool = False


def _wnk_cell(n: int, k: int) -> Optional[int]:
    return counting.wnk(n, k) if k <= comb(n, 2) else None


LAYOUTS: dict[str, TableLayout] = {
    "wnk": TableLayout("n", "k", range(0, 6), range(0, 11), _wnk_cell),
    "sum-wnk": TableLayout("", "n", range(0, 1), range(0, 9),
                           lambda _, n: counting.sum_wnk(n), single_row=True),
    "idempotent-counts": TableLayout("m", "n", range(0, 6), range(0, 6),
                                     counting.idempotents_TXP_recurrence),
    "exp-size": TableLayout("m", "n", range(0, 6), range(0, 6), counting.size_EXP),
    "rank": TableLayout("m", "n", range(1, 11), range(1, 11), counting.rank_EXP),
    "min-genset-counts": TableLayout("m", "n", range(1, 5), range(1, 5),
                                     counting.count_min_gensets),
}

FORMATS = ("text", "csv", "json")


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    rows: Optional[range] = None
    cols: Optional[range] = None
    fmt: str = "text"

    def __post_init__(self):
        if self.table_id not in LAYOUTS:
            raise ValueError(f"unknown table {self.table_id!r}; choose from {sorted(LAYOUTS)}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        for r in (self.rows, self.cols):
            if r is not None and (r.start < 0 or r.stop < r.start):
                raise ValueError("ranges must be non-negative and non-decreasing")


def parse_range(text: str) -> range:
    """``"3"`` or ``"0-5"`` (inclusive) to a range."""
    if "-" in text:
        lo, hi = text.split("-", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def compute(spec: TableSpec) -> tuple[list[int], list[int], list[list[Optional[int]]]]:
    layout = LAYOUTS[spec.table_id]
    rows = list(spec.rows if spec.rows is not None else layout.rows)
    cols = list(spec.cols if spec.cols is not None else layout.cols)
    values = [[layout.cell(r, c) for c in cols] for r in rows]
    return rows, cols, values


def render(spec: TableSpec) -> str:
    layout = LAYOUTS[spec.table_id]
    rows, cols, values = compute(spec)
    cells = [["" if v is None else str(v) for v in row] for row in values]

    if spec.fmt == "json":
        doc = {
            "table": spec.table_id,
            "row_label": layout.row_label,
            "col_label": layout.col_label,
            "rows": rows,
            "cols": cols,
            "values": [[None if v is None else str(v) for v in row] for row in values],
        }
        return json.dumps(doc, indent=2)

    corner = f"{layout.row_label}\\{layout.col_label}" if layout.row_label else layout.col_label
    header = [corner] + [str(c) for c in cols]
    body = [[("" if layout.single_row else str(r))] + row for r, row in zip(rows, cells)]

    if spec.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()

    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    def fmt(line):
        return " | ".join([line[0].rjust(widths[0])] +
                          [x.rjust(w) for x, w in zip(line[1:], widths[1:])]).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(line) for line in body]) + "\n"
