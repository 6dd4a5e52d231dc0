"""Reading and writing documents and coefficient tables.

Count tables and series share one layout:

  CSV   header n,m,x1,...,xk,count, rows sorted by key
  JSON  [{"n": .., "m": .., "x": [..], "count": ..}, ...] in the same order
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from .models import CountRow
from .partitions import ExponentKey, Overpartition


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def dump_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def write_text(text: str, path: Optional[str]) -> None:
    """Write to path, or to stdout when path is None."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _x_header(markers: int) -> List[str]:
    return [f"x{i}" for i in range(1, markers + 1)]


def count_rows(entries: Iterable[Tuple[ExponentKey, int]]) -> List[CountRow]:
    return [CountRow(n=key[0], m=key[1], x=list(key[2:]), count=c) for key, c in sorted(entries)]


def count_table_csv(entries: Iterable[Tuple[ExponentKey, int]], markers: int, value_name: str = "count") -> str:
    header = ["n", "m"] + _x_header(markers) + [value_name]
    return _csv_text(header, (list(key) + [c] for key, c in sorted(entries)))


def count_table_json(entries: Iterable[Tuple[ExponentKey, int]]) -> str:
    return dump_json([r.model_dump() for r in count_rows(entries)])


def comparison_csv(
    counts: dict[ExponentKey, int],
    coeffs: dict[ExponentKey, int],
    markers: int,
) -> str:
    """Side-by-side table: n,m,x1..xk,count,coeff over the union of keys."""
    keys = sorted(set(counts) | set(coeffs))
    header = ["n", "m"] + _x_header(markers) + ["count", "coeff"]
    return _csv_text(header, (list(k) + [counts.get(k, 0), coeffs.get(k, 0)] for k in keys))


def members_csv(members: Iterable[Tuple[ExponentKey, Overpartition]], markers: int) -> str:
    """One row per member: n,m,x1..xk,parts with parts as a compact JSON array."""
    header = ["n", "m"] + _x_header(markers) + ["parts"]
    rows = []
    for key, op in members:
        compact = json.dumps([[p.value, p.color, p.overlined] for p in op], separators=(",", ":"))
        rows.append(list(key) + [compact])
    return _csv_text(header, rows)
