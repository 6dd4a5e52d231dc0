#!/usr/bin/env python3
"""
Run every identity, specialization and anchor check at desk scale and write
a one-line-per-check CSV report.

Output (acceptance.csv in OVERLAB_REPORT_DIR, default ./reports):
  check,family,k,j,N,status,detail

status is PASS, FAIL, or for the SBAR_J comparisons MATCH / COUNTEREXAMPLE.
Exits 1 if any exact identity fails; a conjecture counterexample is reported
but does not fail the run.

Usage:
  python3 scripts/run_acceptance.py [--quick] [--workers 4]
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from overlab import settings  # noqa: E402
from overlab.enumeration import (  # noqa: E402
    compare_table,
    count_table,
    iter_colored_overpartitions,
)
from overlab.predicates import Family, FamilyTag, check_dbar_equivalence  # noqa: E402
from overlab.qseries import overpartitions, rhs_family, schur_series  # noqa: E402

log = logging.getLogger("overlab.acceptance")

# -----------------------------
# Config (edit these)
# -----------------------------

MAIN_THEOREM = [(1, 15), (2, 12), (3, 10)]
COMPANIONS = [
    (FamilyTag.D1, 2, None, 12),
    (FamilyTag.D2, 2, None, 12),
    (FamilyTag.DBAR_MATRIX, 2, None, 10),
    (FamilyTag.TBAR, 2, None, 10),
    (FamilyTag.TBAR, 3, None, 10),
]
CONJECTURE = [(3, 2, 10), (3, 3, 10)]
B_LEVELS = [1, 2, 3]
B_N = 10
DBAR_EQUIVALENCE_N = 10
OVERPARTITION_COUNTS = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154]
SCHUR_N = 15

# --quick shrinks every N to this
QUICK_N = 6


@dataclass
class Row:
    check: str
    family: str
    k: int
    j: Optional[int]
    N: int
    status: str
    detail: str = ""

    def as_list(self) -> list:
        return [self.check, self.family, self.k, "" if self.j is None else self.j, self.N, self.status, self.detail]


def _selected(tag: FamilyTag) -> bool:
    return not settings.ACCEPTANCE_FAMILIES or tag.value in settings.ACCEPTANCE_FAMILIES


def identity_row(check: str, family: Family, N: int, workers: int, exact: bool = True) -> Row:
    cmp = compare_table(count_table(family, N, workers), rhs_family(family, N))
    if cmp.matched:
        status = "PASS" if exact else "MATCH"
        detail = f"{cmp.compared} coefficients"
    else:
        status = "FAIL" if exact else "COUNTEREXAMPLE"
        detail = f"first at {cmp.first_mismatch}: count {cmp.count_at_mismatch} vs product {cmp.coeff_at_mismatch}"
    return Row(check, family.tag.value, family.k, family.j, N, status, detail)


def run(quick: bool, workers: int) -> List[Row]:
    cap: Callable[[int], int] = (lambda n: min(n, QUICK_N)) if quick else (lambda n: n)
    rows: List[Row] = []

    if _selected(FamilyTag.SBAR):
        for k, N in MAIN_THEOREM:
            rows.append(identity_row("main-theorem", Family(FamilyTag.SBAR, k), cap(N), workers))

    for tag, k, j, N in COMPANIONS:
        if _selected(tag):
            rows.append(identity_row("companion", Family(tag, k, j), cap(N), workers))

    if _selected(FamilyTag.SBAR) and _selected(FamilyTag.D1):
        N = cap(12)
        a = count_table(Family(FamilyTag.SBAR, 2), N, workers)
        b = count_table(Family(FamilyTag.D1, 2), N, workers)
        ok = a.entries == b.entries
        rows.append(Row("sbar-equals-d1", "SBAR/D1", 2, None, N, "PASS" if ok else "FAIL"))

    if _selected(FamilyTag.B):
        for k in B_LEVELS:
            N = cap(B_N)
            b = count_table(Family(FamilyTag.B, k), N, workers)
            s = count_table(Family(FamilyTag.SBAR, k), N, workers).with_m(0)
            ok = b.entries == s.entries
            rows.append(Row("m0-equals-b", "B", k, None, N, "PASS" if ok else "FAIL"))
            rows.append(identity_row("distinct-product", Family(FamilyTag.B, k), N, workers))

    if _selected(FamilyTag.DBAR_MATRIX):
        N = cap(DBAR_EQUIVALENCE_N)
        bad = 0
        seen = 0
        for n in range(N + 1):
            for op in iter_colored_overpartitions(n, 3):
                seen += 1
                if not check_dbar_equivalence(op):
                    bad += 1
        rows.append(Row("matrix-equivalence", "DBAR_MATRIX", 2, None, N, "PASS" if not bad else "FAIL", f"{seen} checked, {bad} disagree"))

    if _selected(FamilyTag.SBAR_J):
        for k, j, N in CONJECTURE:
            rows.append(identity_row("conjecture", Family(FamilyTag.SBAR_J, k, j), cap(N), workers, exact=False))

    if _selected(FamilyTag.SBAR):
        N = min(cap(len(OVERPARTITION_COUNTS) - 1), len(OVERPARTITION_COUNTS) - 1)
        got = count_table(Family(FamilyTag.SBAR, 1), N, workers).totals_by_weight()
        want = OVERPARTITION_COUNTS[: N + 1]
        prod = overpartitions(N).q_coefficients()
        ok = got == want == prod
        rows.append(Row("overpartition-anchor", "SBAR", 1, None, N, "PASS" if ok else "FAIL", " ".join(map(str, got))))

    if _selected(FamilyTag.SCHUR):
        N = cap(SCHUR_N)
        got = count_table(Family(FamilyTag.SCHUR), N, workers).totals_by_weight()
        want = schur_series(N).q_coefficients()
        rows.append(Row("schur-anchor", "SCHUR", 1, None, N, "PASS" if got == want else "FAIL", " ".join(map(str, got))))

    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description="Run the desk-scale acceptance sweep")
    ap.add_argument("--quick", action="store_true", help=f"Cap every N at {QUICK_N}")
    ap.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS)
    ap.add_argument("--out", default=str(settings.REPORT_DIR / "acceptance.csv"))
    args = ap.parse_args()

    logging.basicConfig(level=settings.LOG_LEVEL, format="[%(levelname)s] %(message)s", stream=sys.stderr)

    started = time.time()
    rows = run(args.quick, args.workers)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="") as f:
        w = csv.writer(f)
        w.writerow(["check", "family", "k", "j", "N", "status", "detail"])
        for r in rows:
            w.writerow(r.as_list())

    failed = [r for r in rows if r.status == "FAIL"]
    for r in rows:
        if r.status in ("FAIL", "COUNTEREXAMPLE"):
            log.warning("%s %s k=%s j=%s N=%s: %s", r.check, r.family, r.k, r.j, r.N, r.detail)
    print(f"Wrote {len(rows)} checks to {out} in {time.time() - started:.1f}s ({len(failed)} failed)")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
