"""Exhaustive generation of family members and their count tables.

Members are generated depth-first, largest part first. At each position the
candidates run value descending, then color ascending, overlined before
plain, and a candidate is kept only if the pairwise gap rule against the part
before it holds. Whole sequences are then run through check_membership, so
the pruning only has to be sound, not complete.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .partitions import ColoredPart, ExponentKey, Overpartition
from .predicates import Family, check_membership, family_key, pair_allowed, part_allowed
from .qseries import MultiSeries

log = logging.getLogger(__name__)


# -----------------------------
# Generation
# -----------------------------


@lru_cache(maxsize=None)
def _parts_of_value(family: Family, value: int) -> Tuple[ColoredPart, ...]:
    """Every single part of this value the family admits, in candidate order."""
    flags = (True, False) if family.allows_overlines else (False,)
    out = []
    for color in range(1, family.max_color + 1):
        for overlined in flags:
            p = ColoredPart(value, color, overlined)
            if part_allowed(family, p) is None:
                out.append(p)
    return tuple(out)


def _extend(family: Family, prefix: List[ColoredPart], remaining: int) -> Iterator[Tuple[ColoredPart, ...]]:
    if remaining == 0:
        yield tuple(prefix)
        return
    prev = prefix[-1] if prefix else None
    top = remaining if prev is None else min(remaining, prev.value)
    for value in range(top, 0, -1):
        for p in _parts_of_value(family, value):
            if prev is not None:
                if p.overlined and prev.value == value:
                    continue
                if not pair_allowed(family, prev, p):
                    continue
            prefix.append(p)
            yield from _extend(family, prefix, remaining - value)
            prefix.pop()


def iter_family(family: Family, n: int) -> Iterator[Overpartition]:
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    for parts in _extend(family, [], n):
        op = Overpartition(parts)
        if check_membership(op, family).member:
            yield op


def enumerate_family(family: Family, n: int) -> List[Overpartition]:
    """All members of weight exactly n, in generation order."""
    return list(iter_family(family, n))


def iter_colored_overpartitions(n: int, max_color: int, overlines: bool = True) -> Iterator[Overpartition]:
    """Every well-formed colored overpartition of n, no family constraints."""

    def rec(prefix: List[ColoredPart], remaining: int) -> Iterator[Tuple[ColoredPart, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        top = remaining if not prefix else min(remaining, prefix[-1].value)
        for value in range(top, 0, -1):
            for color in range(1, max_color + 1):
                for overlined in ((True, False) if overlines else (False,)):
                    if overlined and prefix and prefix[-1].value == value:
                        continue
                    prefix.append(ColoredPart(value, color, overlined))
                    yield from rec(prefix, remaining - value)
                    prefix.pop()

    for parts in rec([], n):
        yield Overpartition(parts)


def enumerate_unpruned(family: Family, n: int) -> List[Overpartition]:
    """Filter-everything oracle: generate all colored overpartitions, keep members."""
    return [
        op
        for op in iter_colored_overpartitions(n, family.max_color, overlines=True)
        if check_membership(op, family).member
    ]


def distinct_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into distinct parts, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in distinct_partitions(n - first, first - 1):
            yield (first,) + rest


# -----------------------------
# Count tables
# -----------------------------


@dataclass(frozen=True)
class CountTable:
    family: Family
    N: int
    entries: Dict[ExponentKey, int] = field(default_factory=dict)

    def rows(self) -> List[Tuple[ExponentKey, int]]:
        return sorted(self.entries.items())

    def restrict(self, n_max: int) -> "CountTable":
        if n_max > self.N:
            raise ValueError(f"cannot extend table at N={self.N} to {n_max}")
        return CountTable(self.family, n_max, {k: c for k, c in self.entries.items() if k[0] <= n_max})

    def with_m(self, m: int) -> "CountTable":
        return CountTable(self.family, self.N, {k: c for k, c in self.entries.items() if k[1] == m})

    def totals_by_weight(self) -> List[int]:
        out = [0] * (self.N + 1)
        for key, c in self.entries.items():
            out[key[0]] += c
        return out


def _count_weight(family: Family, n: int) -> Dict[ExponentKey, int]:
    counts: Dict[ExponentKey, int] = defaultdict(int)
    for op in iter_family(family, n):
        counts[family_key(op, family)] += 1
    log.debug("%s n=%d: %d keys", family, n, len(counts))
    return dict(counts)


def count_table(family: Family, N: int, workers: int = 1) -> CountTable:
    """Count members of weight 0..N by statistics key.

    With workers > 1 the weights are farmed out to processes; results are
    merged in weight order, so the table does not depend on the worker count.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    weights = list(range(N + 1))
    if workers > 1 and N > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_weight, [family] * len(weights), weights))
    else:
        parts = [_count_weight(family, n) for n in weights]
    entries: Dict[ExponentKey, int] = {}
    for chunk in parts:
        for key in sorted(chunk):
            entries[key] = chunk[key]
    return CountTable(family, N, entries)


# -----------------------------
# Comparison against a product
# -----------------------------


@dataclass(frozen=True)
class Comparison:
    matched: bool
    compared: int
    mismatches: int
    first_mismatch: Optional[ExponentKey] = None
    count_at_mismatch: int = 0
    coeff_at_mismatch: int = 0


def compare_table(table: CountTable, series: MultiSeries) -> Comparison:
    """Coefficient-by-coefficient comparison over the union of keys."""
    if series.truncation != table.N:
        series = series.restrict(table.N)
    ref = series.as_dict()
    keys = sorted(set(table.entries) | set(ref))
    bad = [k for k in keys if table.entries.get(k, 0) != ref.get(k, 0)]
    if not bad:
        return Comparison(True, len(keys), 0)
    first = bad[0]
    return Comparison(
        matched=False,
        compared=len(keys),
        mismatches=len(bad),
        first_mismatch=first,
        count_at_mismatch=table.entries.get(first, 0),
        coeff_at_mismatch=ref.get(first, 0),
    )
