"""Value types for colored overpartitions and the statistics theorems count by.

Parts are stored largest first, exactly as written: (12bar_3, 9bar_1, 9_3, ...)
is Overpartition.of((12, 3, True), (9, 1, True), (9, 3), ...). Equal values in
different colors keep the order the sequence gives them; nothing re-sorts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .colors import check_color, v_min

# Flat exponent key: (n, m, x1, ..., xk).
ExponentKey = Tuple[int, ...]

PartSpec = Union["ColoredPart", Tuple[int, int], Tuple[int, int, bool]]


# -----------------------------
# Parts and partitions
# -----------------------------


@dataclass(frozen=True)
class ColoredPart:
    value: int
    color: int = 1
    overlined: bool = False

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"part value must be >= 1, got {self.value}")
        if self.color < 1:
            raise ValueError(f"part color must be >= 1, got {self.color}")

    def __str__(self) -> str:
        bar = "~" if self.overlined else ""
        return f"{bar}{self.value}_{self.color}"


def _as_part(spec: PartSpec) -> ColoredPart:
    if isinstance(spec, ColoredPart):
        return spec
    return ColoredPart(*spec)


@dataclass(frozen=True)
class Overpartition:
    parts: Tuple[ColoredPart, ...] = ()

    @classmethod
    def of(cls, *specs: PartSpec) -> "Overpartition":
        """Build from (value, color[, overlined]) tuples."""
        return cls(tuple(_as_part(s) for s in specs))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[ColoredPart]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> ColoredPart:
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(p.value for p in self.parts)

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(p.color for p in self.parts)


@dataclass(frozen=True)
class MonochromePartition:
    """Parts in a single color, largest first.

    Distinctness is not enforced here: intermediate partitions of the
    bijection may repeat a value. `is_distinct` tells the two apart.
    """

    parts: Tuple[int, ...] = ()
    color: int = 1

    def __post_init__(self) -> None:
        if self.color < 1:
            raise ValueError(f"color must be >= 1, got {self.color}")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be >= 1, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + f")_{self.color}"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def as_overpartition(self) -> Overpartition:
        return Overpartition(tuple(ColoredPart(p, self.color) for p in self.parts))


@dataclass(frozen=True)
class Staircase:
    """Strictly decreasing nonnegative parts; a zero can only come last."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValueError(f"staircase parts must be >= 0, got {self.parts}")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"staircase must be strictly decreasing, got {self.parts}")

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Staircase":
        return cls(tuple(sorted(parts, reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)


# -----------------------------
# Statistics
# -----------------------------


@dataclass(frozen=True)
class Statistics:
    weight: int
    length: int
    nonoverlined: int
    x: Tuple[int, ...]
    vcounts: Tuple[int, ...]
    s: int

    @property
    def key(self) -> ExponentKey:
        return (self.weight, self.nonoverlined) + self.x


def is_wellformed(op: Overpartition) -> bool:
    return first_malformed_index(op) is None


def first_malformed_index(op: Overpartition) -> int | None:
    """Index of the first part breaking weak decrease or overline-first-occurrence."""
    parts = op.parts
    for i, p in enumerate(parts):
        if i == 0:
            continue
        prev = parts[i - 1]
        if prev.value < p.value:
            return i
        if p.overlined and prev.value == p.value:
            return i
    return None


def statistics(op: Overpartition, k: int) -> Statistics:
    x: List[int] = [0] * k
    vcounts: List[int] = [0] * k
    weight = 0
    nonoverlined = 0
    for p in op.parts:
        check_color(p.color, k)
        weight += p.value
        if not p.overlined:
            nonoverlined += 1
        for b in range(k):
            if p.color >> b & 1:
                x[b] += 1
        vcounts[v_min(p.color).bit_length() - 1] += 1
    return Statistics(
        weight=weight,
        length=len(op.parts),
        nonoverlined=nonoverlined,
        x=tuple(x),
        vcounts=tuple(vcounts),
        s=sum(vcounts[1:]),
    )


def shift_values(parts: Sequence[ColoredPart], upto: int, amount: int) -> List[ColoredPart]:
    """Add `amount` to the first `upto` parts."""
    out = list(parts)
    for i in range(upto):
        p = out[i]
        out[i] = ColoredPart(p.value + amount, p.color, p.overlined)
    return out
