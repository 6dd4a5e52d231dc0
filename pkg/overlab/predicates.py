"""Membership tests for the constrained overpartition families.

Families and their conditions (parts lambda_1 >= ... >= lambda_L, colors c_i):

  SBAR      (i) lambda_L >= omega(c_L)
            (iii) lambda_i - lambda_{i+1} >= omega(c_i) + delta(c_i, c_{i+1}) - [lambda_{i+1} not overlined]
            (iv) the s smallest parts are overlined, s = number of parts with v(c) > 1
  SBAR_J    as SBAR, but s counts parts with v(c) != 2^(j-1)
  TBAR      SBAR without (iv)
  B         plain colored partitions, (i) and gaps >= omega + delta (no overlines)
  DBAR      k=2, gaps read off a 6x6 matrix, no part 1 in color 3
  D1 / D2   DBAR plus: the parts-in-color-2 (resp. color-1) smallest parts are overlined
  SCHUR     uncolored, gaps >= 6 between two multiples of 3, >= 3 otherwise
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from .colors import check_color, delta, omega
from .errors import ConfigurationError, InvalidColorError
from .partitions import (
    ColoredPart,
    ExponentKey,
    Overpartition,
    first_malformed_index,
    statistics,
)


class FamilyTag(str, Enum):
    SBAR = "SBAR"
    SBAR_J = "SBAR_J"
    TBAR = "TBAR"
    B = "B"
    D1 = "D1"
    D2 = "D2"
    DBAR_MATRIX = "DBAR_MATRIX"
    SCHUR = "SCHUR"


# CLI spellings -> tags
FAMILY_ALIASES: Dict[str, FamilyTag] = {
    "sbar": FamilyTag.SBAR,
    "sbar-j": FamilyTag.SBAR_J,
    "sbar_j": FamilyTag.SBAR_J,
    "tbar": FamilyTag.TBAR,
    "b": FamilyTag.B,
    "d1": FamilyTag.D1,
    "d2": FamilyTag.D2,
    "dbar": FamilyTag.DBAR_MATRIX,
    "dbar-matrix": FamilyTag.DBAR_MATRIX,
    "dbar_matrix": FamilyTag.DBAR_MATRIX,
    "schur": FamilyTag.SCHUR,
}

_LEVEL_TWO_ONLY = (FamilyTag.D1, FamilyTag.D2, FamilyTag.DBAR_MATRIX)


@dataclass(frozen=True)
class Family:
    tag: FamilyTag
    k: int = 1
    j: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag == FamilyTag.SCHUR:
            # k is ignored; normalise so equal families compare equal
            object.__setattr__(self, "k", 1)
            object.__setattr__(self, "j", None)
            return
        if self.k < 1:
            raise ConfigurationError(f"{self.tag.value}: k must be >= 1, got {self.k}")
        if self.tag in _LEVEL_TWO_ONLY and self.k != 2:
            raise ConfigurationError(f"{self.tag.value} is only defined for k=2, got k={self.k}")
        if self.tag == FamilyTag.SBAR_J:
            if self.j is None or not 1 <= self.j <= self.k:
                raise ConfigurationError(f"SBAR_J needs 1 <= j <= k={self.k}, got j={self.j}")
        elif self.j is not None:
            raise ConfigurationError(f"{self.tag.value} takes no j (got j={self.j})")

    @classmethod
    def parse(cls, name: str, k: int = 1, j: Optional[int] = None) -> "Family":
        tag = FAMILY_ALIASES.get(name.strip().lower())
        if tag is None:
            try:
                tag = FamilyTag(name.strip().upper())
            except ValueError as e:
                raise ConfigurationError(f"unknown family {name!r}") from e
        return cls(tag, k, j)

    def __str__(self) -> str:
        if self.tag == FamilyTag.SCHUR:
            return "SCHUR"
        if self.tag == FamilyTag.SBAR_J:
            return f"SBAR_J(j={self.j}, k={self.k})"
        return f"{self.tag.value}(k={self.k})"

    @property
    def allows_overlines(self) -> bool:
        return self.tag not in (FamilyTag.B, FamilyTag.SCHUR)

    @property
    def tracks_d(self) -> bool:
        """Whether the generating function carries the d (non-overlined) marker."""
        return self.allows_overlines

    @property
    def markers(self) -> int:
        """Number of y-markers in statistics keys."""
        return 0 if self.tag == FamilyTag.SCHUR else self.k

    @property
    def max_color(self) -> int:
        return 1 if self.tag == FamilyTag.SCHUR else (1 << self.k) - 1


class Condition(str, Enum):
    SMALLEST_PART = "(i) smallest-part"
    X_COUNTS = "(ii) x-counts"
    GAP = "(iii) gap"
    OVERLINE_SUFFIX = "(iv) overline-suffix"
    WELLFORMED = "wellformed"
    COLOR_RANGE = "color-range"


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    violated: Optional[Condition] = None
    location: Optional[int] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.member != (self.violated is None):
            raise ValueError("a report is a member exactly when nothing is violated")

    def __str__(self) -> str:
        if self.member:
            return "member"
        where = "" if self.location is None else f" at part {self.location}"
        extra = f": {self.detail}" if self.detail else ""
        return f"non-member, violated {self.violated.value}{where}{extra}"


MEMBER = MembershipReport(True)


def _fail(cond: Condition, location: Optional[int] = None, detail: str = "") -> MembershipReport:
    return MembershipReport(False, cond, location, detail)


# -----------------------------
# Gap rules
# -----------------------------


def sbar_gap(left: ColoredPart, right: ColoredPart) -> int:
    """Required lambda_i - lambda_{i+1} for the overpartition families."""
    return omega(left.color) + delta(left.color, right.color) - (0 if right.overlined else 1)


def b_gap(left: ColoredPart, right: ColoredPart) -> int:
    return omega(left.color) + delta(left.color, right.color)


# Rows: colour of lambda_i, columns: colour of lambda_{i+1}, both ordered
# 1, 2, 3, 1d, 2d, 3d where "d" marks a part that is not overlined.
DBAR_GAP_MATRIX: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 1, 0, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (2, 2, 2, 1, 1, 1),
    (1, 2, 1, 0, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (2, 2, 2, 1, 1, 1),
)


def _dbar_index(p: ColoredPart) -> int:
    if not 1 <= p.color <= 3:
        raise InvalidColorError(f"matrix gap rule needs colors 1..3, got {p.color}")
    return p.color - 1 + (0 if p.overlined else 3)


def dbar_matrix_gap(left: ColoredPart, right: ColoredPart) -> int:
    return DBAR_GAP_MATRIX[_dbar_index(left)][_dbar_index(right)]


def schur_gap(left: ColoredPart, right: ColoredPart) -> int:
    return 6 if left.value % 3 == 0 and right.value % 3 == 0 else 3


_GAP_RULES: Dict[FamilyTag, Callable[[ColoredPart, ColoredPart], int]] = {
    FamilyTag.SBAR: sbar_gap,
    FamilyTag.SBAR_J: sbar_gap,
    FamilyTag.TBAR: sbar_gap,
    FamilyTag.B: b_gap,
    FamilyTag.D1: dbar_matrix_gap,
    FamilyTag.D2: dbar_matrix_gap,
    FamilyTag.DBAR_MATRIX: dbar_matrix_gap,
    FamilyTag.SCHUR: schur_gap,
}


def required_gap(family: Family, left: ColoredPart, right: ColoredPart) -> int:
    return _GAP_RULES[family.tag](left, right)


# -----------------------------
# Local checks (shared with the enumerator's pruning)
# -----------------------------


def part_allowed(family: Family, p: ColoredPart) -> Optional[Condition]:
    """Conditions a single part can break on its own, wherever it sits."""
    if p.color > family.max_color:
        return Condition.COLOR_RANGE
    if p.overlined and not family.allows_overlines:
        return Condition.WELLFORMED
    if family.tag in _LEVEL_TWO_ONLY and p.value == 1 and p.color == 3:
        return Condition.SMALLEST_PART
    return None


def pair_allowed(family: Family, left: ColoredPart, right: ColoredPart) -> bool:
    return left.value - right.value >= required_gap(family, left, right)


def smallest_part_allowed(family: Family, last: ColoredPart) -> bool:
    if family.tag in (FamilyTag.SCHUR,) + _LEVEL_TWO_ONLY:
        # the D families forbid 1_3 anywhere; part_allowed covers that
        return True
    return last.value >= omega(last.color)


def overline_suffix_size(op: Overpartition, family: Family) -> Optional[int]:
    """How many of the smallest parts must be overlined, or None if no such rule."""
    tag = family.tag
    if tag == FamilyTag.SBAR:
        return statistics(op, family.k).s
    if tag == FamilyTag.SBAR_J:
        vc = statistics(op, family.k).vcounts
        return sum(c for r, c in enumerate(vc) if r != family.j - 1)
    if tag == FamilyTag.D1:
        return sum(1 for p in op if p.color == 2)
    if tag == FamilyTag.D2:
        return sum(1 for p in op if p.color == 1)
    return None


# -----------------------------
# Membership
# -----------------------------


def family_key(op: Overpartition, family: Family) -> ExponentKey:
    """Statistics key (n, m, x...) as the family's generating function sees it."""
    if family.tag == FamilyTag.SCHUR:
        return (op.weight, 0)
    st = statistics(op, family.k)
    m = st.nonoverlined if family.tracks_d else 0
    return (st.weight, m) + st.x


def check_membership(
    op: Overpartition,
    family: Family,
    expect: Optional[ExponentKey] = None,
) -> MembershipReport:
    """Evaluate the family's conditions on op; first failure wins.

    With `expect` the statistics key must also match, which is membership
    in the set with prescribed (n, m, x) rather than the union over keys.
    """
    bad = first_malformed_index(op)
    if bad is not None:
        return _fail(Condition.WELLFORMED, bad, "values must weakly decrease; only first occurrences may be overlined")

    for i, p in enumerate(op):
        cond = part_allowed(family, p)
        if cond is not None:
            return _fail(cond, i, f"part {p} not allowed in {family}")
        if family.tag != FamilyTag.SCHUR:
            try:
                check_color(p.color, family.k)
            except InvalidColorError as e:
                return _fail(Condition.COLOR_RANGE, i, str(e))

    L = len(op)
    if L and not smallest_part_allowed(family, op[L - 1]):
        return _fail(Condition.SMALLEST_PART, L - 1, f"smallest part {op[L - 1]} below omega of its color")

    for i in range(L - 1):
        left, right = op[i], op[i + 1]
        need = required_gap(family, left, right)
        if left.value - right.value < need:
            return _fail(Condition.GAP, i, f"{left} - {right} = {left.value - right.value} < {need}")

    s = overline_suffix_size(op, family)
    if s is not None:
        if s > L:
            return _fail(Condition.OVERLINE_SUFFIX, None, f"{s} smallest parts must be overlined but only {L} exist")
        for i in range(L - s, L):
            if not op[i].overlined:
                return _fail(Condition.OVERLINE_SUFFIX, i, f"the {s} smallest parts must be overlined")

    if expect is not None:
        got = family_key(op, family)
        if tuple(expect) != got:
            return _fail(Condition.X_COUNTS, None, f"statistics {got} differ from expected {tuple(expect)}")

    return MEMBER


def is_member(op: Overpartition, family: Family) -> bool:
    return check_membership(op, family).member


def check_dbar_equivalence(op: Overpartition) -> bool:
    """True iff the matrix gap rule and the omega/delta formula agree on every adjacent pair."""
    for left, right in zip(op.parts, op.parts[1:]):
        if dbar_matrix_gap(left, right) != sbar_gap(left, right):
            return False
    return True
