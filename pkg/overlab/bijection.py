"""Merge a level-(k-1) overpartition with a distinct partition in color 2^(k-1).

merge_one_level runs four steps:

  1. every part p of mu with p <= L is absorbed by lambda: the first p parts
     grow by one and part p gains the primary color 2^(k-1);
  2. a staircase (L+M-1, ..., L) is taken from the unused parts of mu, and
     every overline of lambda is traded for a generalized staircase part;
  3. what is left of mu is inserted into lambda in color 2^(k-1), with a
     local color exchange whenever the gap to the part above is too small;
  4. the combined staircase is added back, overlining one part per entry.

split_one_level undoes them in reverse order. With checked=True every step
asserts the gap and smallest-part conditions its output must satisfy, and
LemmaViolation names the first one that fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .colors import (
    check_color,
    delta,
    delta_star,
    omega,
    redistribute_forward,
    redistribute_inverse,
    top_color,
    v_min,
    z_max,
)
from .errors import (
    ConfigurationError,
    LemmaViolation,
    MalformedOperandError,
    PreconditionError,
    StaircaseTooLargeError,
)
from .partitions import (
    ColoredPart,
    MonochromePartition,
    Overpartition,
    Staircase,
    first_malformed_index,
    shift_values,
    statistics,
)
from .predicates import Family, FamilyTag, check_membership

log = logging.getLogger(__name__)

Snapshot = Union[Overpartition, MonochromePartition, Staircase]


@dataclass(frozen=True)
class StepTrace:
    """Labeled snapshots in step order."""

    entries: Tuple[Tuple[str, Snapshot], ...] = ()

    def labels(self) -> Tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def get(self, label: str) -> Snapshot:
        for name, snap in self.entries:
            if name == label:
                return snap
        raise KeyError(label)


def _sbar(k: int) -> Family:
    return Family(FamilyTag.SBAR, k)


def _require_level(k: int) -> int:
    if k < 2:
        raise ConfigurationError(f"one-level merge/split needs k >= 2, got k={k}")
    return top_color(k)


def _parts(parts: Sequence[ColoredPart], upto: int, amount: int, where: str) -> List[ColoredPart]:
    try:
        return shift_values(parts, upto, amount)
    except ValueError as e:
        raise PreconditionError(f"{where}: a part would drop below 1") from e


# -----------------------------
# Checked-mode assertions
# -----------------------------

# Gap rules by stage: (use delta*, subtract 1 always instead of only before plain parts)
_STAR_OVERLINE = (True, False)
_STAR_MINUS_ONE = (True, True)
_PLAIN_MINUS_ONE = (False, True)
_PLAIN_OVERLINE = (False, False)


def _assert_gaps(op: Overpartition, rule: Tuple[bool, bool], lemma: str, k: int) -> None:
    star, minus_one = rule
    for i in range(len(op) - 1):
        left, right = op[i], op[i + 1]
        d = delta_star(left.color, right.color, k) if star else delta(left.color, right.color)
        need = omega(left.color) + d - (1 if minus_one or not right.overlined else 0)
        if left.value - right.value < need:
            raise LemmaViolation(lemma, f"{op}: {left} - {right} < {need}")


def _assert_smallest(op: Overpartition, lemma: str) -> None:
    if len(op) and op[len(op) - 1].value < omega(op[len(op) - 1].color):
        raise LemmaViolation(lemma, f"{op}: smallest part below omega of its color")


def _assert_stage(op: Overpartition, rule: Tuple[bool, bool], stage: str, k: int = 0) -> None:
    """k is only read by the delta* rules."""
    _assert_gaps(op, rule, f"gap-after-{stage}", k)
    _assert_smallest(op, f"smallest-part-after-{stage}")


def _assert(cond: bool, lemma: str, message: str) -> None:
    if not cond:
        raise LemmaViolation(lemma, message)


# -----------------------------
# Shared staircase mechanics
# -----------------------------


def _remove_generalized_staircase(parts: List[ColoredPart], where: str) -> Tuple[List[ColoredPart], List[int]]:
    """Strip every overline, topmost first, lowering the parts above it by one."""
    recorded: List[int] = []
    for i in range(len(parts)):
        p = parts[i]
        if not p.overlined:
            continue
        parts[i] = ColoredPart(p.value, p.color, False)
        parts = _parts(parts, i, -1, where)
        recorded.append(i)
    return parts, recorded


def _add_generalized_staircase(parts: List[ColoredPart], staircase: Sequence[int]) -> List[ColoredPart]:
    """For each entry p, smallest first: raise the first p parts and overline part p+1."""
    for p in sorted(staircase):
        if p >= len(parts):
            raise StaircaseTooLargeError(f"staircase part {p} does not fit a partition of {len(parts)} parts")
        parts = shift_values(parts, p, 1)
        q = parts[p]
        parts[p] = ColoredPart(q.value, q.color, True)
    return parts


# -----------------------------
# Forward steps
# -----------------------------


def step1(
    lam: Overpartition,
    mu: MonochromePartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, MonochromePartition]:
    t = _require_level(k)
    report = check_membership(lam, _sbar(k - 1))
    if not report.member:
        raise PreconditionError(f"lambda is not a level-{k - 1} member: {report}", report)
    if mu.color != t or not mu.is_distinct():
        raise MalformedOperandError(f"mu must have distinct parts in color {t}, got {mu}")

    L = len(lam)
    parts = list(lam.parts)
    for p in sorted(q for q in mu.parts if q <= L):
        parts = shift_values(parts, p, 1)
        q = parts[p - 1]
        parts[p - 1] = ColoredPart(q.value, q.color + t, q.overlined)
    lam1 = Overpartition(tuple(parts))
    mu1 = MonochromePartition(tuple(q for q in mu.parts if q > L), t)

    if checked:
        _assert_stage(lam1, _STAR_OVERLINE, "step1", k)
    return lam1, mu1


def step2(
    lam1: Overpartition,
    mu1: MonochromePartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, MonochromePartition, Staircase]:
    L, M = len(lam1), len(mu1)
    if any(p <= L for p in mu1.parts) or not mu1.is_distinct():
        raise PreconditionError(f"unused parts {mu1} must be distinct and exceed L={L}")

    staircase = [L + M - 1 - i for i in range(M)]
    mu2 = MonochromePartition(tuple(p - s for p, s in zip(mu1.parts, staircase)), mu1.color)
    parts, generalized = _remove_generalized_staircase(list(lam1.parts), "step2")
    lam2 = Overpartition(tuple(parts))
    nu = Staircase.from_unsorted(staircase + generalized)

    if checked:
        _assert_stage(lam2, _STAR_MINUS_ONE, "step2", k)
    return lam2, mu2, nu


def _insert_position(parts: Sequence[ColoredPart], value: int) -> int:
    """Below every strictly greater part, above every equal one."""
    i = 0
    while i < len(parts) and parts[i].value > value:
        i += 1
    return i


def step3(
    lam2: Overpartition,
    mu2: MonochromePartition,
    k: int,
    checked: bool = False,
) -> Overpartition:
    t = top_color(k)
    if mu2.color != t:
        raise PreconditionError(f"parts to insert must be in color {t}, got {mu2}")
    if any(p.overlined for p in lam2):
        raise PreconditionError(f"step 3 expects an overline-free partition, got {lam2}")

    parts = list(lam2.parts)
    for p in mu2.parts:
        pos = _insert_position(parts, p)
        parts.insert(pos, ColoredPart(p, t))
        if pos == 0:
            continue
        left = parts[pos - 1]
        j = left.value - p
        if j < omega(left.color) + delta(left.color, t) - 1:
            new_left, new_cur = redistribute_forward(left.color, j, k)
            log.debug("redistribution %s,%s -> %d,%d", left, parts[pos], new_left, new_cur)
            if checked:
                lemma = "redistribution-shape"
                _assert(new_cur != t, lemma, f"right color became {t}")
                _assert(v_min(new_left) == v_min(left.color), lemma, "smallest primary color of the left part moved")
                _assert(z_max(new_cur) == z_max(left.color), lemma, "largest primary color not handed to the right part")
                _assert(delta(new_left - t, new_cur) == 1, lemma, f"delta({new_left - t}, {new_cur}) != 1")
                _assert(
                    j == omega(new_left) + delta(new_left, new_cur) - 1,
                    lemma,
                    f"gap {j} is not tight for colors {new_left}, {new_cur}",
                )
            parts[pos - 1] = ColoredPart(left.value, new_left)
            parts[pos] = ColoredPart(p, new_cur)
    lam3 = Overpartition(tuple(parts))

    if checked:
        _assert_stage(lam3, _PLAIN_MINUS_ONE, "step3", k)
    return lam3


def step4(lam3: Overpartition, nu: Staircase, checked: bool = False) -> Overpartition:
    lam4 = Overpartition(tuple(_add_generalized_staircase(list(lam3.parts), nu.parts)))
    if checked:
        _assert_stage(lam4, _PLAIN_OVERLINE, "step4")
    return lam4


# -----------------------------
# Inverse steps
# -----------------------------


def inv_step4(lam4: Overpartition, checked: bool = False) -> Tuple[Overpartition, Staircase]:
    bad = first_malformed_index(lam4)
    if bad is not None:
        raise PreconditionError(f"{lam4} is not well formed (part {bad})")
    parts, recorded = _remove_generalized_staircase(list(lam4.parts), "inverse step 4")
    lam3 = Overpartition(tuple(parts))
    nu = Staircase.from_unsorted(recorded)
    if checked:
        _assert_stage(lam3, _PLAIN_MINUS_ONE, "inverse-step4")
    return lam3, nu


def inv_step3(lam3: Overpartition, k: int, checked: bool = False) -> Tuple[Overpartition, MonochromePartition]:
    t = top_color(k)
    if any(p.overlined for p in lam3):
        raise PreconditionError(f"inverse step 3 expects an overline-free partition, got {lam3}")
    for i in range(len(lam3) - 1):
        left, right = lam3[i], lam3[i + 1]
        if left.value - right.value < omega(left.color) + delta(left.color, right.color) - 1:
            raise PreconditionError(f"{lam3}: gap between {left} and {right} too small for inverse step 3")

    parts = list(lam3.parts)
    extracted: List[int] = []
    i = len(parts) - 1
    while i >= 0:
        x = parts[i]
        if x.color == t:
            extracted.append(x.value)
            del parts[i]
            i -= 1
            continue
        above = i - 1
        while above >= 0 and parts[above].color == t:
            above -= 1
        if above >= 0:
            y = parts[above]
            if y.color > t and y.value - x.value < omega(y.color) + delta_star(y.color, x.color, k) - 1:
                new_y, _ = redistribute_inverse(y.color, x.color, k)
                log.debug("inverse redistribution %s,%s -> %d,%d", y, x, new_y, t)
                parts[above] = ColoredPart(y.value, new_y)
                extracted.append(x.value)
                del parts[i]
        i -= 1

    lam2 = Overpartition(tuple(parts))
    mu2 = MonochromePartition(tuple(sorted(extracted, reverse=True)), t)
    if checked:
        _assert_stage(lam2, _STAR_MINUS_ONE, "inverse-step3", k)
    return lam2, mu2


def inv_step2(
    lam2: Overpartition,
    mu2: MonochromePartition,
    nu: Staircase,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, MonochromePartition]:
    M = len(mu2)
    L_hat = len(lam2) + M
    prefix = tuple(L_hat - 1 - i for i in range(M))
    if M > len(nu) or nu.parts[:M] != prefix:
        raise PreconditionError(
            f"{M} extracted parts need the staircase prefix {prefix}, got {nu.parts[:M]}"
        )
    mu1 = MonochromePartition(tuple(p + s for p, s in zip(mu2.parts, prefix)), mu2.color)
    try:
        parts = _add_generalized_staircase(list(lam2.parts), nu.parts[M:])
    except StaircaseTooLargeError as e:
        raise PreconditionError(f"inverse step 2: {e}") from e
    lam1 = Overpartition(tuple(parts))
    if checked:
        _assert_stage(lam1, _STAR_OVERLINE, "inverse-step2", k)
    return lam1, mu1


def inv_step1(
    lam1: Overpartition,
    mu1: MonochromePartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, MonochromePartition]:
    t = top_color(k)
    L = len(lam1)
    if any(p <= L for p in mu1.parts):
        raise PreconditionError(f"parts of {mu1} must exceed L={L}")
    parts = list(lam1.parts)
    freed: List[int] = []
    for idx in range(L - 1, -1, -1):
        q = parts[idx]
        if not q.color & t:
            continue
        if q.color == t:
            raise PreconditionError(f"part {q} carries only color {t}")
        parts[idx] = ColoredPart(q.value, q.color - t, q.overlined)
        parts = _parts(parts, idx + 1, -1, "inverse step 1")
        freed.append(idx + 1)
    lam = Overpartition(tuple(parts))
    mu = MonochromePartition(tuple(sorted(mu1.parts + tuple(freed), reverse=True)), t)
    if checked:
        _assert_stage(lam, _PLAIN_OVERLINE, "inverse-step1")
        _assert(mu.is_distinct(), "distinct-output", f"{mu} repeats a part")
    return lam, mu


# -----------------------------
# One level, all levels
# -----------------------------


def merge_one_level(
    lam: Overpartition,
    mu: MonochromePartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, StepTrace]:
    lam1, mu1 = step1(lam, mu, k, checked)
    lam2, mu2, nu = step2(lam1, mu1, k, checked)
    lam3 = step3(lam2, mu2, k, checked)
    lam4 = step4(lam3, nu, checked)
    trace = StepTrace(
        (
            ("lambda", lam),
            ("mu", mu),
            ("lambda1", lam1),
            ("mu1", mu1),
            ("lambda2", lam2),
            ("mu2", mu2),
            ("nu", nu),
            ("lambda3", lam3),
            ("lambda4", lam4),
        )
    )
    if checked:
        total = lam.weight + mu.weight
        _assert(lam1.weight + mu1.weight == total, "weight-conservation", "step 1")
        _assert(lam2.weight + mu2.weight + nu.weight == total, "weight-conservation", "step 2")
        _assert(lam3.weight + nu.weight == lam4.weight == total, "weight-conservation", "steps 3-4")
        before = statistics(lam, k - 1)
        after = statistics(lam4, k)
        _assert(after.s == before.s + len(mu1), "overline-count", f"s={after.s}, expected {before.s} + {len(mu1)}")
        _assert(after.nonoverlined == before.nonoverlined, "statistics-preserved", "non-overlined count changed")
        _assert(after.x == before.x + (len(mu),), "statistics-preserved", f"x={after.x}, expected {before.x + (len(mu),)}")
        report = check_membership(lam4, _sbar(k))
        _assert(report.member, "image-membership", f"{lam4}: {report}")
    return lam4, trace


def split_one_level(
    lam4: Overpartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, MonochromePartition, StepTrace]:
    _require_level(k)
    report = check_membership(lam4, _sbar(k))
    if not report.member:
        raise PreconditionError(f"not a level-{k} member: {report}", report)

    s_hat = statistics(lam4, k).s
    lam3, nu = inv_step4(lam4, checked)
    if checked:
        L_hat = len(lam4)
        want = tuple(L_hat - 1 - i for i in range(s_hat))
        _assert(nu.parts[:s_hat] == want, "staircase-prefix", f"{nu.parts} should start with {want}")
    lam2, mu2 = inv_step3(lam3, k, checked)
    if checked:
        _assert(len(mu2) <= s_hat, "extracted-bound", f"{len(mu2)} extracted parts exceed s={s_hat}")
    lam1, mu1 = inv_step2(lam2, mu2, nu, k, checked)
    lam, mu = inv_step1(lam1, mu1, k, checked)
    trace = StepTrace(
        (
            ("lambda4", lam4),
            ("lambda3_hat", lam3),
            ("nu_hat", nu),
            ("lambda2_hat", lam2),
            ("mu2_hat", mu2),
            ("lambda1_hat", lam1),
            ("mu1_hat", mu1),
            ("lambda_hat", lam),
            ("mu_hat", mu),
        )
    )
    if checked:
        _assert(lam.weight + mu.weight == lam4.weight, "weight-conservation", "split")
        back = check_membership(lam, _sbar(k - 1))
        _assert(back.member, "image-membership", f"{lam}: {back}")
    return lam, mu, trace


def fold_full(
    base: Overpartition,
    mus: Sequence[MonochromePartition],
    checked: bool = False,
) -> Overpartition:
    """Merge color-2, color-4, ... partitions into a color-1 base, one level at a time."""
    for p in base:
        check_color(p.color, 1)
    report = check_membership(base, _sbar(1))
    if not report.member:
        raise PreconditionError(f"base is not a level-1 member: {report}", report)
    lam = base
    for i, mu in enumerate(mus):
        level = i + 2
        lam, _ = merge_one_level(lam, mu, level, checked)
        log.debug("fold level %d -> %s", level, lam)
    return lam


def unfold_full(
    lam: Overpartition,
    k: int,
    checked: bool = False,
) -> Tuple[Overpartition, List[MonochromePartition]]:
    """Inverse of fold_full: the color-1 base and the partitions in colors 2, 4, ..., 2^(k-1)."""
    mus: List[MonochromePartition] = []
    for level in range(k, 1, -1):
        lam, mu, _ = split_one_level(lam, level, checked)
        mus.append(mu)
    if k == 1:
        report = check_membership(lam, _sbar(1))
        if not report.member:
            raise PreconditionError(f"not a level-1 member: {report}", report)
    mus.reverse()
    return lam, mus
