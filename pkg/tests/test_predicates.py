import pytest

from overlab.enumeration import enumerate_family, iter_colored_overpartitions
from overlab.errors import ConfigurationError
from overlab.partitions import Overpartition
from overlab.predicates import (
    Condition,
    Family,
    FamilyTag,
    check_dbar_equivalence,
    check_membership,
    family_key,
    is_member,
)

LAMBDA4_K3 = Overpartition.of(
    (18, 3, True), (15, 5, True), (14, 5), (12, 2, True), (11, 1), (10, 5),
    (7, 4, True), (6, 4, True), (4, 4, True), (3, 2, True), (2, 2, True), (1, 1, True),
)


def sbar(k):
    return Family(FamilyTag.SBAR, k)


def test_level_three_image_is_member():
    assert check_membership(LAMBDA4_K3, sbar(3)).member
    assert check_membership(LAMBDA4_K3, sbar(3), expect=(103, 3, 6, 4, 6)).member


def test_prescribed_statistics_mismatch():
    report = check_membership(LAMBDA4_K3, sbar(3), expect=(103, 3, 6, 4, 5))
    assert not report.member
    assert report.violated == Condition.X_COUNTS


def test_smallest_part_one_in_color_three():
    report = check_membership(Overpartition.of((1, 3)), sbar(2))
    assert not report.member
    assert report.violated == Condition.SMALLEST_PART
    assert report.location == 0


def test_schur_gap_rule():
    schur = Family(FamilyTag.SCHUR)
    assert is_member(Overpartition.of((8, 1), (5, 1), (2, 1)), schur)
    report = check_membership(Overpartition.of((9, 1), (6, 1), (3, 1)), schur)
    assert report.violated == Condition.GAP
    assert report.location == 0


def test_gap_violation_reported_with_location():
    # omega(3) + delta(3, 1) = 2 before an overlined part
    op = Overpartition.of((5, 3), (4, 1, True))
    report = check_membership(op, sbar(2))
    assert report.violated == Condition.GAP
    assert report.location == 0


def test_overline_suffix():
    # one part with v(c) = 2 forces the smallest part to be overlined
    assert not is_member(Overpartition.of((3, 2), (1, 1)), sbar(2))
    assert is_member(Overpartition.of((3, 2), (1, 1, True)), sbar(2))
    report = check_membership(Overpartition.of((1, 2),), sbar(2))
    assert report.violated == Condition.OVERLINE_SUFFIX


def test_malformed_and_color_range():
    assert check_membership(Overpartition.of((1, 1), (2, 1)), sbar(1)).violated == Condition.WELLFORMED
    assert check_membership(Overpartition.of((3, 4)), sbar(2)).violated == Condition.COLOR_RANGE
    assert check_membership(Overpartition.of((3, 1, True)), Family(FamilyTag.B, 1)).violated == Condition.WELLFORMED


def test_family_validation():
    with pytest.raises(ConfigurationError):
        Family(FamilyTag.D1, 3)
    with pytest.raises(ConfigurationError):
        Family(FamilyTag.SBAR_J, 3)
    with pytest.raises(ConfigurationError):
        Family(FamilyTag.SBAR_J, 2, 3)
    with pytest.raises(ConfigurationError):
        Family(FamilyTag.SBAR, 2, 1)
    with pytest.raises(ConfigurationError):
        Family.parse("nope", 2)
    assert Family.parse("sbar-j", 3, 2) == Family(FamilyTag.SBAR_J, 3, 2)
    assert Family.parse("dbar", 2).tag == FamilyTag.DBAR_MATRIX
    assert Family(FamilyTag.SCHUR, 5) == Family(FamilyTag.SCHUR)


def test_family_key():
    assert family_key(LAMBDA4_K3, sbar(3)) == (103, 3, 6, 4, 6)
    assert family_key(Overpartition.of((3, 1), (1, 2)), Family(FamilyTag.B, 2)) == (4, 0, 1, 1)
    assert family_key(Overpartition.of((8, 1), (5, 1)), Family(FamilyTag.SCHUR)) == (13, 0)


def test_matrix_equivalence_examples():
    assert check_dbar_equivalence(Overpartition())
    assert check_dbar_equivalence(Overpartition.of((2, 3, True), (1, 1)))


def test_matrix_equivalence_exhaustive():
    for n in range(11):
        for op in iter_colored_overpartitions(n, 3):
            assert check_dbar_equivalence(op), str(op)


@pytest.mark.slow
def test_level_two_matches_first_companion():
    d1 = Family(FamilyTag.D1, 2)
    for n in range(13):
        for op in iter_colored_overpartitions(n, 3):
            assert is_member(op, sbar(2)) == is_member(op, d1), str(op)


def test_level_one_accepts_every_overpartition():
    for n in range(13):
        for op in iter_colored_overpartitions(n, 1):
            assert is_member(op, sbar(1)), str(op)


def test_without_suffix_condition_is_larger():
    tbar = Family(FamilyTag.TBAR, 2)
    for n in range(11):
        for op in enumerate_family(sbar(2), n):
            assert is_member(op, tbar)


def test_sbar_j_at_j_one_is_sbar():
    fam = Family(FamilyTag.SBAR_J, 2, 1)
    for n in range(9):
        for op in iter_colored_overpartitions(n, 3):
            assert is_member(op, fam) == is_member(op, sbar(2))
