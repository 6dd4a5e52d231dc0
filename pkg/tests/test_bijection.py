from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overlab.bijection import (
    fold_full,
    inv_step2,
    merge_one_level,
    split_one_level,
    step4,
    unfold_full,
)
from overlab.colors import top_color
from overlab.enumeration import distinct_partitions, enumerate_family
from overlab.errors import (
    ConfigurationError,
    LemmaViolation,
    MalformedOperandError,
    PreconditionError,
    StaircaseTooLargeError,
)
from overlab.partitions import MonochromePartition, Overpartition, Staircase, statistics
from overlab.predicates import Condition, Family, FamilyTag, check_membership

# Level 2 worked example
LAMBDA = Overpartition.of((8, 1, True), (6, 1, True), (6, 1), (4, 1, True), (3, 1), (1, 1))
MU2 = MonochromePartition((8, 7, 3, 1), 2)
LAMBDA_K2 = Overpartition.of(
    (12, 3, True), (9, 1, True), (9, 3), (6, 1, True), (5, 1), (3, 2), (2, 2, True), (1, 1, True)
)

# Level 3 worked example, continuing from the level 2 image
MU4 = MonochromePartition((17, 12, 11, 9, 5, 2), 4)
LAMBDA4_K3 = Overpartition.of(
    (18, 3, True), (15, 5, True), (14, 5), (12, 2, True), (11, 1), (10, 5),
    (7, 4, True), (6, 4, True), (4, 4, True), (3, 2, True), (2, 2, True), (1, 1, True),
)


def sbar(k):
    return Family(FamilyTag.SBAR, k)


# -----------------------------
# Worked examples
# -----------------------------


def test_level_two_every_step():
    lam4, trace = merge_one_level(LAMBDA, MU2, 2, checked=True)
    assert lam4 == LAMBDA_K2
    assert trace.labels() == ("lambda", "mu", "lambda1", "mu1", "lambda2", "mu2", "nu", "lambda3", "lambda4")
    assert trace.get("lambda1") == Overpartition.of((10, 3, True), (7, 1, True), (7, 3), (4, 1, True), (3, 1), (1, 1))
    assert trace.get("mu1") == MonochromePartition((8, 7), 2)
    assert trace.get("lambda2") == Overpartition.of((8, 3), (6, 1), (6, 3), (4, 1), (3, 1), (1, 1))
    assert trace.get("mu2") == MonochromePartition((1, 1), 2)
    assert trace.get("nu") == Staircase((7, 6, 3, 1, 0))
    assert trace.get("lambda3") == Overpartition.of((8, 3), (6, 1), (6, 3), (4, 1), (3, 1), (1, 2), (1, 2), (1, 1))


def test_level_three_every_step():
    lam4, trace = merge_one_level(LAMBDA_K2, MU4, 3, checked=True)
    assert lam4 == LAMBDA4_K3
    assert trace.get("lambda1") == Overpartition.of(
        (14, 3, True), (11, 5, True), (10, 3), (7, 1, True), (6, 5), (3, 2), (2, 2, True), (1, 1, True)
    )
    assert trace.get("mu1") == MonochromePartition((17, 12, 11, 9), 4)
    assert trace.get("lambda2") == Overpartition.of((10, 3), (8, 5), (7, 3), (5, 1), (4, 5), (1, 2), (1, 2), (1, 1))
    assert trace.get("mu2") == MonochromePartition((6, 2, 2, 1), 4)
    assert trace.get("nu") == Staircase((11, 10, 9, 8, 7, 6, 3, 1, 0))
    # 7_3 and the inserted 6_4 exchange colors to 7_5, 6_2
    assert trace.get("lambda3") == Overpartition.of(
        (10, 3), (8, 5), (7, 5), (6, 2), (5, 1), (4, 5), (2, 4), (2, 4), (1, 4), (1, 2), (1, 2), (1, 1)
    )
    assert check_membership(lam4, sbar(3), expect=(103, 3, 6, 4, 6)).member


def test_level_three_split_every_step():
    lam, mu, trace = split_one_level(LAMBDA4_K3, 3, checked=True)
    assert (lam, mu) == (LAMBDA_K2, MU4)
    assert trace.get("lambda3_hat") == Overpartition.of(
        (10, 3), (8, 5), (7, 5), (6, 2), (5, 1), (4, 5), (2, 4), (2, 4), (1, 4), (1, 2), (1, 2), (1, 1)
    )
    assert trace.get("nu_hat") == Staircase((11, 10, 9, 8, 7, 6, 3, 1, 0))
    assert trace.get("lambda2_hat") == Overpartition.of((10, 3), (8, 5), (7, 3), (5, 1), (4, 5), (1, 2), (1, 2), (1, 1))
    assert trace.get("mu2_hat") == MonochromePartition((6, 2, 2, 1), 4)
    assert trace.get("mu1_hat") == MonochromePartition((17, 12, 11, 9), 4)
    assert trace.get("lambda1_hat") == Overpartition.of(
        (14, 3, True), (11, 5, True), (10, 3), (7, 1, True), (6, 5), (3, 2), (2, 2, True), (1, 1, True)
    )


def test_level_two_split():
    lam, mu, _ = split_one_level(LAMBDA_K2, 2, checked=True)
    assert (lam, mu) == (LAMBDA, MU2)


def test_fold_and_unfold_the_worked_tower():
    assert fold_full(LAMBDA, [MU2, MU4], checked=True) == LAMBDA4_K3
    assert unfold_full(LAMBDA4_K3, 3, checked=True) == (LAMBDA, [MU2, MU4])
    assert fold_full(LAMBDA, []) == LAMBDA
    assert unfold_full(LAMBDA, 1) == (LAMBDA, [])


def test_empty_mu_leaves_lambda():
    lam4, _ = merge_one_level(LAMBDA_K2, MonochromePartition((), 4), 3, checked=True)
    assert lam4 == LAMBDA_K2


def test_weights_are_conserved_along_the_trace():
    _, trace = merge_one_level(LAMBDA_K2, MU4, 3)
    total = LAMBDA_K2.weight + MU4.weight
    assert trace.get("lambda1").weight + trace.get("mu1").weight == total
    assert trace.get("lambda2").weight + trace.get("mu2").weight + trace.get("nu").weight == total
    assert trace.get("lambda3").weight + trace.get("nu").weight == trace.get("lambda4").weight == total


# -----------------------------
# Rejected inputs
# -----------------------------


def test_non_member_lambda_is_rejected_with_report():
    with pytest.raises(PreconditionError) as e:
        merge_one_level(Overpartition.of((1, 3)), MonochromePartition((2,), 4), 3)
    assert e.value.report is not None
    assert e.value.report.violated == Condition.SMALLEST_PART


def test_bad_mu_is_rejected():
    with pytest.raises(MalformedOperandError):
        merge_one_level(LAMBDA, MonochromePartition((3, 3), 2), 2)
    with pytest.raises(MalformedOperandError) as e:
        merge_one_level(LAMBDA, MonochromePartition((3,), 1), 2)
    assert e.value.report is None


def test_one_level_needs_two_colors():
    with pytest.raises(ConfigurationError):
        merge_one_level(LAMBDA, MU2, 1)
    with pytest.raises(ConfigurationError):
        split_one_level(LAMBDA, 1)


@pytest.mark.parametrize("mus", [[], [MU2]])
def test_fold_rejects_a_non_member_base(mus):
    base = Overpartition.of((1, 1), (2, 1, True))
    with pytest.raises(PreconditionError) as e:
        fold_full(base, mus)
    assert e.value.report.violated == Condition.WELLFORMED

    with pytest.raises(PreconditionError) as e:
        fold_full(Overpartition.of((3, 1, True), (1, 1)), [])
    assert e.value.report.violated == Condition.OVERLINE_SUFFIX


def test_split_rejects_non_member():
    with pytest.raises(PreconditionError) as e:
        split_one_level(Overpartition.of((3, 2), (1, 1)), 2)
    assert e.value.report.violated == Condition.OVERLINE_SUFFIX


def test_checked_mode_names_the_failed_condition():
    with pytest.raises(LemmaViolation) as e:
        step4(Overpartition.of((1, 1), (1, 3)), Staircase(()), checked=True)
    assert e.value.lemma == "smallest-part-after-step4"


def test_staircase_must_fit():
    with pytest.raises(StaircaseTooLargeError):
        step4(Overpartition.of((2, 1)), Staircase((3,)))


def test_inverse_step_two_needs_the_staircase_prefix():
    with pytest.raises(PreconditionError):
        inv_step2(Overpartition.of((3, 1)), MonochromePartition((1,), 2), Staircase((0,)), 2)


# -----------------------------
# Exhaustive roundtrips
# -----------------------------


@lru_cache(maxsize=None)
def members(k, n):
    return tuple(enumerate_family(sbar(k), n))


def pairs(k, total):
    t = top_color(k)
    for a in range(total + 1):
        for lam in members(k - 1, a):
            for b in range(total - a + 1):
                for parts in distinct_partitions(b):
                    yield lam, MonochromePartition(parts, t)


def check_roundtrip(k, total):
    images = {}
    for lam, mu in pairs(k, total):
        lam4, _ = merge_one_level(lam, mu, k, checked=True)
        before = statistics(lam, k - 1)
        after = statistics(lam4, k)
        assert after.weight == lam.weight + mu.weight
        assert after.nonoverlined == before.nonoverlined
        assert after.x == before.x + (len(mu),)
        assert lam4 not in images, f"{lam4} hit by {images.get(lam4)} and {(lam, mu)}"
        images[lam4] = (lam, mu)
        assert split_one_level(lam4, k, checked=True)[:2] == (lam, mu)
    return images


@pytest.mark.parametrize("k", [2, 3])
def test_roundtrip_small(k):
    images = check_roundtrip(k, 8)
    # onto: every member of weight <= 8 is hit
    for n in range(9):
        assert set(op for op in images if op.weight == n) == set(members(k, n))


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_roundtrip_exhaustive(k):
    check_roundtrip(k, 14)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_fold_unfold_exhaustive(k):
    total = 12
    for n in range(total + 1):
        for lam in members(k, n):
            base, mus = unfold_full(lam, k, checked=True)
            assert [mu.color for mu in mus] == [top_color(level) for level in range(2, k + 1)]
            assert fold_full(base, mus, checked=True) == lam


@given(data=st.data(), k=st.integers(min_value=2, max_value=3), n=st.integers(min_value=0, max_value=11))
@settings(max_examples=80, deadline=None)
def test_random_members_split_and_merge_back(data, k, n):
    pool = members(k, n)
    lam4 = data.draw(st.sampled_from(pool))
    lam, mu, _ = split_one_level(lam4, k, checked=True)
    assert check_membership(lam, sbar(k - 1)).member
    assert mu.is_distinct()
    assert merge_one_level(lam, mu, k, checked=True)[0] == lam4
