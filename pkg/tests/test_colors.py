import pytest
from hypothesis import given
from hypothesis import strategies as st

from overlab.colors import (
    check_color,
    delta,
    delta_star,
    omega,
    primaries,
    redistribute_forward,
    redistribute_inverse,
    top_color,
    v_min,
    z_max,
)
from overlab.errors import (
    InsufficientBitsError,
    InvalidColorError,
    InvalidRedistributionError,
    UndefinedDeltaStarError,
)


def test_omega():
    assert omega(3) == 2
    assert omega(1) == 1
    assert omega(5) == 2
    assert omega(7) == 3


def test_smallest_and_largest_primary():
    assert (v_min(3), z_max(3)) == (1, 2)
    assert (v_min(4), z_max(4)) == (4, 4)
    assert (v_min(5), z_max(5)) == (1, 4)


def test_delta():
    assert delta(3, 4) == 1
    assert delta(5, 2) == 0
    assert delta(1, 1) == 0
    assert delta(1, 2) == 1


def test_delta_star():
    assert delta_star(5, 2, 3) == 1
    assert delta_star(3, 2, 3) == 0
    with pytest.raises(UndefinedDeltaStarError):
        delta_star(4, 1, 3)


@pytest.mark.parametrize("fn", [omega, v_min, z_max, primaries])
def test_nonpositive_color_rejected(fn):
    with pytest.raises(InvalidColorError):
        fn(0)
    with pytest.raises(InvalidColorError):
        fn(-3)


def test_check_color_range():
    check_color(7, 3)
    with pytest.raises(InvalidColorError):
        check_color(8, 3)
    with pytest.raises(InvalidColorError):
        top_color(0)


def test_primaries():
    assert primaries(13) == (1, 4, 8)
    assert primaries(4) == (4,)


def test_redistribute_forward():
    assert redistribute_forward(3, 1, 3) == (5, 2)
    assert redistribute_forward(7, 2, 4) == (11, 4)
    with pytest.raises(InsufficientBitsError):
        redistribute_forward(1, 1, 3)


def test_redistribute_inverse():
    assert redistribute_inverse(5, 2, 3) == (3, 4)
    assert redistribute_inverse(*redistribute_forward(3, 1, 3), 3) == (3, 4)
    assert redistribute_inverse(9, 6, 4) == (7, 8)


def test_redistribute_inverse_preconditions():
    with pytest.raises(InvalidRedistributionError):
        redistribute_inverse(4, 1, 3)  # left is exactly the top color
    with pytest.raises(InvalidRedistributionError):
        redistribute_inverse(5, 4, 3)
    with pytest.raises(InvalidRedistributionError):
        redistribute_inverse(5, 1, 3)  # shares color 1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_forward_then_inverse_exhaustive(k):
    t = top_color(k)
    for c in range(1, t):
        for j in range(1, omega(c)):
            left, right = redistribute_forward(c, j, k)
            assert left + right == c + t
            assert right != t
            assert redistribute_inverse(left, right, k) == (c, t)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_inverse_then_forward_exhaustive(k):
    t = top_color(k)
    for left in range(t + 1, 1 << k):
        rest = left - t
        for right in range(1, 1 << k):
            if right == t or rest & right or not delta(rest, right):
                continue
            c, top = redistribute_inverse(left, right, k)
            assert top == t
            assert redistribute_forward(c, omega(rest), k) == (left, right)


@given(c=st.integers(min_value=1, max_value=2**12 - 1))
def test_primary_bounds(c):
    assert 1 <= v_min(c) <= z_max(c) <= c
    assert omega(c) <= c.bit_length()
    assert sum(primaries(c)) == c


@given(a=st.integers(min_value=1, max_value=255), b=st.integers(min_value=1, max_value=255))
def test_delta_one_way(a, b):
    if delta(a, b):
        assert delta(b, a) == 0


@given(data=st.data(), k=st.integers(min_value=3, max_value=8))
def test_redistribution_involution(data, k):
    t = top_color(k)
    c = data.draw(st.integers(min_value=1, max_value=t - 1).filter(lambda x: omega(x) >= 2))
    j = data.draw(st.integers(min_value=1, max_value=omega(c) - 1))
    left, right = redistribute_forward(c, j, k)
    # bits are conserved across the pair plus the top color
    assert sorted(primaries(left) + primaries(right)) == sorted(primaries(c) + (t,))
    assert redistribute_inverse(left, right, k) == (c, t)
