"""Color arithmetic.

A color is a positive integer read as a set of primary colors 1, 2, 4, ...,
2^(k-1): bit b set means primary color 2^b is present. Everything here is
plain bit arithmetic on ints.
"""

from __future__ import annotations

from typing import Tuple

from .errors import (
    InsufficientBitsError,
    InvalidColorError,
    InvalidRedistributionError,
    UndefinedDeltaStarError,
)


def top_color(k: int) -> int:
    """The primary color 2^(k-1) added at level k."""
    if k < 1:
        raise InvalidColorError(f"level k must be >= 1, got {k}")
    return 1 << (k - 1)


def _require(c: int) -> None:
    if c <= 0:
        raise InvalidColorError(f"color must be >= 1, got {c}")


def check_color(c: int, k: int) -> None:
    """Raise unless 1 <= c < 2^k."""
    _require(c)
    if c >= 1 << k:
        raise InvalidColorError(f"color {c} out of range for k={k} (max {(1 << k) - 1})")


def omega(c: int) -> int:
    """Number of primary colors in c."""
    _require(c)
    return bin(c).count("1")


def v_min(c: int) -> int:
    """Smallest primary color in c."""
    _require(c)
    return c & -c


def z_max(c: int) -> int:
    """Largest primary color in c."""
    _require(c)
    return 1 << (c.bit_length() - 1)


def delta(c1: int, c2: int) -> int:
    return 1 if z_max(c1) < v_min(c2) else 0


def delta_star(c1: int, c2: int, k: int) -> int:
    """delta with the top primary color discarded from c1; undefined at c1 == 2^(k-1)."""
    t = top_color(k)
    _require(c2)
    if c1 == t:
        raise UndefinedDeltaStarError(f"delta* is undefined for c1 = {t} at k={k}")
    if c1 < t:
        return delta(c1, c2)
    return delta(c1 - t, c2)


def primaries(c: int) -> Tuple[int, ...]:
    """Primary colors of c, smallest first."""
    _require(c)
    out = []
    while c:
        low = c & -c
        out.append(low)
        c ^= low
    return tuple(out)


def redistribute_forward(c_prev: int, j: int, k: int) -> Tuple[int, int]:
    """Move the j lowest primary colors of c_prev, plus 2^(k-1), onto the left part.

    Returns (new left color, new right color). The right part was inserted in
    color 2^(k-1) and keeps what is left of c_prev.
    """
    _require(c_prev)
    t = top_color(k)
    if c_prev >= 1 << k:
        raise InvalidColorError(f"color {c_prev} out of range for k={k}")
    if j < 1:
        raise InsufficientBitsError(f"redistribution needs j >= 1, got {j}")
    bits = primaries(c_prev)
    if len(bits) <= j:
        raise InsufficientBitsError(
            f"color {c_prev} has {len(bits)} primary colors, cannot give away {j} and keep one"
        )
    moved = sum(bits[:j])
    return moved + t, c_prev - moved


def redistribute_inverse(c_prev: int, c_i: int, k: int) -> Tuple[int, int]:
    """Undo redistribute_forward: (c_prev + c_i - 2^(k-1), 2^(k-1))."""
    _require(c_prev)
    _require(c_i)
    t = top_color(k)
    if c_prev <= t:
        raise InvalidRedistributionError(f"left color {c_prev} must contain {t} and more")
    if c_i == t:
        raise InvalidRedistributionError(f"right color is already {t}")
    rest = c_prev - t
    if rest & c_i:
        raise InvalidRedistributionError(
            f"colors {c_prev} and {c_i} share primary colors; cannot recombine"
        )
    return rest + c_i, t
