"""Truncated multivariate q-series with exact integer coefficients.

A MultiSeries is a sparse map from exponent keys (n, m, x1, ..., xk) to ints,
standing for the monomial q^n d^m y1^x1 ... yk^xk. Everything above q^N is
dropped. Products are built one factor at a time, so no intermediate ever
holds a term beyond the truncation.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import ConfigurationError, DilationRangeError, TruncationMismatchError
from .partitions import ExponentKey
from .predicates import Family, FamilyTag

log = logging.getLogger(__name__)


class MultiSeries:
    __slots__ = ("truncation", "markers", "_coeffs")

    def __init__(self, truncation: int, markers: int = 0, coeffs: Optional[Mapping[ExponentKey, int]] = None):
        if truncation < 0:
            raise ValueError(f"truncation must be >= 0, got {truncation}")
        if markers < 0:
            raise ValueError(f"markers must be >= 0, got {markers}")
        self.truncation = truncation
        self.markers = markers
        width = 2 + markers
        clean: Dict[ExponentKey, int] = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != width:
                raise ValueError(f"key {key} should have {width} entries (n, m, x1..x{markers})")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in key {key}")
            if c and key[0] <= truncation:
                clean[key] = clean.get(key, 0) + c
        self._coeffs = {k: c for k, c in clean.items() if c}

    # -- mapping-ish access --

    def __getitem__(self, key: Sequence[int]) -> int:
        return self._coeffs.get(tuple(key), 0)

    def __iter__(self) -> Iterator[ExponentKey]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self) -> List[Tuple[ExponentKey, int]]:
        """Nonzero coefficients, sorted by key."""
        return sorted(self._coeffs.items())

    def as_dict(self) -> Dict[ExponentKey, int]:
        return dict(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.markers == other.markers
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.truncation, self.markers, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"MultiSeries(N={self.truncation}, markers={self.markers}, terms={len(self._coeffs)})"

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        return series_mul(self, other)

    # -- derived series --

    def restrict(self, n_max: int) -> "MultiSeries":
        """Same series truncated at a smaller N."""
        if n_max > self.truncation:
            raise TruncationMismatchError(f"cannot extend truncation {self.truncation} to {n_max}")
        return MultiSeries(n_max, self.markers, self._coeffs)

    def with_m(self, m: int) -> "MultiSeries":
        """Keep only terms with d-exponent m (m=0 is setting d=0)."""
        return MultiSeries(self.truncation, self.markers, {k: c for k, c in self._coeffs.items() if k[1] == m})

    def marginal(self, keep_m: bool = False, keep_x: bool = False) -> "MultiSeries":
        """Set d and/or every y to 1."""
        out: Dict[ExponentKey, int] = defaultdict(int)
        markers = self.markers if keep_x else 0
        for key, c in self._coeffs.items():
            m = key[1] if keep_m else 0
            x = key[2:] if keep_x else ()
            out[(key[0], m) + tuple(x)] += c
        return MultiSeries(self.truncation, markers, out)

    def q_coefficients(self) -> List[int]:
        """Coefficients of q^0..q^N with every marker set to 1."""
        out = [0] * (self.truncation + 1)
        for key, c in self._coeffs.items():
            out[key[0]] += c
        return out


# -----------------------------
# Ring operations
# -----------------------------


def series_one(N: int, markers: int = 0) -> MultiSeries:
    return MultiSeries(N, markers, {(0, 0) + (0,) * markers: 1})


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    if a.truncation != b.truncation:
        raise TruncationMismatchError(f"truncations differ: {a.truncation} vs {b.truncation}")
    if a.markers != b.markers:
        raise TruncationMismatchError(f"marker counts differ: {a.markers} vs {b.markers}")
    N = a.truncation
    out: Dict[ExponentKey, int] = defaultdict(int)
    b_items = list(b._coeffs.items())
    for ka, ca in a._coeffs.items():
        for kb, cb in b_items:
            if ka[0] + kb[0] > N:
                continue
            out[tuple(x + y for x, y in zip(ka, kb))] += ca * cb
    return MultiSeries(N, a.markers, out)


def _step_key(e: int, marker: Optional[int], with_d: bool, markers: int) -> ExponentKey:
    """Exponent key of the monomial (y_marker) (d) q^e."""
    x = [0] * markers
    if marker is not None:
        if not 1 <= marker <= markers:
            raise ConfigurationError(f"marker y{marker} out of range 1..{markers}")
        x[marker - 1] = 1
    return (e, 1 if with_d else 0) + tuple(x)


def _exponents(start: int, step: int, N: int) -> Iterable[int]:
    if start < 1 or step < 1:
        raise ValueError(f"start and step must be >= 1, got start={start}, step={step}")
    return range(start, N + 1, step)


def _times_one_plus(coeffs: Dict[ExponentKey, int], mono: ExponentKey, N: int) -> Dict[ExponentKey, int]:
    out = dict(coeffs)
    for key, c in coeffs.items():
        if key[0] + mono[0] <= N:
            nk = tuple(a + b for a, b in zip(key, mono))
            out[nk] = out.get(nk, 0) + c
    return out


def _times_geometric(coeffs: Dict[ExponentKey, int], mono: ExponentKey, N: int) -> Dict[ExponentKey, int]:
    """Multiply by 1/(1 - mono) = sum of mono^r, r capped by the truncation."""
    out = dict(coeffs)
    e = mono[0]
    for key, c in coeffs.items():
        nk = key
        for _ in range((N - key[0]) // e):
            nk = tuple(a + b for a, b in zip(nk, mono))
            out[nk] = out.get(nk, 0) + c
    return out


def prod_one_plus(marker: Optional[int], start: int, step: int, N: int, markers: int = 0) -> MultiSeries:
    """prod_{j>=0} (1 + y_marker q^(start + j*step)); marker=None drops the y."""
    coeffs = series_one(N, markers).as_dict()
    for e in _exponents(start, step, N):
        coeffs = _times_one_plus(coeffs, _step_key(e, marker, False, markers), N)
    return MultiSeries(N, markers, coeffs)


def prod_inv_one_minus(
    marker: Optional[int],
    include_d: bool,
    start: int,
    step: int,
    N: int,
    markers: int = 0,
) -> MultiSeries:
    """prod_{j>=0} 1/(1 - y_marker d q^(start + j*step)), expanded geometrically."""
    coeffs = series_one(N, markers).as_dict()
    for e in _exponents(start, step, N):
        coeffs = _times_geometric(coeffs, _step_key(e, marker, include_d, markers), N)
    return MultiSeries(N, markers, coeffs)


def dilate(s: MultiSeries, q_power: int, marker_shifts: Sequence[int], truncation: Optional[int] = None) -> MultiSeries:
    """Substitute q -> q^t and y_i -> y_i q^shift_i.

    The result is kept up to `truncation` (default: the input's N). Its
    coefficients are exact only when every source term that can land at or
    below that bound was itself within the source truncation.
    """
    if q_power < 1:
        raise ValueError(f"q_power must be >= 1, got {q_power}")
    if len(marker_shifts) != s.markers:
        raise ConfigurationError(f"expected {s.markers} marker shifts, got {len(marker_shifts)}")
    N = s.truncation if truncation is None else truncation
    out: Dict[ExponentKey, int] = defaultdict(int)
    for key, c in s._coeffs.items():
        n = q_power * key[0] + sum(x * sh for x, sh in zip(key[2:], marker_shifts))
        if n < 0:
            raise DilationRangeError(f"term {key} maps to q^{n}")
        if n <= N:
            out[(n,) + key[1:]] += c
    return MultiSeries(N, s.markers, out)


# -----------------------------
# Named products
# -----------------------------


def distinct_numerator(k: int, N: int) -> MultiSeries:
    """(-y1 q; q) ... (-yk q; q), truncated."""
    acc = series_one(N, k)
    for i in range(1, k + 1):
        acc = acc * prod_one_plus(i, 1, 1, N, k)
    return acc


def colored_partitions(k: int, N: int) -> MultiSeries:
    """1 / ((y1 q; q) ... (yk q; q)): partitions in k colors, y_i counting color i."""
    acc = series_one(N, k)
    for i in range(1, k + 1):
        acc = acc * prod_inv_one_minus(i, False, 1, 1, N, k)
    return acc


def overpartitions(N: int) -> MultiSeries:
    """(-y1 q; q) / (y1 d q; q): overpartitions, d counting non-overlined parts."""
    return prod_one_plus(1, 1, 1, N, 1) * prod_inv_one_minus(1, True, 1, 1, N, 1)


def schur_series(N: int) -> MultiSeries:
    """(-q; q^3)(-q^2; q^3) obtained by dilating (-y1 q)(-y2 q) and setting y=1."""
    return dilate(distinct_numerator(2, N), 3, (-2, -1)).marginal()


def rhs_family(family: Family, N: int) -> MultiSeries:
    """The infinite product the family's generating function should equal."""
    tag, k = family.tag, family.k
    if tag == FamilyTag.SCHUR:
        return schur_series(N)
    numerator = distinct_numerator(k, N)
    if tag == FamilyTag.B:
        return numerator
    if tag == FamilyTag.SBAR or tag == FamilyTag.D1:
        denominators = [1]
    elif tag == FamilyTag.SBAR_J:
        denominators = [family.j]
    elif tag == FamilyTag.D2:
        denominators = [2]
    elif tag in (FamilyTag.TBAR, FamilyTag.DBAR_MATRIX):
        denominators = list(range(1, k + 1))
    else:
        raise ConfigurationError(f"no product known for {family}")
    acc = numerator
    for i in denominators:
        acc = acc * prod_inv_one_minus(i, True, 1, 1, N, k)
    log.debug("rhs for %s at N=%d: %d terms", family, N, len(acc))
    return acc
