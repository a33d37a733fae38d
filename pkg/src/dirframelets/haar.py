"""Directional Haar tight framelet filter banks in every dimension.

The bank for dimension d has the cube-vertex averaging low-pass filter and
one two-tap difference high-pass filter per unordered pair of distinct cube
vertices, C(2**d, 2) in total.  The distinct gcd-reduced directions of those
differences number (3**d - 1) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .coeffs import RadCoeff
from .filters import Filter, FilterBank, IntVec, vec_sub


class DimensionTooLarge(ValueError):
    """Requested dimension exceeds the configured cap."""


DEFAULT_MAX_DIM = 6  # C(2**6, 2) = 2016 high-pass filters


def cube_vertices(dim: int) -> list[IntVec]:
    """Vertices of the unit cube {0,1}**dim in lexicographic order."""
    return list(product((0, 1), repeat=dim))


def haar_lowpass(dim: int) -> Filter:
    """Averaging filter: value 2**-dim on every cube vertex, zero elsewhere."""
    w = RadCoeff.from_rational(Fraction(1, 2**dim))
    return Filter(dim, {v: w for v in cube_vertices(dim)})


def build_haar_bank(dim: int, max_dim: int = DEFAULT_MAX_DIM) -> FilterBank:
    """Directional Haar tight framelet filter bank in the given dimension.

    High-pass filters are ordered by their vertex pair (lexicographically);
    each carries the positive tap on the lexicographically smaller vertex.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if dim > max_dim:
        raise DimensionTooLarge(
            f"dimension {dim} exceeds cap {max_dim} "
            f"(the bank would have {math.comb(2**dim, 2)} high-pass filters)"
        )
    w = RadCoeff.from_rational(Fraction(1, 2**dim))
    highpass = [
        Filter(dim, {p: w, q: -w})
        for p, q in combinations(cube_vertices(dim), 2)
    ]
    return FilterBank(haar_lowpass(dim), highpass)


def canonical_direction(v: IntVec) -> IntVec:
    """gcd-reduced representative with positive first nonzero entry."""
    if not any(v):
        raise ValueError("zero vector has no direction")
    g = math.gcd(*(abs(x) for x in v))
    v = tuple(x // g for x in v)
    first = next(x for x in v if x)
    if first < 0:
        v = tuple(-x for x in v)
    return v


def slope_angle_degrees(direction: IntVec) -> float:
    """Slope angle in (-90, 90] for a canonical 2-d direction vector."""
    if len(direction) != 2:
        raise ValueError("slope angles are defined for dimension 2 only")
    x, y = direction
    if x == 0:
        return 90.0
    return math.degrees(math.atan2(y, x))


@dataclass(frozen=True)
class DirectionCensus:
    """Count of two-tap high-pass filters per canonical direction."""

    counts: dict[IntVec, int]

    @property
    def distinct(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def sorted_items(self) -> list[tuple[IntVec, int]]:
        return sorted(self.counts.items())


def direction_census(bank: FilterBank) -> DirectionCensus:
    """Tally the directions of all high-pass filters in a bank.

    Every high-pass filter must be a signed two-tap difference (NotTwoTap
    otherwise); its direction is the gcd-reduced difference of its taps.
    """
    counts: dict[IntVec, int] = {}
    for f in bank.highpass:
        p, q, _ = f.two_tap_parts()
        d = canonical_direction(vec_sub(p, q))
        counts[d] = counts.get(d, 0) + 1
    return DirectionCensus(counts)
