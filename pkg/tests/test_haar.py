import math
from fractions import Fraction
from itertools import product

import pytest

from dirframelets import (
    DimensionTooLarge,
    Filter,
    build_haar_bank,
    canonical_direction,
    direction_census,
    slope_angle_degrees,
)
from dirframelets.coeffs import RadCoeff
from dirframelets.verify import verify_tight_bank

Q4 = RadCoeff.from_rational(Fraction(1, 4))

# the published two-dimensional bank: six two-tap differences on the unit
# square, weight 1/4
PUBLISHED_D2 = [
    Filter(2, {(0, 0): Q4, (1, 1): -Q4}),
    Filter(2, {(1, 0): Q4, (0, 1): -Q4}),
    Filter(2, {(0, 0): Q4, (0, 1): -Q4}),
    Filter(2, {(0, 0): Q4, (1, 0): -Q4}),
    Filter(2, {(1, 0): Q4, (1, 1): -Q4}),
    Filter(2, {(0, 1): Q4, (1, 1): -Q4}),
]


def test_d1_is_standard_haar_pair():
    bank = build_haar_bank(1)
    assert len(bank.highpass) == 1
    half = RadCoeff.from_rational(Fraction(1, 2))
    assert bank.lowpass == Filter(1, {(0,): half, (1,): half})
    assert bank.highpass[0] == Filter(1, {(0,): half, (1,): -half})


def test_d2_matches_published_list_up_to_order_and_sign():
    bank = build_haar_bank(2)
    assert len(bank.highpass) == 6
    remaining = list(bank.highpass)
    for ref in PUBLISHED_D2:
        match = next(
            (f for f in remaining if f == ref or f == -ref), None
        )
        assert match is not None, f"no match for {ref!r}"
        remaining.remove(match)
    assert not remaining


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_filter_and_direction_counts(d):
    bank = build_haar_bank(d)
    assert len(bank.highpass) == math.comb(2**d, 2)
    census = direction_census(bank)
    assert census.distinct == (3**d - 1) // 2
    assert census.total == len(bank.highpass)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_each_vertex_in_expected_number_of_filters(d):
    bank = build_haar_bank(d)
    for vertex in product((0, 1), repeat=d):
        hits = sum(1 for f in bank.highpass if vertex in f.taps)
        assert hits == 2**d - 1


@pytest.mark.parametrize("d", [1, 2, 3])
def test_vertex_energy_identity(d):
    # sum of squared coefficients at any fixed vertex equals 2**-d
    bank = build_haar_bank(d)
    for vertex in product((0, 1), repeat=d):
        total = sum(
            (f.coeff(vertex) * f.coeff(vertex)).as_fraction()
            for f in bank.filters()
        )
        assert total == Fraction(1, 2**d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_banks_verify_exactly(d, haar_banks):
    assert verify_tight_bank(haar_banks[d]).ok


def test_d5_bank_verifies_exactly():
    assert verify_tight_bank(build_haar_bank(5)).ok


def test_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        build_haar_bank(7)
    with pytest.raises(ValueError):
        build_haar_bank(0)
    assert len(build_haar_bank(7, max_dim=7).highpass) == math.comb(128, 2)


def test_canonical_direction():
    assert canonical_direction((2, 0)) == (1, 0)
    assert canonical_direction((-1, 1)) == (1, -1)
    assert canonical_direction((0, -3)) == (0, 1)
    assert canonical_direction((-2, -4)) == (1, 2)
    with pytest.raises(ValueError):
        canonical_direction((0, 0))


def test_slope_angles():
    assert slope_angle_degrees((1, 0)) == 0.0
    assert slope_angle_degrees((0, 1)) == 90.0
    assert math.isclose(slope_angle_degrees((1, 1)), 45.0)
    assert math.isclose(slope_angle_degrees((2, 1)), math.degrees(math.atan(0.5)))
    assert math.isclose(slope_angle_degrees((1, -2)), -math.degrees(math.atan(2.0)))


def test_census_rejects_non_two_tap():
    from dirframelets import FilterBank, NotTwoTap

    bank = build_haar_bank(2)
    bad = FilterBank(bank.lowpass, [bank.lowpass])
    with pytest.raises(NotTwoTap):
        direction_census(bad)
