import csv
import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from dirframelets import (
    DirectionMatrix,
    FilterBank,
    InvalidDirectionMatrix,
    build_boxspline_bank,
    build_haar_bank,
    direction_census,
    reduce_bank,
    validate_direction_matrix,
)
from dirframelets.boxspline import edge_rows, write_edge_csv
from dirframelets.coeffs import RadCoeff
from dirframelets.filters import vec_sub
from dirframelets.verify import bank_gram, verify_tight_bank

SQRT2_8 = RadCoeff.sqrt_of(Fraction(1, 32))
SQRT2_16 = RadCoeff.sqrt_of(Fraction(1, 128))
Q8 = RadCoeff.from_rational(Fraction(1, 8))
Q16 = RadCoeff.from_rational(Fraction(1, 16))


def weight_multiset(bank):
    return Counter(f.two_tap_parts()[2] for f in bank.highpass)


def brute_force_shift_classes(bank):
    """Oracle: partition tap-pair edges into even-shift equivalence classes."""
    edges = []
    for f in bank.highpass:
        pos, neg, w = f.two_tap_parts()
        edges.append(tuple(sorted((pos, neg))))
    classes = []
    for e in edges:
        placed = False
        for cls in classes:
            r = cls[0]
            shift = vec_sub(e[0], r[0])
            if all(x % 2 == 0 for x in shift) and vec_sub(e[1], r[1]) == shift:
                cls.append(e)
                placed = True
                break
        if not placed:
            classes.append([e])
    return classes


def test_ex1_combined_counts_and_weights(ex1_combined):
    assert len(ex1_combined.highpass) == 21  # C(7, 2)
    assert weight_multiset(ex1_combined) == Counter({SQRT2_8: 6, Q8: 15})
    # the six sqrt(2)/8 filters are exactly the edges through the origin
    for f in ex1_combined.highpass:
        pos, neg, w = f.two_tap_parts()
        if w == SQRT2_8:
            assert (0, 0) in (pos, neg)
        else:
            assert (0, 0) not in (pos, neg)


def test_ex1_census(ex1_combined):
    census = direction_census(ex1_combined)
    assert census.distinct == 6
    assert census.counts == {
        (1, 0): 5,
        (0, 1): 5,
        (1, 1): 5,
        (2, 1): 2,
        (1, 2): 2,
        (1, -1): 2,
    }


def test_ex2_combined_groups(ex2_combined):
    assert len(ex2_combined.highpass) == 36  # C(9, 2)
    corners = {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    sides = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    groups = Counter()
    for f in ex2_combined.highpass:
        pos, neg, w = f.two_tap_parts()
        ends = {pos, neg}
        if (0, 0) in ends:
            other = next(iter(ends - {(0, 0)}))
            kind = "origin-corner" if other in corners else "origin-side"
        elif ends <= corners:
            kind = "corner-corner"
        elif ends <= sides:
            kind = "side-side"
        else:
            kind = "corner-side"
        groups[kind] += 1
        expected = {
            "origin-corner": Q8,
            "origin-side": SQRT2_8,
            "corner-side": SQRT2_16,
            "corner-corner": Q16,
            "side-side": Q8,
        }[kind]
        assert w == expected
    assert groups == Counter(
        {
            "origin-corner": 4,
            "origin-side": 4,
            "corner-side": 16,
            "corner-corner": 6,
            "side-side": 6,
        }
    )


def test_ex2_census(ex2_combined):
    census = direction_census(ex2_combined)
    assert census.distinct == 8
    assert census.counts == {
        (1, 0): 9,
        (0, 1): 9,
        (1, 1): 5,
        (1, -1): 5,
        (2, 1): 2,
        (1, 2): 2,
        (2, -1): 2,
        (1, -2): 2,
    }


def test_identity_matrix_reproduces_haar():
    for d in (1, 2, 3):
        eye = DirectionMatrix.identity(d)
        combined = build_boxspline_bank(eye, "combined")
        haar = build_haar_bank(d)
        assert combined.lowpass == haar.lowpass
        remaining = list(haar.highpass)
        for f in combined.highpass:
            match = next((g for g in remaining if g == f or g == -f), None)
            assert match is not None
            remaining.remove(match)
        assert not remaining


def test_projected_mode_drops_cancellations(ex1_matrix, ex2_matrix):
    # dropped filters = vertex pairs inside one fiber
    for m in (ex1_matrix, ex2_matrix):
        bank = build_boxspline_bank(m, "projected")
        from dirframelets import boxspline_mask, preimage_vertices

        mask = boxspline_mask(m)
        dead = sum(
            math.comb(len(preimage_vertices(m, p)), 2) for p in mask.offsets()
        )
        assert len(bank.highpass) == math.comb(2**m.n, 2) - dead
        for f in bank.highpass:
            f.two_tap_parts()  # every survivor is a signed two-tap difference


def test_invalid_matrix_rejected():
    with pytest.raises(InvalidDirectionMatrix):
        build_boxspline_bank(DirectionMatrix.from_rows([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        build_boxspline_bank(DirectionMatrix.identity(2), mode="bogus")


def test_ex2_reduction_counts(ex2_combined):
    pairs = reduce_bank(ex2_combined, "equal_weight_pairs")
    assert len(pairs.highpass) == 30
    full = reduce_bank(ex2_combined, "full_class")
    # golden value from the brute-force class oracle below
    classes = brute_force_shift_classes(ex2_combined)
    assert len(full.highpass) == len(classes) == 30
    assert verify_tight_bank(pairs).ok
    assert verify_tight_bank(full).ok


def test_ex1_reduction_is_identity(ex1_combined):
    # no two Example-1 edges are even-shift equivalent
    assert all(
        len(c) == 1 for c in brute_force_shift_classes(ex1_combined)
    )
    assert reduce_bank(ex1_combined, "equal_weight_pairs") == ex1_combined
    assert reduce_bank(ex1_combined, "full_class") == ex1_combined


def test_combining_identical_filters():
    # {c1*b, c2*b} merges into sqrt(c1^2 + c2^2) * b
    d2 = build_haar_bank(2)
    b = d2.highpass[0]
    bank = FilterBank(d2.lowpass, [b, b, *d2.highpass[1:]])
    merged = reduce_bank(bank, "full_class")
    assert len(merged.highpass) == 6
    pos, neg, w = merged.highpass[0].two_tap_parts()
    assert w == RadCoeff.sqrt_of(2 * Fraction(1, 16))
    assert bank_gram(bank, highpass_only=True) == bank_gram(
        merged, highpass_only=True
    )


def test_gram_equivalence_examples(ex1_matrix, ex2_matrix):
    for m in (ex1_matrix, ex2_matrix):
        projected = build_boxspline_bank(m, "projected")
        combined = build_boxspline_bank(m, "combined")
        g = bank_gram(projected, highpass_only=True)
        assert g == bank_gram(combined, highpass_only=True)
        assert g == bank_gram(
            reduce_bank(combined, "equal_weight_pairs"), highpass_only=True
        )
        assert g == bank_gram(
            reduce_bank(combined, "full_class"), highpass_only=True
        )


def random_valid_matrices(count, seed=4057):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        d = rng.randrange(1, 4)
        n = rng.randrange(d, 6)
        m = DirectionMatrix.from_rows(
            [[rng.randrange(-2, 3) for _ in range(n)] for _ in range(d)]
        )
        if validate_direction_matrix(m).ok:
            found.append(m)
    return found


def test_gram_equivalence_random_matrices():
    for m in random_valid_matrices(20):
        projected = build_boxspline_bank(m, "projected")
        combined = build_boxspline_bank(m, "combined")
        g = bank_gram(projected, highpass_only=True)
        assert g == bank_gram(combined, highpass_only=True)
        for mode in ("equal_weight_pairs", "full_class"):
            reduced = reduce_bank(combined, mode)
            assert g == bank_gram(reduced, highpass_only=True)
            assert verify_tight_bank(reduced).ok


def test_combined_count_formula():
    for m in random_valid_matrices(5, seed=99):
        bank = build_boxspline_bank(m, "combined")
        assert len(bank.highpass) == math.comb(len(bank.lowpass), 2)


def test_edge_csv(tmp_path, ex1_combined):
    rows = edge_rows(ex1_combined)
    assert len(rows) == 21
    origin_rows = [r for r in rows if "0 0" in (r["gamma1"], r["gamma2"])]
    assert len(origin_rows) == 6
    assert all(
        (r["weight_sq_num"], r["weight_sq_den"]) == (1, 32) for r in origin_rows
    )
    path = tmp_path / "edges.csv"
    write_edge_csv(ex1_combined, path)
    with open(path, newline="") as fh:
        parsed = list(csv.DictReader(fh))
    assert len(parsed) == 21
    angles = {r["angle_degrees"] for r in parsed}
    assert "45" in angles and "90" in angles
