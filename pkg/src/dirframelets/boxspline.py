"""Directional box-spline tight framelet filter banks.

Two equivalent constructions are exposed.  The projected form pushes every
high-pass filter of the n-dimensional Haar bank through the direction matrix
and drops the ones that cancel.  The combined form builds one high-pass
filter per unordered pair of mask support points, weighted by
sqrt(fiber1 * fiber2) / 2**n, which merges all projected filters sharing a
tap pair into a single filter.  Both banks have identical high-pass Gram
sums, hence both are tight.

Even-shift reduction merges high-pass filters whose tap pairs differ by a
translation in 2Z**d, which preserves the tight-bank identities.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from itertools import combinations

from .coeffs import RadCoeff
from .filters import Filter, FilterBank, IntVec, vec_sub
from .haar import build_haar_bank, canonical_direction, slope_angle_degrees
from .projection import (
    DirectionMatrix,
    boxspline_mask,
    ensure_valid,
    preimage_vertices,
    project_filter,
)


def build_boxspline_bank(m: DirectionMatrix, mode: str = "combined") -> FilterBank:
    """Tight framelet filter bank for the box spline of a valid matrix.

    mode "projected": one filter per surviving projected Haar high-pass
    filter, C(2**n, 2) minus the exact cancellations.  mode "combined": one
    filter per unordered pair of mask support points, C(m, 2) in total.
    """
    ensure_valid(m)
    mask = boxspline_mask(m)
    if mode == "projected":
        source = build_haar_bank(m.n)
        highpass = []
        for f in source.highpass:
            g = project_filter(m, f)
            if len(g):
                highpass.append(g)
        return FilterBank(mask, highpass)
    if mode == "combined":
        support = mask.offsets()
        fiber = {p: len(preimage_vertices(m, p)) for p in support}
        scale = Fraction(1, 4**m.n)
        highpass = []
        for p, q in combinations(support, 2):
            w = RadCoeff.sqrt_of(scale * fiber[p] * fiber[q])
            highpass.append(Filter(m.d, {p: w, q: -w}))
        return FilterBank(mask, highpass)
    raise ValueError(f"unknown mode {mode!r} (expected 'projected' or 'combined')")


def _edge_key(lo: IntVec, hi: IntVec) -> tuple:
    """Even-shift equivalence class of a lex-ordered tap pair.

    Pairs {p, q} and {p + 2k, q + 2k} share the difference hi - lo and the
    parity of the lex-smaller endpoint, and conversely.
    """
    return vec_sub(hi, lo), tuple(x & 1 for x in lo)


def _two_tap_edge(f: Filter):
    """(lo, hi, weight, sign_at_lo) with lo < hi lexicographically."""
    pos, neg, w = f.two_tap_parts()
    if pos < neg:
        return pos, neg, w, 1
    return neg, pos, w, -1


def _edge_filter(dim: int, lo: IntVec, hi: IntVec, w: RadCoeff, sign_lo: int) -> Filter:
    return Filter(dim, {lo: w.scaled(sign_lo), hi: w.scaled(-sign_lo)})


def reduce_bank(bank: FilterBank, mode: str = "equal_weight_pairs") -> FilterBank:
    """Merge even-shift-equivalent high-pass filters.

    mode "equal_weight_pairs" greedily merges pairs of equal weight within
    each class (lexicographic scan), replacing weights w, w by sqrt(2)*w.
    mode "full_class" merges each whole class into one filter of weight
    sqrt(sum of squared weights), anchored at the lexicographically smallest
    member.  Unmerged filters pass through; merged filters take the input
    position of their earliest member.
    """
    if mode not in ("equal_weight_pairs", "full_class"):
        raise ValueError(f"unknown mode {mode!r}")
    edges = [_two_tap_edge(f) for f in bank.highpass]
    classes: dict[tuple, list[int]] = {}
    for idx, (lo, hi, _, _) in enumerate(edges):
        classes.setdefault(_edge_key(lo, hi), []).append(idx)

    merged: dict[int, Filter] = {}  # earliest member index -> merged filter
    for members in classes.values():
        members = sorted(members, key=lambda i: edges[i][:2])
        if mode == "full_class":
            if len(members) == 1:
                idx = members[0]
                merged[idx] = bank.highpass[idx]
                continue
            total = Fraction(0)
            for i in members:
                total += edges[i][2].radicand
            lo, hi, _, sign_lo = edges[members[0]]
            anchor = min(members)
            merged[anchor] = _edge_filter(
                bank.dim, lo, hi, RadCoeff.sqrt_of(total), sign_lo
            )
        else:
            pending = list(members)
            while pending:
                i = pending.pop(0)
                j = next(
                    (k for k in pending if edges[k][2] == edges[i][2]), None
                )
                if j is None:
                    merged[i] = bank.highpass[i]
                    continue
                pending.remove(j)
                lo, hi, w, sign_lo = edges[i]
                merged[min(i, j)] = _edge_filter(
                    bank.dim, lo, hi, RadCoeff.sqrt_of(2 * w.radicand), sign_lo
                )
    highpass = [merged[i] for i in sorted(merged)]
    return FilterBank(bank.lowpass, highpass)


def edge_rows(bank: FilterBank) -> list[dict]:
    """One row per high-pass filter, for figure regeneration."""
    rows = []
    for f in bank.highpass:
        pos, neg, w = f.two_tap_parts()
        direction = canonical_direction(vec_sub(pos, neg))
        row = {
            "gamma1": " ".join(str(x) for x in pos),
            "gamma2": " ".join(str(x) for x in neg),
            "weight_sq_num": w.radicand.numerator,
            "weight_sq_den": w.radicand.denominator,
            "direction": " ".join(str(x) for x in direction),
            "angle_degrees": (
                format(slope_angle_degrees(direction), ".17g")
                if bank.dim == 2
                else ""
            ),
        }
        rows.append(row)
    return rows


def write_edge_csv(bank: FilterBank, path) -> None:
    fields = [
        "gamma1",
        "gamma2",
        "weight_sq_num",
        "weight_sq_den",
        "direction",
        "angle_degrees",
    ]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in edge_rows(bank):
            writer.writerow(row)
