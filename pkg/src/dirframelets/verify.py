"""Exact verification of the tight framelet filter bank identities.

The spatial identities require, for every parity coset gamma in {0,1}**d and
every integer shift n, that the polyphase autocorrelation of the whole bank
equal 2**-d at n = 0 and vanish otherwise.  Compact supports make all but
finitely many (gamma, n) cells identically zero, so the check below walks
exactly the cells that any pair of taps can touch and is a proof, not a
sample.  A floating-point frequency-domain check of the equivalent modulation
identities is provided as an advisory cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .filters import FilterBank, IntVec, vec_sub

GridCell = tuple[IntVec, IntVec]  # (parity coset gamma, shift n)


def bank_gram(
    bank: FilterBank,
    highpass_only: bool = False,
    drop_zeros: bool = True,
) -> dict[GridCell, Fraction]:
    """Exact polyphase autocorrelation sums, indexed by (gamma, n).

    Cell (gamma, n) holds sum over filters f and shifts k of
    f(gamma + 2k) * f(n + gamma + 2k).  Cells no tap pair touches are
    identically zero and never appear; with drop_zeros, touched cells whose
    sums cancel are removed too, which makes Gram dicts of equivalent banks
    directly comparable.
    """
    cells: dict[GridCell, Fraction] = {}
    filters = bank.highpass if highpass_only else bank.filters()
    for f in filters:
        taps = [(o, f.taps[o]) for o in f.offsets()]
        for p, cp in taps:
            gamma = tuple(x & 1 for x in p)
            for q, cq in taps:
                key = (gamma, vec_sub(q, p))
                value = (cp * cq).as_fraction()
                cells[key] = cells.get(key, Fraction(0)) + value
    if drop_zeros:
        return {k: v for k, v in cells.items() if v}
    return cells


def gram_cell(bank: FilterBank, gamma: IntVec, n: IntVec) -> Fraction:
    """Direct evaluation of one (gamma, n) cell, for range cross-checks."""
    total = Fraction(0)
    for f in bank.filters():
        for p in f.offsets():
            if tuple(x & 1 for x in p) != tuple(gamma):
                continue
            q = tuple(a + b for a, b in zip(n, p))
            cq = f.coeff(q)
            if cq:
                total += (f.taps[p] * cq).as_fraction()
    return total


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the exact tight-bank check."""

    ok: bool
    dim: int
    cells_checked: int
    defects: dict[GridCell, Fraction]  # nonzero (actual - expected) only

    @property
    def witness(self) -> tuple[IntVec, IntVec, Fraction] | None:
        """First failing cell in lexicographic (gamma, n) order."""
        if self.ok:
            return None
        gamma, n = min(self.defects)
        return gamma, n, self.defects[(gamma, n)]

    def to_obj(self) -> dict:
        obj = {
            "pass": self.ok,
            "dim": self.dim,
            "cells_checked": self.cells_checked,
            "defects": [
                {
                    "gamma": list(gamma),
                    "n": list(n),
                    "defect_num": str(d.numerator),
                    "defect_den": str(d.denominator),
                }
                for (gamma, n), d in sorted(self.defects.items())
            ],
        }
        if self.witness is not None:
            gamma, n, d = self.witness
            obj["witness"] = {
                "gamma": list(gamma),
                "n": list(n),
                "defect": f"{d.numerator}/{d.denominator}",
            }
        return obj


def verify_tight_bank(bank: FilterBank) -> VerifyReport:
    """Exact check of the spatial tight framelet filter bank identities."""
    d = bank.dim
    target = Fraction(1, 2**d)
    zero_shift = (0,) * d
    cells = bank_gram(bank, drop_zeros=False)
    # every coset must carry the n = 0 identity even if no tap touches it
    for gamma in product((0, 1), repeat=d):
        cells.setdefault((gamma, zero_shift), Fraction(0))
    defects: dict[GridCell, Fraction] = {}
    for (gamma, n), value in cells.items():
        expected = target if n == zero_shift else Fraction(0)
        if value != expected:
            defects[(gamma, n)] = value - expected
    return VerifyReport(not defects, d, len(cells), defects)


def verify_frequency(bank: FilterBank, grid_points_per_axis: int) -> float:
    """Max absolute defect of the modulation identities on a uniform grid.

    Samples xi over [0, 2*pi)**d and every half-period modulation offset;
    floating point, advisory only (the exact spatial check is the verdict
    of record).
    """
    if grid_points_per_axis < 2:
        raise ValueError("grid must have at least 2 points per axis")
    d = bank.dim
    axis = 2.0 * np.pi * np.arange(grid_points_per_axis) / grid_points_per_axis
    grids = np.meshgrid(*([axis] * d), indexing="ij")
    points = np.stack([g.ravel() for g in grids], axis=1)  # (M, d)

    def eval_filter(f, pts):
        total = np.zeros(len(pts), dtype=complex)
        for offset, coeff in f.taps.items():
            total += float(coeff) * np.exp(-1j * (pts @ np.array(offset)))
        return total

    worst = 0.0
    base = [eval_filter(f, points) for f in bank.filters()]
    for omega in product((0, 1), repeat=d):
        shifted_pts = points + np.pi * np.array(omega)
        expected = 1.0 if not any(omega) else 0.0
        total = np.zeros(len(points), dtype=complex)
        for f, fbase in zip(bank.filters(), base):
            total += fbase * np.conj(eval_filter(f, shifted_pts))
        worst = max(worst, float(np.max(np.abs(total - expected))))
    return worst
