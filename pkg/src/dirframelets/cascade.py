"""Dyadic-grid sampling of refinable functions and framelets.

The refinable function of a mask with tap sum 1 is sampled by running the
subdivision scheme from a Dirac seed: each iteration doubles the grid and
applies 2**d times the upsampled mask.  Framelets are then single two-scale
combinations of the refined samples.  The box-spline Fourier product is kept
as an independent cross-check oracle for masks that come from direction
matrices.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass

import numpy as np

from .coeffs import RadCoeff
from .filters import Filter, FilterBank, IntVec
from .projection import DirectionMatrix

MAX_CASCADE_LEVELS = 12  # grid size grows as 2**(levels * dim)


class MaskNotNormalized(ValueError):
    """Cascade requires the mask taps to sum to one exactly."""


class GridMismatch(ValueError):
    """Supplied samples are on the wrong grid for the requested output."""


@dataclass
class SampledGrid:
    """Values on (2**-level Z)**dim, stored over a finite index window.

    values[idx] is the sample at grid index origin + idx, i.e. at the point
    (origin + idx) * 2**-level.  box is the support box of the sampled
    function in real coordinates (integers).
    """

    dim: int
    level: int
    origin: IntVec
    values: np.ndarray
    box: tuple[IntVec, IntVec]

    @property
    def spacing(self) -> float:
        return 2.0**-self.level

    def value_at(self, index: IntVec) -> float:
        """Sample at a global grid index; zero outside the stored window."""
        local = tuple(i - o for i, o in zip(index, self.origin))
        if any(i < 0 or i >= s for i, s in zip(local, self.values.shape)):
            return 0.0
        return float(self.values[local])

    def points(self):
        """Yield (coordinates, value) in row-major index order."""
        for idx in np.ndindex(self.values.shape):
            coords = tuple(
                (o + i) * self.spacing for o, i in zip(self.origin, idx)
            )
            yield coords, float(self.values[idx])


def _support_box(f: Filter) -> tuple[IntVec, IntVec]:
    offsets = f.offsets()
    lo = tuple(min(o[i] for o in offsets) for i in range(f.dim))
    hi = tuple(max(o[i] for o in offsets) for i in range(f.dim))
    return lo, hi


def cascade_phi(mask: Filter, levels: int) -> SampledGrid:
    """Subdivision samples of the refinable function of ``mask``.

    Starts from a Dirac seed on the integers and refines ``levels`` times;
    the result approximates the refinable function on the 2**-levels grid,
    over the support box spanned by the mask (per-axis min/max of taps).
    """
    if levels < 0:
        raise ValueError("levels must be >= 0")
    if levels > MAX_CASCADE_LEVELS:
        raise ValueError(f"levels capped at {MAX_CASCADE_LEVELS}")
    if mask.coeff_sum() != RadCoeff.from_rational(1):
        raise MaskNotNormalized("mask taps must sum to 1")
    d = mask.dim
    lo, hi = _support_box(mask)
    taps = [(o, float(mask.taps[o])) for o in mask.offsets()]
    gain = float(2**d)

    values = np.ones((1,) * d, dtype=np.float64)  # Dirac seed, box {0}
    for j in range(levels):
        size = tuple(((1 << (j + 1)) - 1) * (h - l) + 1 for l, h in zip(lo, hi))
        out = np.zeros(size, dtype=np.float64)
        for offset, w in taps:
            window = tuple(
                slice(o - l, o - l + 2 * s, 2)
                for o, l, s in zip(offset, lo, values.shape)
            )
            out[window] += (gain * w) * values
        values = out

    # embed the iterate (box (2**J - 1)*[lo, hi]) into the support box
    scale = 1 << levels
    iter_lo = tuple((scale - 1) * l for l in lo)
    out_lo = tuple(min(scale * l, il) for l, il in zip(lo, iter_lo))
    out_hi = tuple(
        max(scale * h, (scale - 1) * h) for h in hi
    )
    full = np.zeros(
        tuple(h - l + 1 for l, h in zip(out_lo, out_hi)), dtype=np.float64
    )
    start = tuple(il - ol for il, ol in zip(iter_lo, out_lo))
    full[tuple(slice(s, s + n) for s, n in zip(start, values.shape))] = values
    return SampledGrid(d, levels, out_lo, full, (lo, hi))


def sample_psi(
    bank: FilterBank, phi: SampledGrid, levels: int
) -> list[SampledGrid]:
    """Sample every framelet of the bank on the 2**-levels grid.

    ``phi`` must come from cascade_phi(bank.lowpass, levels + 1): the
    two-scale relation psi(x) = 2**d * sum_k b(k) phi(2x - k) then lands on
    stored sample points.
    """
    if phi.dim != bank.dim:
        raise GridMismatch("phi samples have the wrong dimension")
    if phi.level != levels + 1:
        raise GridMismatch(
            f"phi sampled at level {phi.level}, need level {levels + 1}"
        )
    d = bank.dim
    gain = float(2**d)
    step = 1 << (levels + 1)  # index shift of one integer tap on the phi grid
    results = []
    for f in bank.highpass:
        b_lo, b_hi = _support_box(f)
        box_lo = tuple(
            math.floor((pl + bl) / 2) for pl, bl in zip(phi.box[0], b_lo)
        )
        box_hi = tuple(
            math.ceil((ph + bh) / 2) for ph, bh in zip(phi.box[1], b_hi)
        )
        g_lo = tuple(l << levels for l in box_lo)
        g_hi = tuple(h << levels for h in box_hi)
        out = np.zeros(
            tuple(h - l + 1 for l, h in zip(g_lo, g_hi)), dtype=np.float64
        )
        for offset, coeff in f.taps.items():
            # source index of phi for output grid index g: 4g + shift
            shift = tuple(
                -step * o - po for o, po in zip(offset, phi.origin)
            )
            windows = []
            ok = True
            for i in range(d):
                # valid g satisfy 0 <= 4g + shift <= len(phi axis) - 1
                a = max(g_lo[i], -(shift[i] // 4))
                b = min(g_hi[i], (phi.values.shape[i] - 1 - shift[i]) // 4)
                if a > b:
                    ok = False
                    break
                windows.append((a, b))
            if not ok:
                continue
            out_window = tuple(
                slice(a - l, b - l + 1) for (a, b), l in zip(windows, g_lo)
            )
            phi_window = tuple(
                slice(4 * a + s, 4 * b + s + 1, 4)
                for (a, b), s in zip(windows, shift)
            )
            out[out_window] += (gain * float(coeff)) * phi.values[phi_window]
        results.append(
            SampledGrid(d, levels, g_lo, out, (box_lo, box_hi))
        )
    return results


def boxspline_fourier_eval(m: DirectionMatrix, xi) -> complex:
    """Fourier transform of the box spline of m: product over columns of
    (1 - exp(-i k.xi)) / (i k.xi), with removable singularities set to 1."""
    if len(xi) != m.d:
        raise ValueError("frequency vector has wrong dimension")
    result = complex(1.0)
    for j in range(m.n):
        t = sum(c * x for c, x in zip(m.column(j), xi))
        if t == 0:
            continue
        result *= (1 - cmath.exp(-1j * t)) / (1j * t)
    return result


def write_grid_csv(grid: SampledGrid, path) -> None:
    """Columns x1..xd,value over the stored window, row-major order."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{i + 1}" for i in range(grid.dim)] + ["value"])
        for coords, value in grid.points():
            writer.writerow(
                [format(c, ".17g") for c in coords] + [format(value, ".17g")]
            )
