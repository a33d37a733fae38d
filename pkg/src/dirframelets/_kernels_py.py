"""Pure numpy fallback for the periodized transform kernels.

Same contract as the compiled extension: correlate-and-decimate for one
filter (analysis) and upsample-and-accumulate (synthesis), both on the torus
Z_N1 x ... x Z_Nd with all axes even.  Tap order fixes the summation order,
so results are deterministic and identical across backends up to float
associativity (the compiled kernel uses the same order).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def correlate_decimate(
    data: np.ndarray, offsets: np.ndarray, weights: np.ndarray, scale: float
) -> np.ndarray:
    """out(n) = scale * sum_t w[t] * data((2n + offsets[t]) mod dims)."""
    d = data.ndim
    axes = tuple(range(d))
    decimate = (slice(None, None, 2),) * d
    out = np.zeros(tuple(nn // 2 for nn in data.shape), dtype=np.float64)
    for off, w in zip(offsets, weights):
        rolled = np.roll(data, shift=tuple(-int(o) for o in off), axis=axes)
        out += w * rolled[decimate]
    out *= scale
    return out


def upsample_accumulate(
    coeffs: np.ndarray,
    offsets: np.ndarray,
    weights: np.ndarray,
    scale: float,
    out: np.ndarray,
) -> None:
    """out((2n + offsets[t]) mod dims) += scale * w[t] * coeffs(n), in place."""
    d = out.ndim
    axes = tuple(range(d))
    upsampled = np.zeros_like(out)
    upsampled[(slice(None, None, 2),) * d] = coeffs
    for off, w in zip(offsets, weights):
        out += (scale * w) * np.roll(
            upsampled, shift=tuple(int(o) for o in off), axis=axes
        )
