"""Fast framelet analysis/synthesis on d-dimensional periodic data.

Analysis correlates the data with every bank filter and decimates by two per
axis, scaled by 2**(d/2); synthesis is the adjoint with the same scale.  For
a verified tight bank this is a Parseval isometry with perfect
reconstruction.  Boundary handling is periodization, so every axis must stay
even down to the coarsest level.

The per-filter inner loops run on a compiled extension when it is built,
with a pure numpy fallback selected at import time; `backend=` forces one
("compiled" or "python").  An exact-rational mode mirrors the float path
with RadCoeff arithmetic so small identities can be asserted with zero
tolerance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffs import RadCoeff
from .filters import Filter, FilterBank

try:
    from . import _kernels as _default_kernels

    HAVE_COMPILED_KERNELS = True
except ImportError:  # extension not built; numpy fallback
    from . import _kernels_py as _default_kernels

    HAVE_COMPILED_KERNELS = False


class BadDims(ValueError):
    """Input axes are odd or too small for the requested level count."""


class ShapeMismatch(ValueError):
    """Pyramid or tensor shape inconsistent with the bank or dims."""


def available_backends() -> list[str]:
    return ["compiled", "python"] if HAVE_COMPILED_KERNELS else ["python"]


def _kernels_for(backend: str | None):
    if backend is None or backend == "auto":
        return _default_kernels
    if backend == "python":
        from . import _kernels_py

        return _kernels_py
    if backend == "compiled":
        if not HAVE_COMPILED_KERNELS:
            raise ValueError("compiled kernels are not available")
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {backend!r}")


def _filter_arrays(f: Filter) -> tuple[np.ndarray, np.ndarray]:
    """Offsets and float weights in fixed (lexicographic) tap order."""
    offsets = f.offsets()
    return (
        np.array(offsets, dtype=np.int64).reshape(len(offsets), f.dim),
        np.array([float(f.taps[o]) for o in offsets], dtype=np.float64),
    )


@dataclass
class CoefficientPyramid:
    """Per-level detail tensors plus the final low-pass tensor.

    details[j][i] holds the level-(j+1) output of high-pass filter i, with
    axes dims/2**(j+1); approx is the coarsest low-pass tensor.
    """

    dims: tuple[int, ...]
    details: list[list[np.ndarray]]
    approx: np.ndarray

    @property
    def levels(self) -> int:
        return len(self.details)


def _check_analyze_args(bank: FilterBank, data: np.ndarray, levels: int) -> None:
    if data.ndim != bank.dim:
        raise ShapeMismatch(
            f"data has {data.ndim} axes but the bank is {bank.dim}-dimensional"
        )
    if levels < 1:
        raise ValueError("levels must be >= 1")
    for size in data.shape:
        # every level input must be even; the coarsest output may reach size 1
        if size % (1 << levels):
            raise BadDims(
                f"axis size {size} is not divisible by 2**{levels}"
            )


def analyze(
    bank: FilterBank,
    data: np.ndarray,
    levels: int,
    backend: str | None = None,
) -> CoefficientPyramid:
    """Multi-level framelet decomposition of a periodic tensor."""
    kern = _kernels_for(backend)
    data = np.asarray(data, dtype=np.float64)
    _check_analyze_args(bank, data, levels)
    scale = math.sqrt(2.0**bank.dim)
    low_off, low_w = _filter_arrays(bank.lowpass)
    high = [_filter_arrays(f) for f in bank.highpass]
    details: list[list[np.ndarray]] = []
    current = data
    for _ in range(levels):
        details.append(
            [kern.correlate_decimate(current, o, w, scale) for o, w in high]
        )
        current = kern.correlate_decimate(current, low_off, low_w, scale)
    return CoefficientPyramid(data.shape, details, current)


def synthesize(
    bank: FilterBank,
    pyramid: CoefficientPyramid,
    backend: str | None = None,
) -> np.ndarray:
    """Adjoint reconstruction from a coefficient pyramid."""
    kern = _kernels_for(backend)
    scale = math.sqrt(2.0**bank.dim)
    low_off, low_w = _filter_arrays(bank.lowpass)
    high = [_filter_arrays(f) for f in bank.highpass]
    current = np.asarray(pyramid.approx, dtype=np.float64)
    for level_details in reversed(pyramid.details):
        if len(level_details) != len(bank.highpass):
            raise ShapeMismatch(
                f"level has {len(level_details)} detail tensors, "
                f"bank has {len(bank.highpass)} high-pass filters"
            )
        out = np.zeros(tuple(2 * nn for nn in current.shape), dtype=np.float64)
        kern.upsample_accumulate(current, low_off, low_w, scale, out)
        for (off, w), det in zip(high, level_details):
            det = np.asarray(det, dtype=np.float64)
            if det.shape != current.shape:
                raise ShapeMismatch("detail tensor shape mismatch")
            kern.upsample_accumulate(det, off, w, scale, out)
        current = out
    if current.shape != tuple(pyramid.dims):
        raise ShapeMismatch("pyramid dims do not match reconstructed shape")
    return current


def pyramid_energy(pyramid: CoefficientPyramid) -> float:
    """Sum of squares of every coefficient, final low-pass included."""
    total = float(np.sum(np.square(pyramid.approx)))
    for level in pyramid.details:
        for det in level:
            total += float(np.sum(np.square(det)))
    return total


# ---------------------------------------------------------------------------
# exact-rational mode


def _to_exact_array(data) -> np.ndarray:
    arr = np.empty(np.shape(data), dtype=object)
    flat_src = np.asarray(data, dtype=object).ravel()
    flat = arr.ravel()
    for i, x in enumerate(flat_src):
        flat[i] = x if isinstance(x, RadCoeff) else RadCoeff.from_rational(x)
    return arr


def _exact_taps(f: Filter):
    return [(o, f.taps[o]) for o in f.offsets()]


def _correlate_decimate_exact(arr, taps, scale: RadCoeff):
    dims = arr.shape
    out = np.empty(tuple(nn // 2 for nn in dims), dtype=object)
    for n in np.ndindex(out.shape):
        acc = RadCoeff.zero()
        for off, c in taps:
            src = tuple((2 * ni + oi) % Ni for ni, oi, Ni in zip(n, off, dims))
            acc = acc + c * arr[src]
        out[n] = scale * acc
    return out


def _upsample_accumulate_exact(coeffs, taps, scale: RadCoeff, out):
    dims = out.shape
    for n in np.ndindex(coeffs.shape):
        value = coeffs[n]
        for off, c in taps:
            dst = tuple((2 * ni + oi) % Ni for ni, oi, Ni in zip(n, off, dims))
            out[dst] = out[dst] + (scale * c) * value
    return out


def analyze_exact(bank: FilterBank, data, levels: int) -> CoefficientPyramid:
    """Exact-arithmetic analysis for rational inputs (RadCoeff tensors)."""
    arr = _to_exact_array(data)
    _check_analyze_args(bank, arr, levels)
    scale = RadCoeff.sqrt_of(2**bank.dim)
    low = _exact_taps(bank.lowpass)
    high = [_exact_taps(f) for f in bank.highpass]
    details = []
    current = arr
    for _ in range(levels):
        details.append(
            [_correlate_decimate_exact(current, taps, scale) for taps in high]
        )
        current = _correlate_decimate_exact(current, low, scale)
    return CoefficientPyramid(arr.shape, details, current)


def synthesize_exact(bank: FilterBank, pyramid: CoefficientPyramid) -> np.ndarray:
    scale = RadCoeff.sqrt_of(2**bank.dim)
    low = _exact_taps(bank.lowpass)
    high = [_exact_taps(f) for f in bank.highpass]
    current = pyramid.approx
    for level_details in reversed(pyramid.details):
        out = np.empty(tuple(2 * nn for nn in current.shape), dtype=object)
        out.fill(RadCoeff.zero())
        _upsample_accumulate_exact(current, low, scale, out)
        for taps, det in zip(high, level_details):
            _upsample_accumulate_exact(det, taps, scale, out)
        current = out
    return current


def pyramid_energy_exact(pyramid: CoefficientPyramid) -> Fraction:
    """Exact sum of squared coefficients (a RadCoeff squared is rational)."""
    total = Fraction(0)
    for level in pyramid.details:
        for det in level:
            for c in det.ravel():
                total += c.radicand
    for c in pyramid.approx.ravel():
        total += c.radicand
    return total


# ---------------------------------------------------------------------------
# interchange formats


def write_tensor(data: np.ndarray, path) -> None:
    """Text format: header "dims: N1 ... Nd", then row-major values."""
    data = np.asarray(data, dtype=np.float64)
    with open(path, "w") as fh:
        fh.write("dims: " + " ".join(str(nn) for nn in data.shape) + "\n")
        flat = data.ravel()
        for start in range(0, flat.size, data.shape[-1]):
            row = flat[start : start + data.shape[-1]]
            fh.write(" ".join(format(x, ".17g") for x in row) + "\n")


def read_tensor(path) -> np.ndarray:
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("dims:"):
            raise ValueError("tensor file must start with a 'dims:' header")
        dims = tuple(int(tok) for tok in header[len("dims:") :].split())
        if not dims or any(nn < 1 for nn in dims):
            raise ValueError(f"bad dims header {header!r}")
        values = [float(tok) for tok in fh.read().split()]
    expected = math.prod(dims)
    if len(values) != expected:
        raise ValueError(
            f"tensor file holds {len(values)} values, dims need {expected}"
        )
    return np.array(values, dtype=np.float64).reshape(dims)


def pyramid_to_obj(pyramid: CoefficientPyramid) -> dict:
    return {
        "dims": list(pyramid.dims),
        "levels": pyramid.levels,
        "details": [
            [det.tolist() for det in level] for level in pyramid.details
        ],
        "approx": pyramid.approx.tolist(),
    }


def pyramid_from_obj(obj: dict) -> CoefficientPyramid:
    dims = tuple(int(nn) for nn in obj["dims"])
    levels = int(obj["levels"])
    details_obj = obj["details"]
    if len(details_obj) != levels:
        raise ValueError("pyramid levels field does not match details")
    details = []
    for j, level in enumerate(details_obj):
        shape = tuple(nn >> (j + 1) for nn in dims)
        tensors = []
        for det in level:
            arr = np.asarray(det, dtype=np.float64)
            if arr.shape != shape:
                raise ValueError(
                    f"level {j} detail has shape {arr.shape}, expected {shape}"
                )
            tensors.append(arr)
        details.append(tensors)
    approx = np.asarray(obj["approx"], dtype=np.float64)
    if approx.shape != tuple(nn >> levels for nn in dims):
        raise ValueError("approx tensor shape inconsistent with dims/levels")
    return CoefficientPyramid(dims, details, approx)


def pyramid_to_json(pyramid: CoefficientPyramid) -> str:
    return json.dumps(pyramid_to_obj(pyramid), sort_keys=True) + "\n"


def pyramid_from_json(text: str) -> CoefficientPyramid:
    return pyramid_from_obj(json.loads(text))
