# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: language_level=3
"""Compiled periodized transform kernels.

Hot inner loops of the framelet transform: correlate-and-decimate (analysis)
and upsample-and-accumulate (synthesis) for one filter on an even torus of
any dimension.  Per-axis source indexes are precomputed per tap, so the
inner loop is a handful of table lookups per output element.  Analysis sums
taps in the same order as the pure-Python backend (bitwise identical);
synthesis can differ from it in the last ulp when several taps share a
parity class, because scatter order then differs.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


def _index_tables(dims, half_dims, offsets):
    """tab[t, base[i] + c] = ((2c + offsets[t, i]) mod dims[i]) * stride[i]."""
    d = len(dims)
    strides = np.ones(d, dtype=np.int64)
    for i in range(d - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    base = np.zeros(d, dtype=np.int64)
    for i in range(1, d):
        base[i] = base[i - 1] + half_dims[i - 1]
    width = int(base[d - 1] + half_dims[d - 1])
    tab = np.empty((len(offsets), width), dtype=np.int64)
    for t, off in enumerate(offsets):
        for i in range(d):
            pos = (2 * np.arange(half_dims[i], dtype=np.int64) + int(off[i])) % dims[i]
            tab[t, base[i] : base[i] + half_dims[i]] = pos * strides[i]
    return tab, base


def correlate_decimate(data, offsets, weights, double scale):
    """out(n) = scale * sum_t w[t] * data((2n + offsets[t]) mod dims)."""
    data = np.ascontiguousarray(data, dtype=np.float64)
    dims = data.shape
    half = tuple(nn // 2 for nn in dims)
    out = np.zeros(half, dtype=np.float64)
    tab_np, base_np = _index_tables(dims, half, np.asarray(offsets))

    cdef double[::1] src = data.ravel()
    cdef double[::1] dst = out.ravel()
    cdef cnp.int64_t[:, ::1] tab = tab_np
    cdef cnp.int64_t[::1] base = base_np
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef cnp.int64_t[::1] half_dims = np.asarray(half, dtype=np.int64)
    cdef cnp.int64_t[::1] coords = np.zeros(len(half), dtype=np.int64)
    cdef Py_ssize_t ntaps = tab_np.shape[0]
    cdef Py_ssize_t d = len(half)
    cdef Py_ssize_t total = dst.shape[0]
    cdef Py_ssize_t p, t, i, s
    cdef double acc

    for p in range(total):
        acc = 0.0
        for t in range(ntaps):
            s = 0
            for i in range(d):
                s += tab[t, base[i] + coords[i]]
            acc += w[t] * src[s]
        dst[p] = scale * acc
        i = d - 1
        while i >= 0:
            coords[i] += 1
            if coords[i] < half_dims[i]:
                break
            coords[i] = 0
            i -= 1
    return out


def upsample_accumulate(coeffs, offsets, weights, double scale, out):
    """out((2n + offsets[t]) mod dims) += scale * w[t] * coeffs(n), in place."""
    if not (isinstance(out, np.ndarray) and out.dtype == np.float64
            and out.flags["C_CONTIGUOUS"]):
        raise TypeError("out must be a C-contiguous float64 array")
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    dims = out.shape
    half = tuple(nn // 2 for nn in dims)
    tab_np, base_np = _index_tables(dims, half, np.asarray(offsets))

    cdef double[::1] src = coeffs.ravel()
    cdef double[::1] dst = out.ravel()
    cdef cnp.int64_t[:, ::1] tab = tab_np
    cdef cnp.int64_t[::1] base = base_np
    # scale*w precomputed exactly as the python backend multiplies
    cdef double[::1] sw = scale * np.ascontiguousarray(weights, dtype=np.float64)
    cdef cnp.int64_t[::1] half_dims = np.asarray(half, dtype=np.int64)
    cdef cnp.int64_t[::1] coords = np.zeros(len(half), dtype=np.int64)
    cdef Py_ssize_t ntaps = tab_np.shape[0]
    cdef Py_ssize_t d = len(half)
    cdef Py_ssize_t total = src.shape[0]
    cdef Py_ssize_t p, t, i, s
    cdef double value

    for p in range(total):
        value = src[p]
        for t in range(ntaps):
            s = 0
            for i in range(d):
                s += tab[t, base[i] + coords[i]]
            dst[s] += sw[t] * value
        i = d - 1
        while i >= 0:
            coords[i] += 1
            if coords[i] < half_dims[i]:
                break
            coords[i] = 0
            i -= 1
