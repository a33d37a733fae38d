"""Finitely supported filters on the d-dimensional integer lattice.

A filter maps integer offsets (tuples of ints) to exact RadCoeff taps; a
bank is one low-pass filter plus an ordered list of high-pass filters of the
same dimension.  All values are immutable after construction.

JSON interchange format::

    coefficient: {"sign": -1|0|1, "radicand": {"num": "<dec>", "den": "<dec>"}}
    filter:      {"dim": d, "taps": [{"offset": [ints], "coeff": coefficient}]}
    bank:        {"dim": d, "lowpass": filter, "highpass": [filter, ...]}

Offsets must be unique per filter; parsers reject duplicates.  Radicand
numerator/denominator travel as decimal strings so arbitrary precision
survives the round trip.
"""

from __future__ import annotations

import cmath
import json
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .coeffs import RadCoeff

IntVec = tuple[int, ...]


class NotTwoTap(ValueError):
    """A filter expected to be a signed two-tap difference is not one."""


def vec_add(a: IntVec, b: IntVec) -> IntVec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: IntVec, b: IntVec) -> IntVec:
    return tuple(x - y for x, y in zip(a, b))


class Filter:
    """Immutable finitely supported filter with exact coefficients."""

    __slots__ = ("dim", "_taps")

    def __init__(self, dim: int, taps: Mapping[IntVec, RadCoeff] | Iterable):
        if dim < 1:
            raise ValueError("filter dimension must be >= 1")
        items = taps.items() if isinstance(taps, Mapping) else taps
        clean: dict[IntVec, RadCoeff] = {}
        for offset, coeff in items:
            offset = tuple(int(x) for x in offset)
            if len(offset) != dim:
                raise ValueError(f"offset {offset} is not {dim}-dimensional")
            if offset in clean:
                raise ValueError(f"duplicate offset {offset}")
            if coeff:
                clean[offset] = coeff
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_taps", MappingProxyType(clean))

    def __setattr__(self, name, value):
        raise AttributeError("Filter is immutable")

    @property
    def taps(self) -> Mapping[IntVec, RadCoeff]:
        return self._taps

    def offsets(self) -> list[IntVec]:
        """Support offsets in lexicographic order."""
        return sorted(self._taps)

    def coeff(self, offset: IntVec) -> RadCoeff:
        return self._taps.get(tuple(offset), RadCoeff.zero())

    def __len__(self) -> int:
        return len(self._taps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filter):
            return NotImplemented
        return self.dim == other.dim and dict(self._taps) == dict(other._taps)

    def __repr__(self) -> str:
        taps = ", ".join(f"{k}: {v!r}" for k, v in sorted(self._taps.items()))
        return f"Filter(dim={self.dim}, {{{taps}}})"

    def shifted(self, k: IntVec) -> "Filter":
        """Translate the support by k; coefficients unchanged."""
        k = tuple(int(x) for x in k)
        if len(k) != self.dim:
            raise ValueError("shift vector has wrong dimension")
        return Filter(self.dim, {vec_add(o, k): c for o, c in self._taps.items()})

    def scaled(self, q) -> "Filter":
        """Multiply every tap by the rational q."""
        return Filter(self.dim, {o: c.scaled(q) for o, c in self._taps.items()})

    def __neg__(self) -> "Filter":
        return Filter(self.dim, {o: -c for o, c in self._taps.items()})

    def coeff_sum(self) -> RadCoeff:
        """Exact sum of all taps (the value of the Fourier series at 0)."""
        total = RadCoeff.zero()
        for offset in self.offsets():
            total = total + self._taps[offset]
        return total

    def fourier(self, xi) -> complex:
        """Evaluate sum_k f(k) * exp(-i k.xi) at a real frequency vector."""
        if len(xi) != self.dim:
            raise ValueError("frequency vector has wrong dimension")
        total = 0j
        for offset, coeff in self._taps.items():
            phase = sum(o * x for o, x in zip(offset, xi))
            total += float(coeff) * cmath.exp(-1j * phase)
        return total

    def two_tap_parts(self) -> tuple[IntVec, IntVec, RadCoeff]:
        """Decompose w*(delta_p - delta_q) into (p, q, w) with w > 0.

        Raises NotTwoTap unless the filter has exactly two nonzero taps of
        equal magnitude and opposite signs.
        """
        if len(self._taps) != 2:
            raise NotTwoTap(f"{self!r} does not have exactly two taps")
        (o1, c1), (o2, c2) = sorted(self._taps.items())
        if c1 != -c2:
            raise NotTwoTap(f"{self!r} taps are not opposite equal weights")
        if c1.sign > 0:
            return o1, o2, c1
        return o2, o1, c2


class FilterBank:
    """One low-pass filter plus an ordered list of high-pass filters."""

    __slots__ = ("dim", "lowpass", "highpass")

    def __init__(self, lowpass: Filter, highpass: Iterable[Filter]):
        highpass = tuple(highpass)
        for f in highpass:
            if f.dim != lowpass.dim:
                raise ValueError("all bank members must share one dimension")
        object.__setattr__(self, "dim", lowpass.dim)
        object.__setattr__(self, "lowpass", lowpass)
        object.__setattr__(self, "highpass", highpass)

    def __setattr__(self, name, value):
        raise AttributeError("FilterBank is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilterBank):
            return NotImplemented
        return self.lowpass == other.lowpass and self.highpass == other.highpass

    def filters(self) -> list[Filter]:
        """Low-pass first, then the high-pass filters in order."""
        return [self.lowpass, *self.highpass]

    def __repr__(self) -> str:
        return f"FilterBank(dim={self.dim}, highpass={len(self.highpass)})"


# ---------------------------------------------------------------------------
# JSON interchange


def _coeff_to_obj(c: RadCoeff) -> dict:
    return {
        "sign": c.sign,
        "radicand": {
            "num": str(c.radicand.numerator),
            "den": str(c.radicand.denominator),
        },
    }


def _coeff_from_obj(obj: dict) -> RadCoeff:
    sign = obj["sign"]
    if sign not in (-1, 0, 1):
        raise ValueError(f"bad coefficient sign {sign!r}")
    rad = obj["radicand"]
    radicand = Fraction(int(rad["num"]), int(rad["den"]))
    return RadCoeff(sign, radicand)


def filter_to_obj(f: Filter) -> dict:
    return {
        "dim": f.dim,
        "taps": [
            {"offset": list(o), "coeff": _coeff_to_obj(f.taps[o])}
            for o in f.offsets()
        ],
    }


def filter_from_obj(obj: dict) -> Filter:
    dim = int(obj["dim"])
    taps = []
    seen = set()
    for entry in obj["taps"]:
        offset = tuple(int(x) for x in entry["offset"])
        if offset in seen:
            raise ValueError(f"duplicate offset {offset} in filter")
        seen.add(offset)
        taps.append((offset, _coeff_from_obj(entry["coeff"])))
    return Filter(dim, taps)


def bank_to_obj(bank: FilterBank) -> dict:
    return {
        "dim": bank.dim,
        "lowpass": filter_to_obj(bank.lowpass),
        "highpass": [filter_to_obj(f) for f in bank.highpass],
    }


def bank_from_obj(obj: dict) -> FilterBank:
    dim = int(obj["dim"])
    lowpass = filter_from_obj(obj["lowpass"])
    highpass = [filter_from_obj(o) for o in obj["highpass"]]
    bank = FilterBank(lowpass, highpass)
    if bank.dim != dim:
        raise ValueError("bank dim does not match member filters")
    return bank


def bank_to_json(bank: FilterBank) -> str:
    """Deterministic serialization: sorted keys, sorted tap offsets."""
    return json.dumps(bank_to_obj(bank), sort_keys=True, indent=1) + "\n"


def bank_from_json(text: str) -> FilterBank:
    return bank_from_obj(json.loads(text))


def save_bank(bank: FilterBank, path) -> None:
    with open(path, "w") as fh:
        fh.write(bank_to_json(bank))


def load_bank(path) -> FilterBank:
    with open(path) as fh:
        return bank_from_json(fh.read())
