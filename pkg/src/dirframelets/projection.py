"""Integer direction matrices and projection of lattice filters.

A d x n integer matrix P of rational rank d projects an n-dimensional filter
to d dimensions by summing all taps that share an image under P.  The
projection carries tight framelet filter banks to tight framelet filter banks
exactly when P maps no nonzero 0/1 vector of length d onto an all-even vector
under transposition, which is the same as the rows of P being linearly
independent over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .coeffs import RadCoeff
from .filters import Filter, IntVec
from .haar import haar_lowpass

MAX_FIBER_COLS = 20  # vertex enumeration walks all 2**n cube corners


class InvalidDirectionMatrix(ValueError):
    """Matrix fails the rank or odd-vector requirement for bank building."""


@dataclass(frozen=True)
class DirectionMatrix:
    """Immutable d x n integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged rows in matrix")

    @classmethod
    def from_rows(cls, rows) -> "DirectionMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def from_text(cls, text: str) -> "DirectionMatrix":
        """Parse whitespace-separated integer rows, one row per line."""
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append(tuple(int(tok) for tok in line.split()))
        if not rows:
            raise ValueError("matrix file contains no rows")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows in matrix file")
        return cls(tuple(rows))

    @classmethod
    def identity(cls, dim: int) -> "DirectionMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        )

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def apply(self, k: IntVec) -> IntVec:
        """Matrix-vector product P @ k for an integer n-vector."""
        if len(k) != self.n:
            raise ValueError("vector length does not match matrix columns")
        return tuple(sum(r * x for r, x in zip(row, k)) for row in self.rows)

    def column(self, j: int) -> IntVec:
        return tuple(row[j] for row in self.rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows) + "\n"


def rational_rank(m: DirectionMatrix) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in m.rows]
    rank = 0
    for col in range(m.n):
        pivot = next(
            (r for r in range(rank, len(work)) if work[r][col] != 0), None
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [inv * x for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def gf2_row_dependency(m: DirectionMatrix) -> tuple[int, ...] | None:
    """A nonzero 0/1 combination of rows that vanishes mod 2, or None.

    Rows are packed into int bitsets; elimination tracks which original rows
    combine into each work row, so a vanished row yields a witness.
    """
    bits = [
        sum((x & 1) << j for j, x in enumerate(row)) for row in m.rows
    ]
    combo = [1 << i for i in range(m.d)]
    filled = 0
    for col in range(m.n):
        pivot = next(
            (r for r in range(filled, m.d) if (bits[r] >> col) & 1), None
        )
        if pivot is None:
            continue
        bits[filled], bits[pivot] = bits[pivot], bits[filled]
        combo[filled], combo[pivot] = combo[pivot], combo[filled]
        for r in range(m.d):
            if r != filled and (bits[r] >> col) & 1:
                bits[r] ^= bits[filled]
                combo[r] ^= combo[filled]
        filled += 1
    for r in range(m.d):
        if bits[r] == 0:
            mask = combo[r]
            return tuple((mask >> i) & 1 for i in range(m.d))
    return None


@dataclass(frozen=True)
class MatrixValidity:
    """Outcome of direction-matrix validation."""

    rank_ok: bool
    odd_ok: bool
    witness: tuple[int, ...] | None = None  # set when odd_ok is False

    @property
    def ok(self) -> bool:
        return self.rank_ok and self.odd_ok

    def describe(self) -> str:
        if self.ok:
            return "valid"
        if not self.rank_ok:
            return "invalid: rational rank below row count"
        return (
            "invalid: transposed matrix maps the odd vector "
            f"{self.witness} to an all-even vector"
        )


def validate_direction_matrix(m: DirectionMatrix) -> MatrixValidity:
    """Check rational rank d and the odd-vector condition (mod-2 rank d)."""
    rank_ok = rational_rank(m) == m.d
    witness = gf2_row_dependency(m)
    return MatrixValidity(rank_ok, witness is None, witness)


def ensure_valid(m: DirectionMatrix) -> None:
    v = validate_direction_matrix(m)
    if not v.ok:
        raise InvalidDirectionMatrix(v.describe())


def project_filter(m: DirectionMatrix, f: Filter) -> Filter:
    """Push every tap of f to its image under m, summing collisions exactly.

    Raises IncommensurableTaps if two colliding taps cannot be summed as
    exact RadCoeffs (never the case for the banks built in this package).
    """
    if f.dim != m.n:
        raise ValueError(
            f"filter dimension {f.dim} does not match matrix columns {m.n}"
        )
    acc: dict[IntVec, RadCoeff] = {}
    for offset in f.offsets():
        image = m.apply(offset)
        cur = acc.get(image)
        coeff = f.taps[offset]
        acc[image] = coeff if cur is None else cur + coeff
    return Filter(m.d, acc)


def preimage_vertices(m: DirectionMatrix, point: IntVec) -> set[IntVec]:
    """Cube vertices k in {0,1}**n with m @ k == point, by enumeration."""
    if len(point) != m.d:
        raise ValueError("point dimension does not match matrix rows")
    if m.n > MAX_FIBER_COLS:
        raise ValueError(
            f"fiber enumeration capped at {MAX_FIBER_COLS} columns"
        )
    point = tuple(int(x) for x in point)
    return {
        v for v in product((0, 1), repeat=m.n) if m.apply(v) == point
    }


def boxspline_mask(m: DirectionMatrix) -> Filter:
    """Refinement mask of the box spline with direction matrix m.

    This is the projection of the n-dimensional cube-vertex averaging filter;
    tap values are fiber-size / 2**n.  Only the rank requirement is enforced
    here so that masks of matrices failing the odd-vector condition can still
    be examined (their sum rules fail, which is what the validity test means).
    """
    if rational_rank(m) != m.d:
        raise InvalidDirectionMatrix("invalid: rational rank below row count")
    return project_filter(m, haar_lowpass(m.n))


def sum_rules_order_one(f: Filter) -> bool:
    """True iff every parity-coset tap sum equals 2**-dim, exactly."""
    target = RadCoeff.from_rational(Fraction(1, 2**f.dim))
    sums: dict[IntVec, RadCoeff] = {
        parity: RadCoeff.zero() for parity in product((0, 1), repeat=f.dim)
    }
    for offset in f.offsets():
        parity = tuple(x & 1 for x in offset)
        sums[parity] = sums[parity] + f.taps[offset]
    return all(value == target for value in sums.values())
