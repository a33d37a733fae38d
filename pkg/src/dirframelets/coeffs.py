"""Exact scalars of the form sign * sqrt(radicand) with a rational radicand.

Every coefficient in the filter banks built here is a signed square root of a
nonnegative rational (2**-d, sqrt(2)/8, sqrt(m1*m2)/2**n, ...), so this small
type is enough to make bank construction and verification exact: products of
two such scalars are again of this form, and products needed by the tight-bank
identities are plain rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction


class NonSquareProduct(ArithmeticError):
    """Raised when a coefficient expected to be rational is irrational."""


class IncommensurableTaps(ArithmeticError):
    """Raised when two coefficients cannot be added exactly.

    Addition stays exact only when the ratio of the radicands is the square
    of a rational, which holds for every sum this package needs to form.
    """


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class RadCoeff:
    """An exact scalar sign * sqrt(radicand), sign in {-1, 0, +1}.

    Instances are immutable and normalized: radicand is a nonnegative
    Fraction in lowest terms, and sign == 0 iff radicand == 0.
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign: int, radicand: Fraction | int):
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if (sign == 0) != (radicand == 0):
            raise ValueError("sign is 0 exactly when radicand is 0")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("RadCoeff is immutable")

    @classmethod
    def zero(cls) -> "RadCoeff":
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, q) -> "RadCoeff":
        """Embed a rational q as sign(q) * sqrt(q**2)."""
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        return cls(1 if q > 0 else -1, q * q)

    @classmethod
    def sqrt_of(cls, q) -> "RadCoeff":
        """The nonnegative square root of a nonnegative rational q."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take sqrt of a negative rational")
        return cls(1, q) if q > 0 else cls.zero()

    @classmethod
    def scaled_sqrt(cls, coef, q) -> "RadCoeff":
        """The value coef * sqrt(q) for rational coef and nonnegative q."""
        coef = Fraction(coef)
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take sqrt of a negative rational")
        if coef == 0 or q == 0:
            return cls.zero()
        return cls(1 if coef > 0 else -1, coef * coef * q)

    def is_rational(self) -> bool:
        return rational_sqrt(self.radicand) is not None

    def as_fraction(self) -> Fraction:
        """Exact rational value; NonSquareProduct if irrational."""
        root = rational_sqrt(self.radicand)
        if root is None:
            raise NonSquareProduct(f"{self!r} is not rational")
        return self.sign * root

    def __mul__(self, other: "RadCoeff") -> "RadCoeff":
        if not isinstance(other, RadCoeff):
            return NotImplemented
        s = self.sign * other.sign
        if s == 0:
            return RadCoeff.zero()
        return RadCoeff(s, self.radicand * other.radicand)

    def __add__(self, other: "RadCoeff") -> "RadCoeff":
        if not isinstance(other, RadCoeff):
            return NotImplemented
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        ratio = rational_sqrt(other.radicand / self.radicand)
        if ratio is None:
            raise IncommensurableTaps(
                f"cannot add {self!r} and {other!r} exactly"
            )
        coef = self.sign + other.sign * ratio
        return RadCoeff.scaled_sqrt(coef, self.radicand)

    def __sub__(self, other: "RadCoeff") -> "RadCoeff":
        if not isinstance(other, RadCoeff):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "RadCoeff":
        if self.sign == 0:
            return self
        return RadCoeff(-self.sign, self.radicand)

    def __abs__(self) -> "RadCoeff":
        return self if self.sign >= 0 else -self

    def scaled(self, coef) -> "RadCoeff":
        """The value coef * self for a rational coef."""
        return RadCoeff.scaled_sqrt(Fraction(coef) * self.sign, self.radicand)

    def __float__(self) -> float:
        return self.sign * math.sqrt(float(self.radicand))

    def __bool__(self) -> bool:
        return self.sign != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadCoeff):
            return NotImplemented
        return self.sign == other.sign and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def __repr__(self) -> str:
        if self.sign == 0:
            return "RadCoeff(0)"
        root = rational_sqrt(self.radicand)
        if root is not None:
            return f"RadCoeff({self.sign * root})"
        pre = "-" if self.sign < 0 else ""
        return f"RadCoeff({pre}sqrt({self.radicand}))"


ZERO = RadCoeff.zero()
ONE = RadCoeff.from_rational(1)
