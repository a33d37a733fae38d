import math
import random
from fractions import Fraction

import pytest

from dirframelets.coeffs import (
    IncommensurableTaps,
    NonSquareProduct,
    RadCoeff,
    rational_sqrt,
)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(1, 32)) is None
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(-4)) is None


def test_normalization_invariants():
    z = RadCoeff.zero()
    assert z.sign == 0 and z.radicand == 0
    with pytest.raises(ValueError):
        RadCoeff(0, Fraction(1, 2))
    with pytest.raises(ValueError):
        RadCoeff(1, Fraction(0))
    with pytest.raises(ValueError):
        RadCoeff(1, Fraction(-1))
    with pytest.raises(ValueError):
        RadCoeff(2, Fraction(1))


def test_representable_paper_coefficients():
    # 2**-d, sqrt(2)/8 and sqrt(m1*m2)/2**n all fit the representation
    d = 3
    c = RadCoeff.from_rational(Fraction(1, 2**d))
    assert c.radicand == Fraction(1, 2 ** (2 * d))
    w = RadCoeff.sqrt_of(Fraction(1, 32))
    assert math.isclose(float(w), math.sqrt(2) / 8)
    m = RadCoeff.sqrt_of(Fraction(4 * 2, 2**8))
    assert math.isclose(float(m), math.sqrt(8) / 16)


def test_product_as_fraction_examples():
    q = RadCoeff.sqrt_of(Fraction(1, 16))
    assert (q * (-q)).as_fraction() == Fraction(-1, 16)
    w = RadCoeff.sqrt_of(Fraction(1, 32))
    assert (w * w).as_fraction() == Fraction(1, 32)
    assert (RadCoeff.zero() * RadCoeff.sqrt_of(Fraction(1, 4))).as_fraction() == 0


def test_nonsquare_product_raises():
    w = RadCoeff.sqrt_of(Fraction(1, 32))
    q = RadCoeff.from_rational(Fraction(1, 4))
    with pytest.raises(NonSquareProduct):
        (w * q).as_fraction()


def test_mul_commutes_and_matches_float():
    rng = random.Random(20240811)
    for _ in range(1000):
        radicand = Fraction(rng.randrange(0, 50), rng.randrange(1, 50))
        sx = rng.choice((-1, 1))
        sy = rng.choice((-1, 1))
        if radicand == 0:
            x = y = RadCoeff.zero()
        else:
            x = RadCoeff(sx, radicand)
            y = RadCoeff(sy, radicand)
        assert x * y == y * x
        got = (x * y).as_fraction()
        assert math.isclose(float(got), float(x) * float(y), abs_tol=1e-12)


def test_addition_exact():
    w = RadCoeff.sqrt_of(Fraction(1, 32))
    assert w + w == RadCoeff.sqrt_of(Fraction(4, 32))
    assert w + (-w) == RadCoeff.zero()
    assert RadCoeff.zero() + w == w
    # rational values are always commensurable
    a = RadCoeff.from_rational(Fraction(1, 8))
    b = RadCoeff.from_rational(Fraction(1, 4))
    assert (a + b).as_fraction() == Fraction(3, 8)


def test_addition_incommensurable():
    with pytest.raises(IncommensurableTaps):
        RadCoeff.sqrt_of(2) + RadCoeff.sqrt_of(3)


def test_scaling_and_negation():
    w = RadCoeff.sqrt_of(Fraction(2, 64))
    assert w.scaled(Fraction(-1, 2)) == RadCoeff.scaled_sqrt(Fraction(-1, 2), Fraction(2, 64))
    assert -(-w) == w
    assert abs(w.scaled(-3)) == w.scaled(3)
    assert not RadCoeff.zero()
    assert w.scaled(0) == RadCoeff.zero()


def test_hash_and_repr():
    w1 = RadCoeff.sqrt_of(Fraction(1, 32))
    w2 = RadCoeff.sqrt_of(Fraction(1, 32))
    assert hash(w1) == hash(w2)
    assert "sqrt" in repr(w1)
    assert repr(RadCoeff.from_rational(Fraction(-1, 4))) == "RadCoeff(-1/4)"
