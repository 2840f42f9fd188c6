import random
from fractions import Fraction

import pytest

from nrquot.exactnum import TruncSeries, as_fraction, rat, series_geom_div, series_mul


def random_fraction(rng, span=50):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def test_rat_parsing():
    assert rat(3, 6) == Fraction(1, 2)
    assert rat("-7/2") == Fraction(-7, 2)
    assert rat(5) == Fraction(5)
    assert rat("0") == 0


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        rat(1.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_rational_canonical_form():
    x = rat(-4, -6)
    assert x.numerator == 2 and x.denominator == 3
    assert rat(0, 7) == Fraction(0, 1)


def test_rational_ring_laws_random():
    rng = random.Random(20240217)
    for _ in range(200):
        a, b, c = (random_fraction(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a and a * 1 == a


# -- truncated series ---------------------------------------------------------


def test_series_mul_identity():
    a = TruncSeries([1, 0, 1], 4)
    one = TruncSeries.one(4)
    assert series_mul(a, one) == a


def test_series_mul_square():
    a = TruncSeries([1, 0, 1], 4)
    assert series_mul(a, a) == TruncSeries([1, 0, 2, 0, 1], 4)


def test_series_mul_telescopes():
    a = TruncSeries([1, 0, 1, 0, 1], 6)
    b = TruncSeries([1, 0, -1], 6)
    assert series_mul(a, b) == TruncSeries.from_dict({0: 1, 6: -1}, 6)


def test_series_mul_truncates_to_min_bound():
    a = TruncSeries([1, 1], 3)
    b = TruncSeries([1, 1], 7)
    assert (a * b).bound == 3


def test_geom_div_of_one():
    assert series_geom_div(TruncSeries.one(6), 2) == TruncSeries(
        [1, 0, 1, 0, 1, 0, 1], 6
    )


def test_geom_div_telescoping_quotient():
    # (1 - t^6) / (1 - t^2) = 1 + t^2 + t^4
    a = TruncSeries.from_dict({0: 1, 6: -1}, 6)
    assert series_geom_div(a, 2) == TruncSeries([1, 0, 1, 0, 1, 0, 0], 6)


def test_geom_div_zero():
    assert series_geom_div(TruncSeries.zero(5), 2) == TruncSeries.zero(5)


def test_geom_div_inverts_multiplication_random():
    rng = random.Random(99)
    for _ in range(50):
        bound = rng.randint(2, 12)
        a = TruncSeries([rng.randint(-5, 5) for _ in range(bound + 1)], bound)
        k = 2 * rng.randint(1, max(1, bound // 2))
        onemk = TruncSeries.from_dict({0: 1, k: -1}, bound)
        assert series_geom_div(a * onemk, k) == a


def test_geom_div_validates_stride():
    a = TruncSeries.one(4)
    for bad in (0, 1, 3, -2):
        with pytest.raises(ValueError):
            series_geom_div(a, bad)


def test_series_rejects_non_integer_coefficients():
    with pytest.raises(ValueError):
        TruncSeries([Fraction(1, 2)], 2)
    with pytest.raises(TypeError):
        TruncSeries([0.5], 2)
    # integral Fractions are fine
    assert TruncSeries([Fraction(4, 2)], 1) == TruncSeries([2], 1)


def test_series_str():
    assert str(TruncSeries([1, 0, 1, 0, 1], 4)) == "1 + t^2 + t^4"
    assert str(TruncSeries([0, 0, 1, 0, 2], 4)) == "t^2 + 2*t^4"
    assert str(TruncSeries.zero(3)) == "0"
    assert str(TruncSeries([1, -1], 1)) == "1 - t"


def test_series_degree_and_coefficient():
    a = TruncSeries([0, 0, 3], 5)
    assert a.degree() == 2
    assert a.coefficient(2) == 3
    assert a.coefficient(5) == 0
    with pytest.raises(IndexError):
        a.coefficient(6)
