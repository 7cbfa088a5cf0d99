from gmpy2 import mpq
from hypothesis import given, strategies as st

from cliffkernels.exactnum import (GaussianRational, format_gaussian, gaussian,
                                   parse_gaussian, parse_rational, pochhammer,
                                   rational)

rationals = st.builds(lambda p, q: mpq(p, q), st.integers(-50, 50),
                      st.integers(1, 30))
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_pochhammer_basics():
    assert pochhammer(mpq(3, 2), 2) == mpq(15, 4)
    assert pochhammer(mpq(7, 3), 0) == 1
    assert pochhammer(1, 5) == 120


@given(st.sampled_from([mpq(1, 2), mpq(1), mpq(3, 2), mpq(2)]),
       st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_additivity(a, j, k):
    if j + k <= 8:
        assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(gaussians)
def test_conjugation_involution(x):
    assert x.conjugate().conjugate() == x
    n = x * x.conjugate()
    assert not n.im and n.re >= 0


@given(gaussians, gaussians)
def test_division(x, y):
    if y:
        assert (x / y) * y == x


def test_division_by_zero():
    import pytest
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


def test_parse_rational():
    assert parse_rational("3/4") == mpq(3, 4)
    assert parse_rational("-7") == -7
    assert parse_rational("0.25") == mpq(1, 4)
    assert parse_rational("-1.5") == mpq(-3, 2)


def test_parse_gaussian_forms():
    assert parse_gaussian("1/2+3/4*i") == gaussian("1/2", "3/4")
    assert parse_gaussian("-i") == gaussian(0, -1)
    assert parse_gaussian("i") == gaussian(0, 1)
    assert parse_gaussian("2-i") == gaussian(2, -1)
    assert parse_gaussian("-3/5") == gaussian("-3/5")


@given(gaussians)
def test_gaussian_roundtrip(x):
    assert parse_gaussian(format_gaussian(x)) == x


def test_pow():
    i = GaussianRational(0, 1)
    assert i ** 2 == GaussianRational(-1)
    assert i ** -1 == GaussianRational(0, -1)
    assert GaussianRational(mpq(1, 2), 1) ** 0 == GaussianRational(1)
