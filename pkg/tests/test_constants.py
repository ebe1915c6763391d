import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahlerres.constants import AlgConst, Cyc, Point, cyclotomic_poly, euler_phi, multiplicative_order, sqrt_prime

rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def alg(draw):
    """Random element of Q(zeta_12, 2^(1/3), 3^(1/2))."""
    out = AlgConst()
    for _ in range(draw(st.integers(1, 3))):
        c = draw(rat)
        z = AlgConst.zeta(12, draw(st.integers(0, 11)))
        r = AlgConst.radical(2, 3) ** draw(st.integers(0, 2))
        s = AlgConst.radical(3, 2) ** draw(st.integers(0, 1))
        out = out + z * r * s * c
    return out


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9 * (1 + abs(a) + abs(b))


def test_zeta3_relation():
    z = AlgConst.zeta(3)
    assert z + z * z == AlgConst.coerce(-1)
    assert (z**3).is_rational() and (z**3).to_fraction() == 1


def test_sqrt2_is_cyclotomic():
    r = AlgConst.radical(2, 2)
    assert r.is_cyclotomic()
    assert r * r == AlgConst.coerce(2)
    assert r.text() == "zeta(8)-zeta(8)^3"


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_sqrt_prime_squares(q):
    s = sqrt_prime(q)
    assert s * s == Cyc.rational(q)
    assert close(s.to_complex(), q**0.5)


def test_cube_root_inverse():
    r = AlgConst.radical(2, 3)
    assert r.inverse().text() == "1/2*root(4,3)"
    assert r * r.inverse() == AlgConst.coerce(1)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert euler_phi(12) == 4
    assert multiplicative_order(3, 4) == 2


def test_point_canonical_forms():
    assert Point.rational(-2).text() == "-2"
    assert Point.zeta(12, 7) ** 3 == Point.zeta(4, 3)
    assert Point.radical(2, 3) ** 3 == Point.rational(2)
    assert len(Point.rational(2).roots(3)) == 3
    assert all(b**3 == Point.rational(2) for b in Point.rational(2).roots(3))
    assert Point.zeta(8).value() * AlgConst.radical(2, 2) == AlgConst.coerce(1) + AlgConst.zeta(4)


def test_as_point_recovers_points():
    for pt in (Point.zeta(12, 5), Point.radical(3, 4), Point.rational(-7), Point.zeta(3) * Point.radical(2, 3)):
        assert pt.value().as_point() == pt


@settings(max_examples=60, deadline=None)
@given(alg(), alg(), alg())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert close((a * b).to_complex(), a.to_complex() * b.to_complex())
    if not a.is_zero():
        assert a * a.inverse() == AlgConst.coerce(1)


@settings(max_examples=60, deadline=None)
@given(alg())
def test_numeric_value_matches(a):
    assert close((a * a).to_complex(), a.to_complex() ** 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30), st.integers(-40, 40))
def test_roots_of_unity_numeric(n, j):
    z = AlgConst.zeta(n, j)
    assert close(z.to_complex(), cmath.exp(2j * cmath.pi * j / n))


@settings(max_examples=40, deadline=None)
@given(rat.filter(lambda q: q != 0))
def test_rational_collapse(q):
    a = AlgConst.coerce(q)
    assert a.is_rational() and a.to_fraction() == Fraction(q)
