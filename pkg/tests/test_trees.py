from fractions import Fraction

import pytest

from mahlerres.constants import Point
from mahlerres.errors import NotInSupport, NotTorsion, UnsupportedAlgebraicPoint, WrongKind
from mahlerres.parse import parse_expr
from mahlerres.ratfun import PFD, pf_decompose
from mahlerres.trees import (
    INF,
    INFINITY,
    bouquet_of,
    disp,
    height_at,
    meet,
    ord_at,
    same_tree,
    supp,
    torsion_height,
    tree_of,
)

SUMMABLE1 = "(-x^6+4*x^3+3*x^2-12*x+8)/((x-2)^2*(x^3-2)^2)"
NONSUMMABLE1 = "(-2*x^4+2*x^2+1)/((x^2+1)*(x^4-x^2+1))"


def test_cycles():
    t = tree_of(Point.zeta(4), 3)
    assert set(t.cycle) == {Point.zeta(4), Point.zeta(4, 3)} and t.e == 2
    t = tree_of(Point.zeta(3), 2)
    assert set(t.cycle) == {Point.zeta(3), Point.zeta(3, 2)}
    assert tree_of(Point.rational(1), 5).cycle == (Point.rational(1),)
    assert tree_of(Point.zeta(3), 3) == tree_of(Point.rational(1), 3)


def test_same_tree():
    assert same_tree(Point.rational(2), Point.radical(2, 3), 3)
    assert same_tree(Point.zeta(4), Point.zeta(12), 3)
    assert same_tree(Point.rational(4), Point.rational(-4), 2)
    assert not same_tree(Point.rational(2), Point.rational(-2), 3)
    assert not same_tree(Point.rational(2), Point.rational(3), 2)


def test_torsion_height():
    assert torsion_height(Point.zeta(12), 3) == 1
    assert torsion_height(Point.zeta(6), 2) == 1
    assert torsion_height(Point.zeta(8), 2) == 3
    with pytest.raises(NotTorsion):
        torsion_height(Point.rational(2), 2)


def test_summable1_tree_data():
    d = pf_decompose(parse_expr(SUMMABLE1))
    (t,) = supp(d, 3)
    assert not t.is_torsion()
    assert ord_at(d, t) == 2
    assert disp(d, t, 3) == 1
    b = bouquet_of(d, t)
    assert b.root == Point.rational(2) and b.height == 1
    assert all(b.eta(a) == 1 for a in Point.rational(2).roots(3))
    assert height_at(d, t) == 1


def test_nonsummable1_infinite_dispersion():
    d = pf_decompose(parse_expr(NONSUMMABLE1))
    (t,) = supp(d, 3)
    assert t.is_torsion() and disp(d, t, 3) is INF


def test_meet_of_cube_roots():
    pts = [Point.radical(2, 3), Point.zeta(3) * Point.radical(2, 3)]
    root, h = meet(pts, 3)
    assert root == Point.rational(2) and h == 1


def test_infinity_dispersion():
    assert disp(PFD({1: 1, 4: 1, 16: 1}), INFINITY, 2) == 4
    assert disp(PFD({0: 3}), INFINITY, 2) == 0
    assert disp(PFD({1: 1, 3: 1}), INFINITY, 2) == 0
    assert supp(PFD({0: 1}, {Point.rational(2): {1: 1}}), 2)[0] == INFINITY


def test_errors():
    d = pf_decompose(parse_expr("1/(x-zeta(3))"))
    (t,) = supp(d, 2)
    with pytest.raises(WrongKind):
        bouquet_of(d, t)
    with pytest.raises(NotInSupport):
        disp(d, tree_of(Point.rational(2), 2), 2)
    with pytest.raises(NotInSupport):
        disp(PFD(), INFINITY, 2)


def test_radical_index_coprime_to_p_is_unsupported():
    with pytest.raises(UnsupportedAlgebraicPoint):
        tree_of(Point.radical(2, 3), 2)
    assert tree_of(Point.radical(2, 3), 3) is not None
