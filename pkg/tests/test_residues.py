from fractions import Fraction

import pytest

from corpus import FRESH, corpus
from mahlerres.constants import AlgConst, Point
from mahlerres.errors import NotInSupport, WrongKind
from mahlerres.parse import parse_expr
from mahlerres.ratfun import PFD, RatFun, delta_lambda, pf_decompose, reconstruct
from mahlerres.residues import (
    certificate,
    dres_infinity,
    dres_nontorsion,
    dres_torsion,
    is_summable,
    reduce,
)
from mahlerres.trees import Bouquet, meet, sing, supp, torsion_height, tree_of

SUMMABLE1 = "(-x^6+4*x^3+3*x^2-12*x+8)/((x-2)^2*(x^3-2)^2)"
NONSUMMABLE1 = "(-2*x^4+2*x^2+1)/((x^2+1)*(x^4-x^2+1))"


def test_dres_infinity_examples():
    r = dres_infinity(PFD({0: 5}), 0, 2)
    assert r.entries == {0: AlgConst.coerce(5)}
    assert dres_infinity(PFD({0: 5}), 1, 2).is_zero()
    for p, lam in ((2, 1), (3, -1), (2, 0)):
        assert dres_infinity(PFD({1: 1}).delta(p, lam), lam, p).is_zero()
    r = dres_infinity(PFD({1: 1, 3: 1}), 1, 3)
    assert r.entries == {1: AlgConst.coerce(4)}
    assert r.meta["heights"][1] == 1


def test_dres_nontorsion_examples():
    f = pf_decompose(parse_expr(SUMMABLE1))
    (t,) = supp(f, 3)
    assert all(rv.is_zero() for rv in dres_nontorsion(f, t, 1))
    for p in (2, 3):
        for lam in (-1, 0, 2):
            g = PFD.pole(Point.rational(2), 1)
            (rv,) = dres_nontorsion(g, tree_of(Point.rational(2), p), lam)
            assert rv.entries == {Point.rational(2): AlgConst.coerce(1)}
    with pytest.raises(WrongKind):
        dres_nontorsion(PFD.pole(Point.zeta(3), 1), tree_of(Point.zeta(3), 2), 1)
    with pytest.raises(NotInSupport):
        dres_nontorsion(PFD.pole(Point.rational(3), 1), tree_of(Point.rational(2), 2), 1)


def test_dres_torsion_lambda_exception():
    f = pf_decompose(parse_expr("-1/(x+1)"))
    t = tree_of(Point.rational(1), 2)
    assert all(rv.is_zero() for rv in dres_torsion(f, t, 1))
    assert certificate(f, 1, 2) == 1 / (RatFun.x() - 1)


def test_height_zero_obstruction():
    for p in (2, 3):
        for lam in range(-2, 4):
            f = PFD.pole(Point.zeta(5), 2, 3) + PFD.pole(Point.zeta(5, 2), 1, 1)
            assert not is_summable(f, lam, p)
            rvs = dres_torsion(f, tree_of(Point.zeta(5), p), lam)
            assert any(not rv.is_zero() for rv in rvs)


def test_constants():
    for p in (2, 3):
        for lam in (-2, -1, 1, 2):
            g = certificate(RatFun.const(3), lam, p)
            assert g == RatFun.const(Fraction(3) / (Fraction(p) ** lam - 1))
        assert certificate(RatFun.const(3), 0, p) is None
    assert certificate(RatFun.const(0), 0, 2) == RatFun.const(0)


def test_reduce_examples():
    x = RatFun.x()
    red = reduce(parse_expr(SUMMABLE1), 1, 3)
    assert red.residual.is_zero()
    assert red.certificate_part == -1 / (x - 2) ** 2
    red = reduce(RatFun.const(0), 1, 3)
    assert red.residual.is_zero() and red.certificate_part.is_zero()
    red = reduce(parse_expr(NONSUMMABLE1), 1, 3)
    assert not red.residual.is_zero()
    total = PFD()
    for rv in red.residues:
        for a, v in rv.entries.items():
            total = total + PFD.pole(a, rv.degree, v)
    assert total == red.residual_pfd


def test_reduction_identity_rational_route():
    """Independent check through RatFun arithmetic and substitution."""
    for expr, lam, p in [(SUMMABLE1, 1, 3), (NONSUMMABLE1, 1, 3), ("x^2+1/(x-2)+3/(x-zeta(3))^2", -1, 2),
                         ("1/(x^3-2)+x/(x^2+1)", 2, 3)]:
        f = parse_expr(expr, p)
        red = reduce(f, lam, p)
        assert red.residual == f + delta_lambda(red.certificate_part, p, lam)


@pytest.mark.parametrize("case", corpus(40, seed=7), ids=lambda c: f"p{c.p}l{c.lam}")
def test_round_trip_small(case):
    red = reduce(case.f, case.lam, case.p)
    assert red.is_summable()
    assert all(rv.is_zero() for rv in red.residues)
    g = -red.certificate_pfd
    diff = g - case.g
    if case.lam != 0:
        assert diff.is_zero()
    else:
        assert not diff.poles and set(diff.laurent) <= {0}
    assert not is_summable(case.f + PFD.pole(FRESH[0], 1), case.lam, case.p)


@pytest.mark.parametrize("case", corpus(25, seed=11), ids=lambda c: f"p{c.p}l{c.lam}")
def test_support_clause(case):
    """Nonzero residues sit on the top slice, or on the cycle in degree lambda."""
    f = case.f + PFD.pole(FRESH[1], 1)
    red = reduce(f, case.lam, case.p)
    for loc in red.locals:
        for rv in loc.residues:
            t = rv.locus
            if not hasattr(t, "p") or not t.is_torsion():
                continue
            h = rv.meta["height"]
            for a in rv.entries:
                eta = torsion_height(a, t.p)
                assert eta == h or (eta == 0 and rv.degree == case.lam and case.lam >= 1)


def test_linearity_with_height_override():
    p, lam = 2, 1
    f1 = PFD.pole(Point.rational(4), 2, 1) + PFD.pole(Point.radical(2, 2), 1, 3)
    f2 = PFD.pole(Point.rational(4), 1, 5) + PFD.pole(Point.radical(4, 4) * Point.zeta(4), 1, -1)
    t = tree_of(Point.rational(2), p)
    pts = sing(f1, t) + sing(f2, t)
    root, h = meet(pts, p)
    b = Bouquet(root, h, tuple(pts), p)
    r1 = dres_nontorsion(f1, t, lam, b)
    r2 = dres_nontorsion(f2, t, lam, b)
    r12 = dres_nontorsion(f1 + f2, t, lam, b)
    for k in range(len(r12)):
        e1 = r1[k].entries if k < len(r1) else {}
        e2 = r2[k].entries if k < len(r2) else {}
        keys = set(e1) | set(e2) | set(r12[k].entries)
        for a in keys:
            lhs = r12[k].entries.get(a, AlgConst())
            assert lhs == e1.get(a, AlgConst()) + e2.get(a, AlgConst())


def test_torsion_linearity_with_height_override():
    p, lam = 3, 2
    t = tree_of(Point.zeta(4), p)
    f1 = PFD.pole(Point.zeta(4), 2, 1) + PFD.pole(Point.zeta(12), 1, 2)
    f2 = PFD.pole(Point.zeta(36), 2, 1) + PFD.pole(Point.zeta(4, 3), 1, -1)
    h = 2
    from mahlerres.cyclemap import residual_average

    assert residual_average(f1 + f2, t, lam, h) == residual_average(f1, t, lam, h) + residual_average(f2, t, lam, h)
    r1, r2, r12 = (dres_torsion(g, t, lam, h) for g in (f1, f2, f1 + f2))
    n = max(len(r1), len(r2), len(r12))
    for k in range(n):
        e1 = r1[k].entries if k < len(r1) else {}
        e2 = r2[k].entries if k < len(r2) else {}
        e12 = r12[k].entries if k < len(r12) else {}
        for a in set(e1) | set(e2) | set(e12):
            assert e12.get(a, AlgConst()) == e1.get(a, AlgConst()) + e2.get(a, AlgConst())
