"""Differential dependence of solutions of first-order Mahler equations.

Solutions y_i of y_i(x^p) = a_i(x) y_i(x) are differentially dependent over
K(x) exactly when some integer combination of the log-derivatives
x a_i'/a_i is 1-Mahler summable.  Degree-one residues of log-derivatives are
rational multiples of the pole, so the candidate integer vectors are found
from a rational residue matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd, lcm

import sympy

from .constants import AlgConst, Point
from .errors import InternalVerificationFailure, NonRationalResidue
from .ratfun import PFD, RatFun, pf_decompose, reconstruct
from .residues import _pfd, _reduce_nontorsion, _reduce_torsion, certificate_pfd, dres_tree
from .trees import INFINITY, Bouquet, Tree, height_at, meet, sing, supp


def log_derivative(a) -> PFD:
    """PFD of x a'(x)/a(x)."""
    if not isinstance(a, RatFun):
        a = RatFun.const(a)
    if a.is_zero():
        raise ValueError("the log-derivative of zero is undefined")
    num = a.num.derivative() * a.den - a.num * a.den.derivative()
    f = RatFun(num.shift(1), a.num * a.den, hints=(a.num, a.den))
    return pf_decompose(f)


@dataclass
class ResidueMatrix:
    rows: list  # (tree key text, point text)
    ncols: int
    entries: list = field(default_factory=list)  # list of rows of Fraction

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "rows": [{"tree": t, "point": a} for t, a in self.rows],
            "entries": [[str(v) for v in row] for row in self.entries],
        }


def _common_heights(fs: list[PFD], p: int) -> dict:
    """Per-tree height overrides making all inputs share one bouquet or height."""
    trees: dict = {}
    for f in fs:
        for t in supp(f, p):
            if t != INFINITY:
                trees.setdefault(t.key, t)
    out = {}
    for key, t in trees.items():
        members = [f for f in fs if sing(f, t)]
        if t.is_torsion():
            out[key] = (t, max(height_at(f, t) for f in members))
        else:
            pts = [pt for f in members for pt in sing(f, t)]
            root, h = meet(pts, p)
            out[key] = (t, Bouquet(root, h, tuple(pts), p))
    return out


def _as_rational_multiple(v: AlgConst, alpha: Point) -> Fraction:
    q = v / alpha.value()
    if not q.is_rational():
        raise NonRationalResidue(f"residue {v.text()} is not a rational multiple of {alpha.text()}")
    return q.to_fraction()


def logderiv_residues(a: list, p: int) -> ResidueMatrix:
    """Rational matrix of dres_1(x a_i'/a_i, tau, 1)_alpha / alpha at a common height."""
    fs = [log_derivative(ai) for ai in a]
    common = _common_heights(fs, p)
    cols: list[dict] = []
    for f in fs:
        col = {}
        for key, (t, override) in common.items():
            if not sing(f, t):
                continue
            if t.is_torsion():
                loc = _reduce_torsion(f, t, 1, override)
            else:
                loc = _reduce_nontorsion(f, t, 1, override)
            for rv in loc.residues:
                if rv.degree != 1:
                    if not rv.is_zero():
                        raise InternalVerificationFailure("log-derivative residue above degree one")
                    continue
                for alpha, v in rv.entries.items():
                    col[(t.key_text(), alpha)] = _as_rational_multiple(v, alpha)
        cols.append(col)
    keys = sorted({k for col in cols for k in col}, key=lambda k: (k[0], k[1].sort_key()))
    entries = [[col.get(k, Fraction(0)) for col in cols] for k in keys]
    return ResidueMatrix([(t, alpha.text()) for t, alpha in keys], len(a), entries)


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    den = lcm(*(v.denominator for v in vec)) if vec else 1
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints] if g else ints
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def rational_kernel(M: ResidueMatrix) -> list[tuple[int, ...]]:
    """Basis of the right kernel over Q, as primitive integer vectors."""
    if not M.entries:
        return [tuple(int(i == j) for i in range(M.ncols)) for j in range(M.ncols)]
    mat = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in M.entries])
    out = []
    for vec in mat.nullspace():
        out.append(_primitive([Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in vec]))
    return out


@dataclass
class DependenceVerdict:
    dependent: bool
    coefficients: tuple | None = None
    witness: RatFun | None = None
    matrix: ResidueMatrix | None = None

    def to_json(self) -> dict:
        return {
            "dependent": self.dependent,
            "k": list(self.coefficients) if self.coefficients is not None else None,
            "g": self.witness.text() if self.witness is not None else None,
            "matrix": self.matrix.to_json() if self.matrix is not None else None,
        }


def combination(a: list, k, p: int | None = None) -> PFD:
    out = PFD()
    for ai, ki in zip(a, k):
        if ki:
            out = out + log_derivative(ai) * ki
    return out


def decide_dependence(a: list, p: int) -> DependenceVerdict:
    """Find integers k (not all zero) and g with sum k_i x a_i'/a_i = p g(x^p) - g(x)."""
    M = logderiv_residues(a, p)
    for k in rational_kernel(M):
        F = combination(a, k)
        g = certificate_pfd(F, 1, p)
        if g is None:
            continue
        if not g.delta(p, 1) == F:
            raise InternalVerificationFailure("dependence witness failed to verify")
        return DependenceVerdict(True, k, reconstruct(g), M)
    return DependenceVerdict(False, None, None, M)


def verify_verdict(a: list, p: int, verdict: DependenceVerdict) -> bool:
    """Re-check the witness identity of a dependent verdict exactly."""
    if not verdict.dependent:
        return True
    if not any(verdict.coefficients):
        return False
    F = combination(a, verdict.coefficients)
    g = _pfd(verdict.witness)
    return g.delta(p, 1) == F


def nishioka_identity_check(a, lam: int, tree: Tree) -> bool:
    """dres_lam(d^(lam-1)(x a'/a), tau, lam) = (-1)^(lam-1) (lam-1)! alpha^(lam-1) dres_1(x a'/a, tau, 1)."""
    f1 = log_derivative(a)
    if not sing(f1, tree):
        return True
    fl = f1
    for _ in range(lam - 1):
        fl = fl.partial()
    left = next((rv for rv in dres_tree(fl, tree, lam) if rv.degree == lam), None)
    right = next((rv for rv in dres_tree(f1, tree, 1) if rv.degree == 1), None)
    lhs = left.entries if left else {}
    rhs = right.entries if right else {}
    scale = (-1) ** (lam - 1) * factorial(lam - 1)
    for alpha in set(lhs) | set(rhs):
        l_val = lhs.get(alpha, AlgConst())
        r_val = rhs.get(alpha, AlgConst()) * (alpha ** (lam - 1)).value() * scale
        if not l_val == r_val:
            return False
        q = l_val / (alpha**lam).value()
        if not q.is_rational():
            return False
    return True
