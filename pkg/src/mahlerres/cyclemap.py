"""Linear algebra on coefficient vectors indexed by a torsion cycle.

A CycVec stores numbers v_k(gamma) for degrees k >= 1 and gamma in the cycle
C(tau) of a torsion tree.  The cycle map

    D(v)_k(gamma) = -v_k(gamma) + p^lam * sum_{s >= k} V(s, k, 1)(gamma) v_s(gamma^p)

records the cyclic part of Delta_lam applied to sum v_k(gamma)/(x - gamma)^k.
For lam <= 0 it is invertible; for lam >= 1 its kernel is spanned by the
kernel vector w and its image has codimension one.  The omega-section is a
right inverse up to a single obstruction in degree lam.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import AlgConst, Point, ZERO
from .errors import BadTwist, NotInSupport, WrongKind
from .mahlercoeff import v_at, v_taylor
from .ratfun import PFD
from .trees import Tree, height_at, sing, torsion_height


@dataclass
class CycVec:
    tree: Tree
    entries: dict = field(default_factory=dict)  # (k, gamma) -> AlgConst

    def __post_init__(self):
        cyc = set(self.tree.cycle)
        clean = {}
        for (k, g), v in self.entries.items():
            if g not in cyc:
                raise ValueError(f"{g.text()} is not on the cycle of {self.tree!r}")
            v = AlgConst.coerce(v)
            if not v.is_zero():
                clean[(k, g)] = v
        self.entries = clean

    def get(self, k: int, gamma: Point) -> AlgConst:
        return self.entries.get((k, gamma), ZERO)

    @property
    def max_degree(self) -> int:
        return max((k for k, _ in self.entries), default=0)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "CycVec") -> "CycVec":
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out[key] + v if key in out else v
        return CycVec(self.tree, out)

    def __neg__(self) -> "CycVec":
        return self * -1

    def __sub__(self, other: "CycVec") -> "CycVec":
        return self + (-other)

    def __mul__(self, s) -> "CycVec":
        if not isinstance(s, (int, Fraction)):
            s = AlgConst.coerce(s)
        return CycVec(self.tree, {key: v * s for key, v in self.entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycVec):
            return NotImplemented
        return self.tree == other.tree and (self - other).is_zero()

    __hash__ = None

    def to_pfd(self) -> PFD:
        poles: dict = {}
        for (k, g), v in self.entries.items():
            poles.setdefault(g, {})[k] = v
        return PFD(poles=poles)

    def to_records(self) -> list[dict]:
        return [
            {"degree": k, "gamma": g.text(), "value": v.text()}
            for (k, g), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))
        ]


def _require_torsion(tree: Tree) -> None:
    if not tree.is_torsion():
        raise WrongKind(f"{tree!r} is not a torsion tree")


def _pow(gamma: Point, e: int) -> AlgConst:
    return (gamma**e).value()


def cyclic_component(f: PFD, tree: Tree) -> CycVec:
    """Restriction of the pole table of f to the cycle of a torsion tree."""
    _require_torsion(tree)
    entries = {}
    for g in tree.cycle:
        for k, v in f.poles.get(g, {}).items():
            entries[(k, g)] = v
    return CycVec(tree, entries)


def d_apply(v: CycVec, lam: int) -> CycVec:
    """The cycle map D_lam applied to v."""
    tree = v.tree
    p = tree.p
    scale = Fraction(p) ** lam
    m = v.max_degree
    out = {}
    for g in tree.cycle:
        gp = g**p
        for k in range(1, m + 1):
            acc = -v.get(k, g)
            for s in range(k, m + 1):
                ds = v.get(s, gp)
                if not ds.is_zero():
                    acc = acc + v_at(g, s, k, 1, p) * ds * scale
            out[(k, g)] = acc
    return CycVec(tree, out)


def kernel_vector(tree: Tree, lam: int) -> CycVec:
    """The kernel vector w normalized by w_lam(gamma) = gamma^lam."""
    _require_torsion(tree)
    if lam <= 0:
        raise BadTwist(f"the cycle map is injective for lam = {lam}")
    p, e = tree.p, tree.e
    w = {(lam, g): _pow(g, lam) for g in tree.cycle}
    for k in range(lam - 1, 0, -1):
        denom = 1 - Fraction(p) ** ((lam - k) * e)
        for g in tree.cycle:
            acc = ZERO
            for j in range(e):
                gj1 = g ** (p ** (j + 1))
                for s in range(k + 1, lam + 1):
                    ws = w.get((s, gj1))
                    if ws is None or ws.is_zero():
                        continue
                    coeff = v_taylor(s, k, 1, p) * Fraction(p) ** ((lam - k) * j)
                    acc = acc + _pow(g, -s * p ** (j + 1)) * ws * coeff
            w[(k, g)] = acc * _pow(g, k) * (Fraction(p) ** lam / denom)
    return CycVec(tree, w)


def _bracket(c: CycVec, d: dict, k: int, lam: int, tree: Tree) -> dict:
    """c_k(beta) - p^lam sum_{s > k} V(s, k, 1)(beta) d_s(beta^p) for beta on the cycle."""
    p = tree.p
    scale = Fraction(p) ** lam
    top = max((s for s, _ in d), default=0)
    out = {}
    for b in tree.cycle:
        acc = c.get(k, b)
        bp = b**p
        for s in range(k + 1, top + 1):
            ds = d.get((s, bp))
            if ds is not None and not ds.is_zero():
                acc = acc - v_at(b, s, k, 1, p) * ds * scale
        out[b] = acc
    return out


def section(c: CycVec, lam: int, omega=0) -> CycVec:
    """The omega-section I^(omega)_lam(c), computed by descending degree.

    Every degree up to max(deg c, lam) is computed by the defining formula;
    degrees above the top degree of c come out as zero automatically.
    """
    tree = c.tree
    _require_torsion(tree)
    p, e = tree.p, tree.e
    top = max(c.max_degree, lam if lam >= 1 else 0)
    d: dict = {}
    for k in range(top, 0, -1):
        br = _bracket(c, d, k, lam, tree)
        if all(v.is_zero() for v in br.values()):
            continue
        for g in tree.cycle:
            acc = ZERO
            for j in range(e):
                gj = g ** (p**j)
                b = br[gj]
                if b.is_zero():
                    continue
                if k == lam:
                    w = Fraction(j + 1 - e)
                else:
                    w = Fraction(p) ** ((lam - k) * j)
                acc = acc + _pow(g, -k * p**j) * b * w
            if k == lam:
                d[(k, g)] = acc * _pow(g, k) / e
            else:
                d[(k, g)] = acc * _pow(g, k) / (Fraction(p) ** ((lam - k) * e) - 1)
    out = CycVec(tree, d)
    omega = AlgConst.coerce(omega)
    if lam >= 1 and not omega.is_zero():
        out = out + kernel_vector(tree, lam) * omega
    return out


def cycle_defect(c: CycVec, d: CycVec, lam: int) -> dict:
    """Closed form of c_lam - c~_lam on the cycle for d = I^(omega)(c), lam >= 1."""
    tree = c.tree
    p, e = tree.p, tree.e
    br = _bracket(c, d.entries, lam, lam, tree)
    out = {}
    for g in tree.cycle:
        acc = ZERO
        for j in range(1, e + 1):
            gj = g ** (p**j)
            acc = acc + _pow(g, -lam * p**j) * br[gj]
        out[g] = acc * _pow(g, lam) / e
    return out


def height_slice(tree: Tree, h: int) -> list[Point]:
    """All points of the torsion tree with torsion height exactly h."""
    p = tree.p
    out = []
    for g in tree.cycle:
        for b in g.roots(p**h):
            if torsion_height(b, p) == h:
                out.append(b)
    return sorted(set(out), key=Point.sort_key)


def residual_average(f: PFD, tree: Tree, lam: int, height: int | None = None) -> AlgConst:
    """The residual average omega_lam(f) at a torsion tree."""
    _require_torsion(tree)
    if not sing(f, tree):
        raise NotInSupport(f"{tree!r} is not in the support")
    h = height_at(f, tree) if height is None else height
    if lam <= 0 or h == 0:
        return ZERO
    p, e = tree.p, tree.e
    c = cyclic_component(f, tree)
    d0 = section(c, lam, 0)
    ct = d_apply(d0, lam)
    # first sum: group alpha in the height-h slice by beta = alpha^(p^n); p^n alphas per beta
    first = ZERO
    for beta, row in f.poles.items():
        if not tree.contains(beta):
            continue
        eta = torsion_height(beta, p)
        if eta == 0 or eta > h:
            continue
        n = h - eta
        for s, cs in row.items():
            if s < lam:
                continue
            v = v_taylor(s, lam, n, p)
            if v:
                first = first + _pow(beta, -s) * cs * (v * Fraction(p) ** (n + lam * n))
    first = first / ((p**h - p ** (h - 1)) * e)
    second = ZERO
    top = max(ct.max_degree, d0.max_degree)
    for g in tree.cycle:
        for s in range(lam, top + 1):
            v = v_taylor(s, lam, h - 1, p)
            t = ct.get(s, g) + d0.get(s, g)
            if v and not t.is_zero():
                second = second + _pow(g, -s) * t * v
    second = second * (Fraction(p) ** (lam * (h - 1)) / e)
    return first - second
