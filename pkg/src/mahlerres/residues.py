"""Twisted Mahler discrete residues, the Mahler reduction and certificates.

For f in K(x), an integer twist lam and p >= 2, the reduction writes

    fbar = f + Delta_lam(G),   Delta_lam(g) = p^lam g(x^p) - g(x),

where fbar is assembled locally from the discrete residues of f at infinity
and at each Mahler tree in its support.  The function f is lam-Mahler summable
exactly when every discrete residue vanishes, in which case -G is a
certificate: f = Delta_lam(-G).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .constants import AlgConst, Point, ZERO
from .cyclemap import CycVec, cyclic_component, d_apply, height_slice, residual_average, section
from .errors import InternalVerificationFailure, NotInSupport, WrongKind
from .mahlercoeff import v_at, v_taylor
from .ratfun import PFD, RatFun, pf_decompose, reconstruct, traj_of
from .trees import INFINITY, Bouquet, Tree, bouquet_of, height_at, ord_at, sing, supp, torsion_height


@dataclass
class ResVec:
    """Discrete residues at one locus and degree.

    locus is INFINITY (entries keyed by trajectory label i) or a Tree
    (entries keyed by Point); degree is 0 at infinity.
    """

    locus: object
    degree: int
    entries: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if not v.is_zero()}

    def is_zero(self) -> bool:
        return not self.entries

    def locus_text(self) -> str:
        return "infinity" if self.locus == INFINITY else self.locus.key_text()


@dataclass
class LocalReduction:
    """Residues at one locus, the local remainder and the local certificate part."""

    locus: object
    residues: list
    residual: PFD
    certificate_part: PFD


@dataclass
class Reduction:
    p: int
    lam: int
    f: PFD
    locals: list
    residual_pfd: PFD
    certificate_pfd: PFD

    @property
    def residual(self) -> RatFun:
        return reconstruct(self.residual_pfd)

    @property
    def certificate_part(self) -> RatFun:
        return reconstruct(self.certificate_pfd)

    @property
    def residues(self) -> list:
        return [r for loc in self.locals for r in loc.residues]

    def is_summable(self) -> bool:
        return self.residual_pfd.is_zero()


def _pfd(f) -> PFD:
    if isinstance(f, PFD):
        return f
    if not isinstance(f, RatFun):
        f = RatFun.const(f)
    return pf_decompose(f)


def _push(g: PFD, p: int, lam: int, n: int) -> PFD:
    """sum_{l < n} p^(lam l) sigma^l(g), so that Delta_lam of it is Delta^(n)(g)."""
    out = PFD()
    cur = g
    for ell in range(n):
        if ell:
            cur = cur.sigma(p)
        out = out + cur * (Fraction(p) ** (lam * ell))
    return out


# ---------------------------------------------------------------------------
# infinity


def _reduce_infinity(f: PFD, lam: int, p: int) -> LocalReduction:
    groups: dict[int, dict[int, AlgConst]] = {}
    for e, c in f.laurent.items():
        i, j = traj_of(e, p)
        groups.setdefault(i, {})[j] = c
    entries, heights = {}, {}
    residual = PFD()
    cert = PFD()
    for i in sorted(groups, key=lambda i: (abs(i), i)):
        row = groups[i]
        if i == 0:
            c0 = row[0]
            heights[0] = 0
            if lam == 0:
                entries[0] = c0
                residual = residual + PFD.monomial(0, c0)
            else:
                cert = cert + PFD.monomial(0, c0 * (-1 / (Fraction(p) ** lam - 1)))
            continue
        h = max(row)
        heights[i] = h
        val = ZERO
        for j, c in row.items():
            val = val + c * (Fraction(p) ** (lam * (h - j)))
            if j < h:
                cert = cert + _push(PFD.monomial(i * p**j, c), p, lam, h - j)
        entries[i] = val
        residual = residual + PFD.monomial(i * p**h, val)
    res = ResVec(INFINITY, 0, entries, {"heights": heights})
    return LocalReduction(INFINITY, [res], residual, cert)


def dres_infinity(f, lam: int, p: int) -> ResVec:
    """Discrete residues at infinity, one entry per trajectory label."""
    return _reduce_infinity(_pfd(f), lam, p).residues[0]


# ---------------------------------------------------------------------------
# non-torsion trees


def _nontorsion_bouquet(f: PFD, tree: Tree, height_override) -> Bouquet:
    if tree.is_torsion():
        raise WrongKind(f"{tree!r} is a torsion tree")
    if isinstance(height_override, Bouquet):
        return height_override
    b = bouquet_of(f, tree)
    if height_override is None or height_override == b.height:
        return b
    if height_override < b.height:
        raise ValueError(f"height override {height_override} is below the bouquet height {b.height}")
    return Bouquet(b.root, height_override, b.members, b.p)


def _reduce_nontorsion(f: PFD, tree: Tree, lam: int, height_override=None) -> LocalReduction:
    ft = f.tau_component(tree)
    if ft.is_zero():
        raise NotInSupport(f"{tree!r} is not in the support")
    b = _nontorsion_bouquet(ft, tree, height_override)
    p, h = tree.p, b.height
    m = ord_at(ft, tree)
    layers: dict[int, dict] = {}
    for pt, row in ft.poles.items():
        layers.setdefault(b.eta(pt), {})[pt] = row
    cert = PFD()
    for eta, poles in layers.items():
        if eta < h:
            cert = cert + _push(PFD(poles=poles), p, lam, h - eta)
    top = b.root.roots(p**h)
    res = []
    residual_poles: dict = {}
    for k in range(1, m + 1):
        entries = {}
        for a in top:
            acc = ZERO
            for n in range(h + 1):
                an = a ** (p**n)
                row = ft.poles.get(an)
                if not row:
                    continue
                for s, cs in row.items():
                    if s >= k:
                        acc = acc + v_at(a, s, k, n, p) * cs * (Fraction(p) ** (lam * n))
            entries[a] = acc
            if not acc.is_zero():
                residual_poles.setdefault(a, {})[k] = acc
        res.append(ResVec(tree, k, entries, {"height": h, "root": b.root.text()}))
    return LocalReduction(tree, res, PFD(poles=residual_poles), cert)


def dres_nontorsion(f, tree: Tree, lam: int, height_override=None) -> list[ResVec]:
    """Residues at a non-torsion tree, one ResVec per degree 1..ord(f, tree)."""
    return _reduce_nontorsion(_pfd(f), tree, lam, height_override).residues


# ---------------------------------------------------------------------------
# torsion trees


def _g1(d: CycVec, ct: CycVec) -> PFD:
    """g1 = -sum_k sum_gamma sum_{i=1}^{p-1} zeta_p^(ki) (c~_k + d_k)(gamma) / (x - zeta_p^i gamma)^k."""
    tree = d.tree
    p = tree.p
    s = d + ct
    poles: dict = {}
    for (k, g), v in s.entries.items():
        for i in range(1, p):
            z = Point(Fraction(i, p))
            poles.setdefault(z * g, {})[k] = -(v * (z**k).value())
    return PFD(poles=poles)


def _reduce_torsion(f: PFD, tree: Tree, lam: int, height_override=None) -> LocalReduction:
    if not tree.is_torsion():
        raise WrongKind(f"{tree!r} is not a torsion tree")
    ft = f.tau_component(tree)
    if ft.is_zero():
        raise NotInSupport(f"{tree!r} is not in the support")
    p, e = tree.p, tree.e
    h = height_at(ft, tree)
    if height_override is not None:
        if height_override < h:
            raise ValueError(f"height override {height_override} is below the torsion height {h}")
        h = height_override
    m = ord_at(ft, tree)
    cycle = set(tree.cycle)
    if h == 0:
        res = []
        for k in range(1, m + 1):
            entries = {g: ft.poles.get(g, {}).get(k, ZERO) for g in tree.cycle}
            res.append(ResVec(tree, k, entries, {"height": 0, "omega": "0"}))
        return LocalReduction(tree, res, ft, PFD())
    c = cyclic_component(ft, tree)
    omega = residual_average(ft, tree, lam, height=h)
    d = section(c, lam, omega)
    ct = d_apply(d, lam)
    # easy reduction: push every non-cycle pole to height h
    cert = PFD()
    layers: dict[int, dict] = {}
    for pt, row in ft.poles.items():
        if pt in cycle:
            continue
        layers.setdefault(torsion_height(pt, p), {})[pt] = row
    for eta, poles in layers.items():
        if eta < h:
            cert = cert + _push(PFD(poles=poles), p, lam, h - eta)
    g0 = d.to_pfd()
    cert = cert - g0 + _push(_g1(d, ct), p, lam, h - 1)
    top_deg = max(m, d.max_degree, ct.max_degree)
    q = p ** (h + e - 1)
    slice_h = height_slice(tree, h)
    res = []
    residual_poles: dict = {}
    for k in range(1, top_deg + 1):
        entries = {}
        for a in slice_h:
            acc = ZERO
            for n in range(h):
                an = a ** (p**n)
                row = ft.poles.get(an)
                if not row:
                    continue
                for s, cs in row.items():
                    if s >= k:
                        acc = acc + v_at(a, s, k, n, p) * cs * (Fraction(p) ** (lam * n))
            g = a**q
            for s in range(k, top_deg + 1):
                t = ct.get(s, g) + d.get(s, g)
                v = v_taylor(s, k, h - 1, p)
                if v and not t.is_zero():
                    acc = acc - (a ** (k - s * q)).value() * t * (v * Fraction(p) ** (lam * (h - 1)))
            entries[a] = acc
        if lam >= 1 and k == lam:
            for g in tree.cycle:
                entries[g] = c.get(lam, g) - ct.get(lam, g)
        for a, v in entries.items():
            if not v.is_zero():
                residual_poles.setdefault(a, {})[k] = v
        res.append(ResVec(tree, k, entries, {"height": h, "omega": omega.text()}))
    while res and res[-1].degree > m and res[-1].is_zero():
        res.pop()
    return LocalReduction(tree, res, PFD(poles=residual_poles), cert)


def dres_torsion(f, tree: Tree, lam: int, height_override=None) -> list[ResVec]:
    """Residues at a torsion tree, one ResVec per degree."""
    return _reduce_torsion(_pfd(f), tree, lam, height_override).residues


def dres_tree(f, tree: Tree, lam: int, height_override=None) -> list[ResVec]:
    if tree.is_torsion():
        return dres_torsion(f, tree, lam, height_override)
    return dres_nontorsion(f, tree, lam, height_override)


# ---------------------------------------------------------------------------
# global reduction


def reduce(f, lam: int, p: int, heights: dict | None = None) -> Reduction:
    """The Mahler reduction fbar = f + Delta_lam(G), verified exactly.

    heights optionally maps tree keys to height overrides.
    """
    P = _pfd(f)
    heights = heights or {}
    locs = []
    for locus in supp(P, p):
        if locus == INFINITY:
            locs.append(_reduce_infinity(P, lam, p))
        elif locus.is_torsion():
            locs.append(_reduce_torsion(P, locus, lam, heights.get(locus.key)))
        else:
            locs.append(_reduce_nontorsion(P, locus, lam, heights.get(locus.key)))
    if P.laurent and not any(loc.locus == INFINITY for loc in locs):
        raise AssertionError("Laurent part missing from the support")
    residual = PFD()
    cert = PFD()
    for loc in locs:
        residual = residual + loc.residual
        cert = cert + loc.certificate_part
    if not residual == P + cert.delta(p, lam):
        raise InternalVerificationFailure("reduction identity fbar = f + Delta(G) failed")
    return Reduction(p, lam, P, locs, residual, cert)


def is_summable(f, lam: int, p: int) -> bool:
    """True iff f = p^lam g(x^p) - g(x) for some rational g."""
    return reduce(f, lam, p).is_summable()


def certificate_pfd(f, lam: int, p: int) -> PFD | None:
    red = reduce(f, lam, p)
    if not red.is_summable():
        return None
    g = -red.certificate_pfd
    if not g.delta(p, lam) == red.f:
        raise InternalVerificationFailure("certificate does not satisfy Delta(g) = f")
    return g


def certificate(f, lam: int, p: int) -> RatFun | None:
    """A rational g with f = p^lam g(x^p) - g(x), or None when f is not summable."""
    g = certificate_pfd(f, lam, p)
    return None if g is None else reconstruct(g)
