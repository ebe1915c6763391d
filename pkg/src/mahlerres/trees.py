"""Mahler trees, cycles, heights, bouquets and dispersion.

Two nonzero constants are equivalent when some p-power of one equals some
p-power of the other; the classes are the Mahler trees.  A tree is keyed by

* the primitive exponent vector of its radical part (scaled by powers of p
  until it is integral but no longer divisible by p), together with the
  coprime-to-p part of the torsion exponent at that level, or
* for trees of roots of unity, the orbit of the coprime-to-p torsion part
  under multiplication by p (the cycle).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .constants import Point, multiplicative_order
from .errors import NotInSupport, NotTorsion, UnsupportedAlgebraicPoint, WrongKind
from .ratfun import PFD, traj_of


class _Infinity:
    """Sentinel for an infinite dispersion; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("INF")

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __add__(self, other):
        raise AssertionError("arithmetic with the infinite dispersion is not allowed")

    __radd__ = __sub__ = __rsub__ = __add__


INF = _Infinity()
INFINITY = "infinity"  # marker for the Laurent locus in supports


def _split_torsion(t: Fraction, p: int) -> tuple[Fraction, Fraction]:
    """(p-part, coprime part) of t in Q/Z: t = u/N_p + v/N_c with N_p built from primes of p."""
    t = Fraction(t) % 1
    N = t.denominator
    Np = 1
    g = gcd(N, p)
    while g > 1:
        Np *= g
        N //= g
        g = gcd(N, p)
    Nc = N
    if Nc == 1:
        return t, Fraction(0)
    a = t.numerator
    v = (a * pow(Np, -1, Nc)) % Nc
    coprime = Fraction(v, Nc)
    return (t - coprime) % 1, coprime


def torsion_height(a: Point, p: int) -> int:
    """Number of p-th powerings needed to reach a root of unity of order coprime to p."""
    if not a.is_torsion():
        raise NotTorsion(f"{a.text()} is not a root of unity")
    part, _ = _split_torsion(a.torsion, p)
    n = 0
    while part != 0:
        part = (part * p) % 1
        n += 1
    return n


def _level(a: Point, p: int) -> tuple[tuple, int]:
    """Primitive radical vector L and depth k with rad(a) * p^k = L."""
    vec = [e for _, e in a.rad]
    for e in vec:
        d = e.denominator
        while (g := gcd(d, p)) > 1:
            d //= g
        if d != 1:
            raise UnsupportedAlgebraicPoint(f"{a.text()} has a radical index coprime to p = {p}")
    k = 0
    while not all(e.denominator == 1 for e in vec):
        vec = [e * p for e in vec]
        k += 1
    while all((e / p).denominator == 1 for e in vec):
        vec = [e / p for e in vec]
        k -= 1
    return tuple((q, v) for (q, _), v in zip(a.rad, vec)), k


def depth(a: Point, p: int) -> int:
    """Signed distance of a non-torsion point from its tree's reference level."""
    return _level(a, p)[1]


def tree_key(a: Point, p: int) -> tuple:
    if a.is_torsion():
        _, c = _split_torsion(a.torsion, p)
        orbit = _orbit(c, p)
        return ("T", p, min(orbit))
    L, k = _level(a, p)
    if k >= 0:
        t = (a.torsion * p**k) % 1
        _, c = _split_torsion(t, p)
    else:
        _, c = _split_torsion(a.torsion, p)
        N = c.denominator
        c = Fraction(c.numerator * pow(p ** (-k), -1, N) % N, N) if N > 1 else Fraction(0)
    return ("N", p, L, c)


def _orbit(c: Fraction, p: int) -> list[Fraction]:
    out = [c]
    nxt = (c * p) % 1
    while nxt != c:
        out.append(nxt)
        nxt = (nxt * p) % 1
    return out


@dataclass(frozen=True)
class Tree:
    key: tuple
    p: int
    kind: str  # "torsion" or "non_torsion"
    cycle: tuple = field(default=(), compare=False)

    @property
    def e(self) -> int:
        return len(self.cycle)

    cycle_length = e

    def contains(self, a: Point) -> bool:
        return tree_key(a, self.p) == self.key

    def is_torsion(self) -> bool:
        return self.kind == "torsion"

    def key_text(self) -> str:
        if self.kind == "torsion":
            c = self.key[2]
            return f"T[{Point(c).text()}]"
        _, _, L, c = self.key
        rad = Point(c, tuple((q, Fraction(v)) for q, v in L))
        return f"N[{rad.text()}]"

    def __repr__(self) -> str:
        return f"Tree({self.key_text()}, p={self.p})"


def tree_of(a: Point, p: int) -> Tree:
    key = tree_key(a, p)
    if key[0] == "T":
        c = key[2]
        cycle = tuple(Point(t) for t in _orbit(c, p))
        # e is the order of p modulo the coprime order
        assert len(cycle) == multiplicative_order(p, c.denominator)
        return Tree(key, p, "torsion", cycle)
    return Tree(key, p, "non_torsion", ())


def same_tree(a: Point, b: Point, p: int) -> bool:
    return tree_key(a, p) == tree_key(b, p)


def sing(f: PFD, tree: Tree) -> list[Point]:
    return sorted((pt for pt in f.poles if tree.contains(pt)), key=Point.sort_key)


def supp(f: PFD, p: int) -> list:
    """Mahler support: the Laurent marker (first, if present) then trees in canonical order."""
    out: list = []
    if f.laurent:
        out.append(INFINITY)
    trees: dict[tuple, Tree] = {}
    for pt in f.poles:
        k = tree_key(pt, p)
        if k not in trees:
            trees[k] = tree_of(pt, p)
    out.extend(trees[k] for k in sorted(trees, key=repr))
    return out


def ord_at(f: PFD, tree: Tree) -> int:
    return max((max(row) for pt, row in f.poles.items() if tree.contains(pt)), default=0)


def height_at(f: PFD, tree: Tree) -> int:
    """ht(f, tau): torsion height maximum or the bouquet height."""
    if tree.is_torsion():
        return max((torsion_height(pt, tree.p) for pt in sing(f, tree)), default=0)
    return bouquet_of(f, tree).height


@dataclass(frozen=True)
class Bouquet:
    root: Point
    height: int
    members: tuple = ()
    p: int = 2

    def eta(self, a: Point) -> int:
        """Distance from a to the root: a^(p^eta) = root."""
        n = depth(a, self.p) - depth(self.root, self.p)
        if n < 0 or a ** (self.p**n) != self.root:
            raise ValueError(f"{a.text()} is not in the bouquet rooted at {self.root.text()}")
        return n

    def contains(self, a: Point) -> bool:
        n = depth(a, self.p) - depth(self.root, self.p)
        return 0 <= n <= self.height and a ** (self.p**n) == self.root


def meet(points, p: int) -> tuple[Point, int]:
    """Root and height of the smallest bouquet containing the given non-torsion points."""
    pts = list(points)
    if not pts:
        raise ValueError("empty point set")
    depths = {pt: depth(pt, p) for pt in pts}
    d = min(depths.values())
    while True:
        images = {pt ** (p ** (depths[pt] - d)) for pt in pts}
        if len(images) == 1:
            root = images.pop()
            return root, max(depths.values()) - d
        d -= 1


def bouquet_of(f: PFD, tree: Tree) -> Bouquet:
    if tree.is_torsion():
        raise WrongKind("bouquets are defined for non-torsion trees")
    pts = sing(f, tree)
    if not pts:
        raise NotInSupport(f"{tree!r} is not in the support")
    root, h = meet(pts, tree.p)
    return Bouquet(root, h, tuple(pts), tree.p)


def disp(f: PFD, locus, p: int):
    """Mahler dispersion at a tree or at the Laurent locus."""
    if locus == INFINITY:
        if not f.laurent:
            raise NotInSupport("the Laurent part is zero")
        best = 0
        nonzero = set(f.laurent)
        bound = max(abs(j) for j in nonzero)
        for i in nonzero:
            if i == 0:
                continue
            d = 1
            while abs(i) * p**d <= bound:
                if i * p**d in nonzero:
                    best = max(best, d)
                d += 1
        return best
    tree: Tree = locus
    pts = sing(f, tree)
    if not pts:
        raise NotInSupport(f"{tree!r} is not in the support")
    pset = set(pts)
    if tree.is_torsion():
        cyc = set(tree.cycle)
        if pset & cyc:
            return INF
        maxh = max(torsion_height(pt, p) for pt in pts)
        limit = maxh
    else:
        root, h = meet(pts, p)
        limit = h
    best = 0
    for a in pts:
        for d in range(1, limit + 1):
            if a ** (p**d) in pset:
                best = max(best, d)
    return best


def trajectory_height(f: PFD, i: int, p: int) -> int:
    """h_theta(f): the largest h with c_(i p^h) nonzero, 0 if the component vanishes."""
    hs = [traj_of(e, p)[1] for e in f.laurent if e and traj_of(e, p)[0] == i]
    return max(hs, default=0)


def trajectories(f: PFD, p: int) -> list[int]:
    """Trajectory labels i (0 for {0}) carrying Laurent terms, sorted."""
    return sorted({traj_of(e, p)[0] for e in f.laurent}, key=lambda i: (abs(i), i))
