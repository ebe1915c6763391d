"""Polynomials, rational functions and partial fraction decompositions.

Everything is exact over the constant field of :mod:`mahlerres.constants`.
A :class:`PFD` is the canonical form used by the algorithms; :class:`RatFun`
is the numerator/denominator form used for parsing and display.  The Mahler
operator, the twisted differences and the derivation x d/dx are provided on
both, and the two agree through :func:`pf_decompose` and :func:`reconstruct`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .constants import ONE, ZERO, AlgConst, Point
from .errors import UnsupportedAlgebraicPoint, UnsupportedDenominator
from .mahlercoeff import v_taylor


def _c(x) -> AlgConst:
    return AlgConst.coerce(x)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Univariate polynomial as a sparse map exponent -> nonzero AlgConst."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.c: dict[int, AlgConst] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _c(v)
                if not v.is_zero():
                    self.c[e] = v

    @staticmethod
    def const(v) -> "Poly":
        return Poly({0: v})

    @staticmethod
    def x(power: int = 1) -> "Poly":
        return Poly({power: ONE})

    @staticmethod
    def linear(alpha) -> "Poly":
        """x - alpha."""
        return Poly({1: ONE, 0: -_c(alpha)})

    def is_zero(self) -> bool:
        return not self.c

    def degree(self) -> int:
        return max(self.c) if self.c else -1

    def lc(self) -> AlgConst:
        return self.c[self.degree()] if self.c else ZERO

    def low(self) -> int:
        return min(self.c) if self.c else 0

    def coeff(self, e: int) -> AlgConst:
        return self.c.get(e, ZERO)

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.c.values())

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out[e] + v if e in out else v
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({e: -v for e, v in self.c.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            k = _c(other) if not isinstance(other, (int, Fraction)) else other
            return Poly({e: v * k for e, v in self.c.items()})
        out: dict[int, AlgConst] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                t = v1 * v2
                out[e] = out[e] + t if e in out else t
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k may be negative when it keeps exponents >= 0)."""
        return Poly({e + k: v for e, v in self.c.items()})

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree()
        inv = other.lc().inverse()
        rem = dict(self.c)
        quo: dict[int, AlgConst] = {}
        while rem:
            top = max(rem)
            if top < d:
                break
            q = rem[top] * inv
            quo[top - d] = q
            for e, v in other.c.items():
                k = top - d + e
                nv = rem.get(k, ZERO) - q * v
                if nv.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = nv
            rem.pop(top, None)
        return Poly(quo), Poly(rem)

    def monic(self) -> "Poly":
        lc = self.lc()
        if lc == ONE:
            return self
        return self * lc.inverse()

    def __call__(self, a) -> AlgConst:
        a = _c(a)
        out = ZERO
        for e in range(self.degree(), -1, -1):
            out = out * a + self.coeff(e)
        return out

    def evalf(self, z: complex) -> complex:
        return sum(v.to_complex() * z**e for e, v in self.c.items())

    def derivative(self) -> "Poly":
        return Poly({e - 1: v * e for e, v in self.c.items() if e})

    def compose_power(self, k: int) -> "Poly":
        """p(x^k)."""
        return Poly({e * k: v for e, v in self.c.items()})

    def taylor(self, alpha, count: int) -> list[AlgConst]:
        """First ``count`` Taylor coefficients of self at alpha (repeated synthetic division)."""
        alpha = _c(alpha)
        cur = [self.coeff(e) for e in range(self.degree() + 1)]
        out = []
        for _ in range(count):
            if not cur:
                out.append(ZERO)
                continue
            # divide cur by (x - alpha)
            n = len(cur) - 1
            q = [ZERO] * n
            acc = ZERO
            for i in range(n, -1, -1):
                acc = acc * alpha + cur[i]
                if i:
                    q[i - 1] = acc
            out.append(acc)
            cur = q
        return out

    def taylor_at_root(self, alpha) -> tuple[int, list[AlgConst]]:
        """(m, [P_m, ..., P_{2m-1}]) where m is the multiplicity of alpha as a root."""
        alpha = _c(alpha)
        cur = [self.coeff(e) for e in range(self.degree() + 1)]
        m = 0
        out: list[AlgConst] = []
        while cur and (not out or len(out) < m):
            n = len(cur) - 1
            q = [ZERO] * n
            acc = ZERO
            for i in range(n, -1, -1):
                acc = acc * alpha + cur[i]
                if i:
                    q[i - 1] = acc
            cur = q
            if not out and acc.is_zero():
                m += 1
            elif m == 0:
                return 0, []
            else:
                out.append(acc)
        while len(out) < m:
            out.append(ZERO)
        return m, out

    def root_multiplicity(self, alpha) -> int:
        alpha = _c(alpha)
        cur = self
        m = 0
        lin = Poly.linear(alpha)
        while cur.degree() > 0:
            q, r = cur.divmod(lin)
            if not r.is_zero():
                break
            cur, m = q, m + 1
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def text(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            vt = v.text()
            # parenthesize only coefficients that are sums
            simple = not any(ch in vt[1:] for ch in "+-")
            if not mono:
                parts.append(vt if simple else f"({vt})")
            elif vt == "1":
                parts.append(mono)
            elif vt == "-1":
                parts.append("-" + mono)
            else:
                parts.append((vt if simple else f"({vt})") + "*" + mono)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"Poly({self.text()})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the constant field."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, (r.monic() if not r.is_zero() else r)
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# root finding for supported denominators


def _to_sympy(poly: Poly):
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(v.to_fraction().numerator, v.to_fraction().denominator) * x**e for e, v in poly.c.items())
    return sympy.Poly(expr, x, domain="QQ")


def _from_sympy(sp) -> Poly:
    out = {}
    for (e,), v in sp.terms():
        out[e] = Fraction(int(v.p), int(v.q))
    return Poly(out)


def _rational_factors(poly: Poly) -> list[Poly]:
    if poly.degree() <= 1:
        return [poly]
    import sympy

    _, facs = sympy.factor_list(_to_sympy(poly))
    return [_from_sympy(f) for f, _ in facs]


def _binomial_roots(F: Poly) -> list[Point]:
    """Roots of F when F divides some x^k - a with a a Point value; else []."""
    F = F.monic()
    d = F.degree()
    if d == 1:
        pt = (-F.coeff(0)).as_point()
        if pt is None:
            raise UnsupportedAlgebraicPoint(f"root {(-F.coeff(0)).text()} is not a supported point")
        return [pt]
    cur = Poly.x(1)
    top_c = {e: v for e, v in F.c.items() if e < d}
    for k in range(1, 16 * d + 33):
        if k > 1:
            cur = cur.shift(1)
            t = cur.coeff(d)
            if not t.is_zero():
                cur = Poly({e: v for e, v in cur.c.items() if e < d}) - Poly(top_c) * t
        if k >= d and cur.degree() == 0:
            a = cur.coeff(0)
            pt = a.as_point()
            if pt is None:
                raise UnsupportedAlgebraicPoint(f"x^{k} = {a.text()} has unsupported roots")
            return [b for b in pt.roots(k) if F(b.value()).is_zero()]
    return []


def candidate_roots(source: Poly) -> list[Point]:
    """Nonzero roots of ``source`` that the library knows how to locate.

    Rational sources are factored over Q first; every factor is split as a
    divisor of a binomial x^k - a.  Factors of any other shape contribute no
    roots, so callers must check completeness.
    """
    if source.degree() <= 0:
        return []
    low = source.low()
    src = source.shift(-low) if low else source
    if src.degree() <= 0:
        return []
    found: list[Point] = []
    if src.is_rational():
        factors = _rational_factors(src)
    else:
        g = poly_gcd(src, src.derivative())
        factors = [src.divmod(g)[0] if g.degree() > 0 else src]
    for F in factors:
        if F.degree() <= 0:
            continue
        found.extend(_binomial_roots(F))
    seen = set()
    out = []
    for pt in found:
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """Numerator/denominator pair with monic, coprime denominator.

    ``hints`` lists polynomials whose roots cover every root of the
    numerator and denominator; they are only used to locate poles.
    """

    __slots__ = ("num", "den", "hints")

    def __init__(self, num: Poly, den: Poly | None = None, hints: Iterable[Poly] = (), reduced: bool = False):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.const(1)
        elif not reduced and den.degree() > 0:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
        lc = den.lc()
        if lc != ONE:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.num, self.den = num, den
        hs = [h for h in hints if h.degree() > 0]
        if not hs:
            hs = [h for h in (num, den) if h.degree() > 0]
        uniq: list[Poly] = []
        for h in hs:
            if not any(h.degree() == u.degree() and h == u for u in uniq):
                uniq.append(h)
        self.hints = tuple(uniq)

    @staticmethod
    def const(v) -> "RatFun":
        return RatFun(Poly.const(v))

    @staticmethod
    def x() -> "RatFun":
        return RatFun(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RatFun":
        other = _rf(other)
        if self.den.degree() == 0 and other.den.degree() == 0:
            # a sum of polynomials is a new atomic factor
            return RatFun(self.num + other.num)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den, self.hints + other.hints)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den, self.hints + other.hints)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, self.hints, reduced=True)

    def __sub__(self, other) -> "RatFun":
        return self + (-_rf(other))

    def __rsub__(self, other) -> "RatFun":
        return _rf(other) - self

    def __mul__(self, other) -> "RatFun":
        other = _rf(other)
        return RatFun(self.num * other.num, self.den * other.den, self.hints + other.hints)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num, self.hints + other.hints + (other.num,))

    def __rtruediv__(self, other) -> "RatFun":
        return _rf(other) / self

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return RatFun.const(1) / (self ** (-n))
        return RatFun(self.num**n, self.den**n, self.hints, reduced=True)

    def __eq__(self, other) -> bool:
        other = _rf(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def evalf(self, z: complex) -> complex:
        return self.num.evalf(z) / self.den.evalf(z)

    def compose_power(self, k: int) -> "RatFun":
        return RatFun(self.num.compose_power(k), self.den.compose_power(k),
                      [h.compose_power(k) for h in self.hints], reduced=True)

    def text(self) -> str:
        if self.den.degree() == 0:
            return self.num.text()
        nt = self.num.text()
        # a single term parses correctly without parentheses (* and / are left-associative)
        return f"{nt if len(self.num.c) == 1 else f'({nt})'}/({self.den.text()})"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"RatFun({self.text()})"


def _rf(v) -> RatFun:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, Poly):
        return RatFun(v)
    return RatFun.const(v)


# ---------------------------------------------------------------------------
# trajectories


def traj_of(j: int, p: int) -> tuple[int, int]:
    """(i, h) with j = i p^h and p not dividing i; (0, 0) for j = 0."""
    if j == 0:
        return 0, 0
    h = 0
    while j % p == 0:
        j //= p
        h += 1
    return j, h


@dataclass(frozen=True)
class Traj:
    """Maximal trajectory i * p^Z>=0; i = 0 is the trajectory {0}."""

    i: int

    def contains(self, j: int, p: int) -> bool:
        return traj_of(j, p)[0] == self.i

    def text(self) -> str:
        return str(self.i)


# ---------------------------------------------------------------------------
# partial fraction decompositions


class PFD:
    """Laurent part plus pole table {alpha: {k: c_k(alpha)}}; zeros never stored."""

    __slots__ = ("laurent", "poles")

    def __init__(self, laurent: Mapping[int, object] | None = None,
                 poles: Mapping[Point, Mapping[int, object]] | None = None):
        self.laurent: dict[int, AlgConst] = {}
        self.poles: dict[Point, dict[int, AlgConst]] = {}
        for e, v in (laurent or {}).items():
            v = _c(v)
            if not v.is_zero():
                self.laurent[e] = v
        for pt, row in (poles or {}).items():
            clean = {}
            for k, v in row.items():
                v = _c(v)
                if not v.is_zero():
                    clean[k] = v
            if clean:
                self.poles[pt] = clean

    @staticmethod
    def pole(alpha: Point, k: int = 1, c=1) -> "PFD":
        return PFD(poles={alpha: {k: c}})

    @staticmethod
    def monomial(e: int, c=1) -> "PFD":
        return PFD(laurent={e: c})

    def is_zero(self) -> bool:
        return not self.laurent and not self.poles

    def order_at(self, alpha: Point) -> int:
        row = self.poles.get(alpha)
        return max(row) if row else 0

    def __add__(self, other: "PFD") -> "PFD":
        lau = dict(self.laurent)
        for e, v in other.laurent.items():
            lau[e] = lau[e] + v if e in lau else v
        poles = {pt: dict(row) for pt, row in self.poles.items()}
        for pt, row in other.poles.items():
            tgt = poles.setdefault(pt, {})
            for k, v in row.items():
                tgt[k] = tgt[k] + v if k in tgt else v
        return PFD(lau, poles)

    def __neg__(self) -> "PFD":
        return self * -1

    def __sub__(self, other: "PFD") -> "PFD":
        return self + (-other)

    def __mul__(self, s) -> "PFD":
        """Scalar multiplication by a constant."""
        if not isinstance(s, (int, Fraction)):
            s = _c(s)
        return PFD({e: v * s for e, v in self.laurent.items()},
                   {pt: {k: v * s for k, v in row.items()} for pt, row in self.poles.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PFD):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def sigma(self, p: int, n: int = 1) -> "PFD":
        """The Mahler operator x -> x^(p^n) applied n times, computed pole by pole."""
        if n == 0:
            return self
        q = p**n
        lau = {e * q: v for e, v in self.laurent.items()}
        poles: dict[Point, dict[int, AlgConst]] = {}
        for alpha, row in self.poles.items():
            m = max(row)
            inv_pows = {s: (alpha ** (-s)).value() * c for s, c in row.items()}
            # coefficient at beta of degree k: beta^k * sum_s V(s,k,n) alpha^(-s) c_s
            base = {}
            for k in range(1, m + 1):
                acc = ZERO
                for s in range(k, m + 1):
                    if s in inv_pows:
                        v = v_taylor(s, k, n, p)
                        if v:
                            acc = acc + inv_pows[s] * v
                if not acc.is_zero():
                    base[k] = acc
            if not base:
                continue
            for beta in alpha.roots(q):
                tgt = poles.setdefault(beta, {})
                for k, acc in base.items():
                    t = acc * (beta**k).value()
                    tgt[k] = tgt[k] + t if k in tgt else t
        return PFD(lau, poles)

    def delta(self, p: int, lam: int, n: int = 1) -> "PFD":
        """p^(lam n) sigma^n(f) - f."""
        return self.sigma(p, n) * (Fraction(p) ** (lam * n)) - self

    def partial(self) -> "PFD":
        """The derivation x d/dx."""
        lau = {e: v * e for e, v in self.laurent.items() if e}
        poles: dict[Point, dict[int, AlgConst]] = {}
        for alpha, row in self.poles.items():
            a = alpha.value()
            tgt: dict[int, AlgConst] = {}
            for k, c in row.items():
                # x/(x-a)^(k+1) = 1/(x-a)^k + a/(x-a)^(k+1)
                t1 = c * (-k)
                t2 = c * a * (-k)
                tgt[k] = tgt[k] + t1 if k in tgt else t1
                tgt[k + 1] = tgt[k + 1] + t2 if k + 1 in tgt else t2
            poles[alpha] = tgt
        return PFD(lau, poles)

    def evalf(self, z: complex) -> complex:
        total = sum(v.to_complex() * z**e for e, v in self.laurent.items())
        for pt, row in self.poles.items():
            a = pt.to_complex()
            total += sum(v.to_complex() / (z - a) ** k for k, v in row.items())
        return total

    def theta_component(self, theta: Traj | int, p: int) -> "PFD":
        i = theta.i if isinstance(theta, Traj) else theta
        return PFD({e: v for e, v in self.laurent.items() if traj_of(e, p)[0] == i})

    def laurent_part(self) -> "PFD":
        return PFD(self.laurent)

    def tau_component(self, tree) -> "PFD":
        return PFD(poles={pt: row for pt, row in self.poles.items() if tree.contains(pt)})

    def restrict(self, points: Iterable[Point]) -> "PFD":
        pts = set(points)
        return PFD(poles={pt: row for pt, row in self.poles.items() if pt in pts})

    def text(self) -> str:
        return reconstruct(self).text()

    def __repr__(self) -> str:
        terms = [f"{v.text()}*x^{e}" for e, v in sorted(self.laurent.items())]
        for pt in sorted(self.poles, key=Point.sort_key):
            for k, v in sorted(self.poles[pt].items()):
                terms.append(f"({v.text()})/(x-{pt.text()})^{k}")
        return "PFD(" + " + ".join(terms) + ")"


def _series_div(num: list[AlgConst], den: list[AlgConst], count: int) -> list[AlgConst]:
    inv0 = den[0].inverse()
    out: list[AlgConst] = []
    for i in range(count):
        acc = num[i] if i < len(num) else ZERO
        for j in range(1, i + 1):
            if j < len(den) and not den[j].is_zero() and not out[i - j].is_zero():
                acc = acc - den[j] * out[i - j]
        out.append(acc * inv0)
    return out


def _series_power(base: list[AlgConst], e: int, count: int) -> list[AlgConst]:
    out = [ONE] + [ZERO] * (count - 1)
    for _ in range(e):
        out = [sum((out[j] * base[i - j] for j in range(i + 1) if i - j < len(base)), ZERO) for i in range(count)]
    return out


def pf_decompose(f: RatFun) -> PFD:
    """Partial fraction decomposition by exact Taylor development at each pole."""
    num, den = f.num, f.den
    if num.is_zero():
        return PFD()
    if den.degree() == 0:
        return PFD(dict(num.c))
    m0 = den.low()
    dprime = den.shift(-m0) if m0 else den
    roots: dict[Point, int] = {}
    total = 0
    taylors: dict[Point, list[AlgConst]] = {}
    seen: set[Point] = set()
    for h in list(f.hints) + [dprime]:
        if total >= dprime.degree():
            break
        for pt in candidate_roots(h):
            if pt in seen or total >= dprime.degree():
                continue
            seen.add(pt)
            m, coeffs = dprime.taylor_at_root(pt.value())
            if m:
                roots[pt] = m
                taylors[pt] = coeffs
                total += m
    if total != dprime.degree():
        raise UnsupportedDenominator(f"cannot split denominator {den.text()} into supported factors")
    poles: dict[Point, dict[int, AlgConst]] = {}
    for pt, m in roots.items():
        a = pt.value()
        ntay = num.taylor(a, m)
        dser = taylors[pt]
        if m0:
            dser = _mul_series(dser, _series_power([a, ONE], m0, m), m)
        ser = _series_div(ntay, dser, m)
        poles[pt] = {m - j: ser[j] for j in range(m)}
    laurent: dict[int, AlgConst] = {}
    quo, _ = num.divmod(den)
    laurent.update(quo.c)
    if m0:
        ntay = [num.coeff(i) for i in range(m0)]
        dtay = [dprime.coeff(i) for i in range(m0)]
        ser = _series_div(ntay, dtay, m0)
        for j in range(m0):
            laurent[j - m0] = ser[j]
    return PFD(laurent, poles)


def _mul_series(a: list[AlgConst], b: list[AlgConst], count: int) -> list[AlgConst]:
    return [sum((a[j] * b[i - j] for j in range(i + 1) if j < len(a) and i - j < len(b)), ZERO)
            for i in range(count)]


def reconstruct(d: PFD) -> RatFun:
    """The rational function with decomposition ``d``."""
    if d.is_zero():
        return RatFun.const(0)
    neg = [e for e in d.laurent if e < 0]
    m0 = -min(neg) if neg else 0
    factors = {pt: (Poly.linear(pt.value()), max(row)) for pt, row in d.poles.items()}
    pole_den = Poly.const(1)
    for lin, m in factors.values():
        pole_den = pole_den * lin**m
    num = Poly({e + m0: v for e, v in d.laurent.items()}) * pole_den
    for pt, row in d.poles.items():
        lin, m = factors[pt]
        cof = Poly.x(m0)
        for q, (l2, m2) in factors.items():
            if q != pt:
                cof = cof * l2**m2
        local = Poly()
        for k, c in row.items():
            local = local + (lin ** (m - k)) * c
        num = num + cof * local
    hints = [lin for lin, _ in factors.values()]
    if m0:
        hints.append(Poly.x())
    return RatFun(num, pole_den.shift(m0), hints, reduced=True)


# ---------------------------------------------------------------------------
# operators on RatFun


def sigma(f: RatFun, p: int, n: int = 1) -> RatFun:
    return f.compose_power(p**n)


def delta_lambda(f: RatFun, p: int, lam: int, n: int = 1) -> RatFun:
    return sigma(f, p, n) * (Fraction(p) ** (lam * n)) - f


def partial_derivation(f: RatFun) -> RatFun:
    """x d/dx."""
    num = (f.num.derivative() * f.den - f.num * f.den.derivative()).shift(1)
    return RatFun(num, f.den * f.den, f.hints)


def theta_component(f: RatFun, theta: Traj | int, p: int) -> RatFun:
    return reconstruct(pf_decompose(f).theta_component(theta, p))


def tau_component(f: RatFun, tree) -> RatFun:
    return reconstruct(pf_decompose(f).tau_component(tree))
