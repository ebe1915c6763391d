"""Exact constants: cyclotomic numbers, real radicals and pole locations.

Three layers live here.

``Cyc`` is an element of a cyclotomic field Q(zeta_M), stored as integer
coordinates in the power basis modulo the M-th cyclotomic polynomial with a
common denominator.

``AlgConst`` is a finite sum  sum_u c_u * u  where each ``u`` is a positive
real radical monomial  prod q^(e_q)  over primes q and each ``c_u`` is a
``Cyc``.  Exponents are kept in a canonical residue class modulo the
subgroup generated by 1/2, because square roots of rationals already live
in cyclotomic fields (Gauss sums) and get folded into the coefficient.  With
that normalization distinct monomials are linearly independent over the
maximal abelian extension of Q, so equality is structural.

``Point`` is a nonzero pole location  zeta^t * prod q^(x_q)  with t in Q/Z
and arbitrary rational exponents x_q.  Points are canonical, hashable and
closed under p-th powers and p-th roots.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=None)
def factor_int(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of a positive integer as sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factor_int expects a positive integer")
    out = []
    d = 2
    while d * d <= n and d < 100000:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d <= n:
            from sympy import factorint

            out.extend(sorted(factorint(n).items()))
        else:
            out.append((n, 1))
    return tuple(out)


def factor_rational(q: Fraction) -> dict[int, int]:
    """Exponent vector of a positive rational over its prime support."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("factor_rational expects a positive rational")
    vec: dict[int, int] = {}
    for prime, k in factor_int(q.numerator):
        vec[prime] = k
    for prime, k in factor_int(q.denominator):
        vec[prime] = vec.get(prime, 0) - k
    return vec


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    out = m
    for prime, _ in factor_int(m):
        out = out // prime * (prime - 1)
    return out


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/m)^x; 1 for m = 1."""
    if m == 1:
        return 1
    a %= m
    k, x = 1, a
    while x != 1:
        x = x * a % m
        k += 1
    return k


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            div = cyclotomic_poly(d)
            # exact division by a monic integer polynomial
            q = [0] * (len(num) - len(div) + 1)
            rem = num[:]
            for i in range(len(q) - 1, -1, -1):
                c = rem[i + len(div) - 1]
                q[i] = c
                if c:
                    for j, dc in enumerate(div):
                        rem[i + j] -= c * dc
            num = q
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta_m^j for j = 0..m-1."""
    phi = euler_phi(m)
    poly = cyclotomic_poly(m)
    rows = []
    v = [0] * phi
    v[0] = 1
    rows.append(tuple(v))
    for _ in range(1, m):
        top = v[-1]
        v = [0] + v[:-1]
        if top:
            for i in range(phi):
                v[i] -= top * poly[i]
        rows.append(tuple(v))
    return tuple(rows)


def _reduce_ints(m: int, raw: dict[int, int] | list[int]) -> list[int]:
    """Reduce a group-ring vector (exponent mod m -> int) to power-basis ints."""
    phi = euler_phi(m)
    red = _reduction(m)
    out = [0] * phi
    items = raw.items() if isinstance(raw, dict) else enumerate(raw)
    for j, c in items:
        if not c:
            continue
        j %= m
        if j < phi:
            out[j] += c
        else:
            for i, r in enumerate(red[j]):
                if r:
                    out[i] += c * r
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over Q used for inversion and display


def _poly_divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_mul_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return [Fraction(x) for x in out]


def _solve_q(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a (possibly overdetermined) linear system over Q; None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    return sol


# ---------------------------------------------------------------------------
# cyclotomic numbers


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Cyc:
    """Element of Q(zeta_M): integer power-basis coordinates over a common denominator."""

    __slots__ = ("M", "num", "den")

    def __init__(self, M: int, num: Iterable[int], den: int = 1):
        num = list(num)
        if den < 0:
            den, num = -den, [-x for x in num]
        g = den
        for x in num:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        if M > 1 and not any(num[1:]):
            M, num = 1, num[:1]
        self.M = M
        self.num = tuple(num)
        self.den = den

    # constructors
    @staticmethod
    def rational(q: Number) -> "Cyc":
        q = Fraction(q)
        return Cyc(1, [q.numerator], q.denominator)

    @staticmethod
    def root(t: Number) -> "Cyc":
        """zeta^t for t in Q/Z, i.e. exp(2 pi i t)."""
        t = Fraction(t) % 1
        m = t.denominator
        return Cyc(m, _reduction(m)[t.numerator])

    @staticmethod
    def from_group_ring(M: int, raw: dict[int, Fraction]) -> "Cyc":
        """Build sum c_j zeta_M^j from a map j -> rational coefficient."""
        d = 1
        for c in raw.values():
            d = lcm(d, Fraction(c).denominator)
        ints = {j: int(Fraction(c) * d) for j, c in raw.items()}
        return Cyc(M, _reduce_ints(M, ints), d)

    # predicates
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return self.M == 1

    def to_fraction(self) -> Fraction:
        if self.M != 1:
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.M)
        return sum(c * z**j for j, c in enumerate(self.num)) / self.den

    # conductor handling
    def embed(self, M2: int) -> "Cyc":
        if M2 == self.M:
            return self
        if M2 % self.M:
            raise ValueError(f"cannot embed conductor {self.M} into {M2}")
        step = M2 // self.M
        raw = {j * step: c for j, c in enumerate(self.num) if c}
        out = Cyc.__new__(Cyc)
        out.M, out.num, out.den = M2, tuple(_reduce_ints(M2, raw)), self.den
        return out

    def _aligned(self, other: "Cyc") -> tuple[int, "Cyc", "Cyc"]:
        m = lcm(self.M, other.M)
        return m, self.embed(m), other.embed(m)

    # arithmetic
    def __add__(self, other: "Cyc") -> "Cyc":
        if not isinstance(other, Cyc):
            other = Cyc.rational(other)
        m, a, b = self._aligned(other)
        d = lcm(a.den, b.den)
        fa, fb = d // a.den, d // b.den
        return Cyc(m, [x * fa + y * fb for x, y in zip(a.num, b.num)], d)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.M, [-x for x in self.num], self.den)

    def __sub__(self, other: "Cyc") -> "Cyc":
        if not isinstance(other, Cyc):
            other = Cyc.rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "Cyc":
        return Cyc.rational(other) - self

    def __mul__(self, other: "Cyc") -> "Cyc":
        if not isinstance(other, Cyc):
            q = Fraction(other)
            return Cyc(self.M, [x * q.numerator for x in self.num], self.den * q.denominator)
        if self.M == 1:
            return other * Fraction(self.num[0], self.den)
        if other.M == 1:
            return self * Fraction(other.num[0], other.den)
        m, a, b = self._aligned(other)
        raw = [0] * (2 * len(a.num) - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        raw[i + j] += x * y
        return Cyc(m, _reduce_ints(m, raw), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.M == 1:
            return Cyc.rational(1 / Fraction(self.num[0], self.den))
        # extended Euclid against Phi_M over Q
        mod = [Fraction(c) for c in cyclotomic_poly(self.M)]
        a = self.coeffs()
        while a and a[-1] == 0:
            a.pop()
        r0, r1 = mod, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_q(s0, _poly_mul_q(q, s1))
        c = r1[0]
        coeffs = [x / c for x in s1]
        return Cyc.from_group_ring(self.M, dict(enumerate(coeffs)))

    def __truediv__(self, other) -> "Cyc":
        if not isinstance(other, Cyc):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyc):
            try:
                other = Cyc.rational(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.minimized_key())

    def galois(self, a: int) -> "Cyc":
        """Apply zeta_M -> zeta_M^a (a coprime to M)."""
        raw = {j * a: c for j, c in enumerate(self.num) if c}
        return Cyc(self.M, _reduce_ints(self.M, raw), self.den)

    def minimize(self) -> "Cyc":
        """Re-express in the smallest cyclotomic field containing this element."""
        if self.M == 1:
            return self
        red = _reduction(self.M)
        phi = euler_phi(self.M)
        target = self.coeffs()
        for m2 in sorted(d for d in range(1, self.M) if self.M % d == 0):
            step = self.M // m2
            ph2 = euler_phi(m2)
            cols = [red[j * step] for j in range(ph2)]
            rows = [[Fraction(cols[c][i]) for c in range(ph2)] for i in range(phi)]
            sol = _solve_q(rows, target)
            if sol is not None:
                return Cyc.from_group_ring(m2, dict(enumerate(sol)))
        return self

    def minimized_key(self) -> tuple:
        m = self.minimize()
        return (m.M, m.num, m.den)

    def terms(self) -> list[tuple[int, int, Fraction]]:
        """(conductor, exponent, coefficient) triples of the minimized form."""
        m = self.minimize()
        return [(m.M, j, Fraction(x, m.den)) for j, x in enumerate(m.num) if x]

    def __repr__(self) -> str:
        return f"Cyc({AlgConst.from_cyc(self).text()})"


# ---------------------------------------------------------------------------
# radical monomials


def _canon_exponent(x: Fraction) -> tuple[Fraction, int, int]:
    """Split x = e + n + eps/2 with e the canonical representative mod <1/2>.

    The representative has odd denominator when the class contains one and
    lies in [0, 1/2) otherwise.
    """
    f = x % 1
    g = (f + Fraction(1, 2)) % 1
    if f.denominator % 2 == 1:
        e = f
    elif g.denominator % 2 == 1:
        e = g
    else:
        e = min(f, g)
    d = x - e
    if d.denominator == 1:
        return e, int(d), 0
    return e, int(d - Fraction(1, 2)), 1


@lru_cache(maxsize=None)
def sqrt_prime(q: int) -> Cyc:
    """The positive square root of a prime as a cyclotomic number (Gauss sums)."""
    if q == 2:
        return Cyc.root(Fraction(1, 8)) + Cyc.root(Fraction(-1, 8))
    raw = {}
    for a in range(1, q):
        raw[a] = Fraction(1 if pow(a, (q - 1) // 2, q) == 1 else -1)
    g = Cyc.from_group_ring(q, raw)
    if q % 4 == 1:
        return g
    return -(Cyc.root(Fraction(1, 4)) * g)


Rad = tuple  # sorted tuple of (prime, canonical exponent) pairs, exponents nonzero


def _rad_from_vector(vec: dict[int, Fraction]) -> tuple[Rad, Cyc]:
    """Canonical monomial and cyclotomic carry for prod q^(vec[q])."""
    carry = Cyc.rational(1)
    rational = Fraction(1)
    items = []
    for q in sorted(vec):
        x = Fraction(vec[q])
        if x == 0:
            continue
        e, n, eps = _canon_exponent(x)
        rational *= Fraction(q) ** n
        if eps:
            carry = carry * sqrt_prime(q)
        if e:
            items.append((q, e))
    return tuple(items), carry * rational


def _rad_mul(u: Rad, v: Rad) -> tuple[Rad, Cyc]:
    if not u:
        return v, Cyc.rational(1)
    if not v:
        return u, Cyc.rational(1)
    vec: dict[int, Fraction] = dict(u)
    for q, e in v:
        vec[q] = vec.get(q, Fraction(0)) + e
    return _rad_from_vector(vec)


def _rad_text(u: Rad) -> str:
    if not u:
        return ""
    P = 1
    for _, e in u:
        P = lcm(P, e.denominator)
    r = Fraction(1)
    for q, e in u:
        r *= Fraction(q) ** int(e * P)
    return f"root({_frac_str(r)},{P})"


def _rad_sort_key(u: Rad) -> tuple:
    P = 1
    for _, e in u:
        P = lcm(P, e.denominator)
    return (P, u)


# ---------------------------------------------------------------------------
# algebraic constants


class AlgConst:
    """Finite sum of cyclotomic coefficients times canonical real radical monomials."""

    __slots__ = ("terms_",)

    def __init__(self, terms: dict[Rad, Cyc] | None = None):
        self.terms_: dict[Rad, Cyc] = {}
        if terms:
            for u, c in terms.items():
                if not c.is_zero():
                    self.terms_[u] = c

    # constructors
    @staticmethod
    def coerce(x) -> "AlgConst":
        if isinstance(x, AlgConst):
            return x
        if isinstance(x, Cyc):
            return AlgConst.from_cyc(x)
        if isinstance(x, Point):
            return x.value()
        return AlgConst.from_cyc(Cyc.rational(x))

    @staticmethod
    def from_cyc(c: Cyc) -> "AlgConst":
        return AlgConst({(): c})

    @staticmethod
    def zeta(N: int, j: int = 1) -> "AlgConst":
        return AlgConst.from_cyc(Cyc.root(Fraction(j, N)))

    @staticmethod
    def radical(r: Number, k: int) -> "AlgConst":
        """Positive real k-th root of a positive rational."""
        return Point.radical(r, k).value()

    # predicates and accessors
    def is_zero(self) -> bool:
        return not self.terms_

    def is_rational(self) -> bool:
        if not self.terms_:
            return True
        return list(self.terms_) == [()] and self.terms_[()].is_rational()

    def to_fraction(self) -> Fraction:
        if not self.terms_:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("constant is not rational")
        return self.terms_[()].to_fraction()

    def to_complex(self) -> complex:
        total = 0j
        for u, c in self.terms_.items():
            r = 1.0
            for q, e in u:
                r *= float(q) ** float(e)
            total += r * c.to_complex()
        return total

    def is_cyclotomic(self) -> bool:
        return all(u == () for u in self.terms_)

    def cyc(self) -> Cyc:
        if not self.terms_:
            return Cyc.rational(0)
        if not self.is_cyclotomic():
            raise ValueError("constant has a radical part")
        return self.terms_[()]

    # arithmetic
    def __add__(self, other) -> "AlgConst":
        other = AlgConst.coerce(other)
        out = dict(self.terms_)
        for u, c in other.terms_.items():
            out[u] = out[u] + c if u in out else c
        return AlgConst(out)

    __radd__ = __add__

    def __neg__(self) -> "AlgConst":
        return AlgConst({u: -c for u, c in self.terms_.items()})

    def __sub__(self, other) -> "AlgConst":
        return self + (-AlgConst.coerce(other))

    def __rsub__(self, other) -> "AlgConst":
        return AlgConst.coerce(other) - self

    def __mul__(self, other) -> "AlgConst":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return AlgConst()
            return AlgConst({u: c * other for u, c in self.terms_.items()})
        other = AlgConst.coerce(other)
        out: dict[Rad, Cyc] = {}
        for u, a in self.terms_.items():
            for v, b in other.terms_.items():
                w, carry = _rad_mul(u, v)
                prod = a * b
                if not (carry.M == 1 and carry.num == (1,) and carry.den == 1):
                    prod = prod * carry
                out[w] = out[w] + prod if w in out else prod
        return AlgConst(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AlgConst":
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgConst.coerce(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "AlgConst":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * AlgConst.coerce(other).inverse()

    def __rtruediv__(self, other) -> "AlgConst":
        return AlgConst.coerce(other) * self.inverse()

    def inverse(self) -> "AlgConst":
        if not self.terms_:
            raise ZeroDivisionError("inverse of zero")
        if len(self.terms_) == 1:
            (u, c), = self.terms_.items()
            # prod q^(-e) = carry * w exactly
            w, carry = _rad_from_vector({q: -e for q, e in u})
            return AlgConst({w: c.inverse() * carry})
        return self._inverse_linear()

    def _inverse_linear(self) -> "AlgConst":
        # the span of the monomial group generated by our terms is a field;
        # solve a * b = 1 over the cyclotomic coefficients
        dens: dict[int, int] = {}
        for u in self.terms_:
            for q, e in u:
                dens[q] = lcm(dens.get(q, 1), e.denominator)
        group: list[Rad] = [()]
        for q in sorted(dens):
            reps = sorted({_canon_exponent(Fraction(k, dens[q]))[0] for k in range(dens[q])})
            group = [tuple(sorted(g + ((q, e),) if e else g)) for g in group for e in reps]
        index = {g: i for i, g in enumerate(group)}
        n = len(group)
        cols = []
        for v in group:
            prod = self * AlgConst({v: Cyc.rational(1)})
            col = [Cyc.rational(0)] * n
            for w, c in prod.terms_.items():
                col[index[w]] = c
            cols.append(col)
        mat = [[cols[j][i] for j in range(n)] + [Cyc.rational(1 if i == 0 else 0)] for i in range(n)]
        for c in range(n):
            pr = next(i for i in range(c, n) if not mat[i][c].is_zero())
            mat[c], mat[pr] = mat[pr], mat[c]
            inv = mat[c][c].inverse()
            mat[c] = [x * inv for x in mat[c]]
            for i in range(n):
                if i != c and not mat[i][c].is_zero():
                    f = mat[i][c]
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
        return AlgConst({group[i]: mat[i][n] for i in range(n)})

    def __eq__(self, other) -> bool:
        try:
            other = AlgConst.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # mutable-free but equality is up to conductor embedding

    # text
    def text(self) -> str:
        if not self.terms_:
            return "0"
        parts = []
        for u in sorted(self.terms_, key=_rad_sort_key):
            rad = _rad_text(u)
            for M, j, c in self.terms_[u].terms():
                factors = []
                if j:
                    factors.append(f"zeta({M})" + (f"^{j}" if j != 1 else ""))
                if rad:
                    factors.append(rad)
                if not factors:
                    parts.append(_frac_str(c))
                elif c == 1:
                    parts.append("*".join(factors))
                elif c == -1:
                    parts.append("-" + "*".join(factors))
                else:
                    parts.append(_frac_str(c) + "*" + "*".join(factors))
        out = "+".join(parts)
        return out.replace("+-", "-")

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"AlgConst({self.text()})"

    def as_point(self) -> "Point | None":
        """The Point with this value, or None when the value is not of that shape."""
        if len(self.terms_) != 1:
            return None
        (u, c), = self.terms_.items()
        c2 = c * c
        M = c2.M
        found = None
        for j in range(M):
            t = c2 * Cyc.root(Fraction(-j, M))
            if t.is_rational():
                found = (Fraction(j, M), t.to_fraction())
                break
        if found is None:
            return None
        tor, r = found
        if r < 0:
            tor, r = tor + Fraction(1, 2), -r
        base = Point.radical(r, 2)
        radvec = dict(base.rad)
        for q, e in u:
            radvec[q] = radvec.get(q, Fraction(0)) + e
        for half in (Fraction(0), Fraction(1, 2)):
            cand = Point(tor / 2 + half, tuple(sorted((q, e) for q, e in radvec.items() if e)))
            if cand.value() == self:
                return cand
        return None


# ---------------------------------------------------------------------------
# pole locations


@dataclass(frozen=True)
class Point:
    """Nonzero constant zeta^torsion * prod q^(x_q) with rational exponents.

    ``torsion`` is kept in [0, 1); ``rad`` is a sorted tuple of
    (prime, nonzero exponent) pairs.  Both are canonical, so structural
    equality coincides with equality of values.
    """

    torsion: Fraction
    rad: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", Fraction(self.torsion) % 1)

    # constructors
    @staticmethod
    def rational(q: Number) -> "Point":
        q = Fraction(q)
        if q == 0:
            raise ValueError("zero is not a Point")
        tor = Fraction(1, 2) if q < 0 else Fraction(0)
        vec = factor_rational(abs(q))
        return Point(tor, tuple(sorted((p, Fraction(k)) for p, k in vec.items() if k)))

    @staticmethod
    def zeta(N: int, j: int = 1) -> "Point":
        return Point(Fraction(j, N))

    @staticmethod
    def radical(r: Number, k: int) -> "Point":
        """Positive real k-th root of the positive rational r."""
        r = Fraction(r)
        if r <= 0:
            raise ValueError("radicand must be positive")
        vec = factor_rational(r)
        return Point(Fraction(0), tuple(sorted((p, Fraction(e, k)) for p, e in vec.items() if e)))

    # structure
    def is_torsion(self) -> bool:
        return not self.rad

    def order(self) -> int | None:
        """Order as a root of unity, None for non-torsion points."""
        return self.torsion.denominator if not self.rad else None

    def __pow__(self, n: int) -> "Point":
        return Point(self.torsion * n, tuple((q, e * n) for q, e in self.rad))

    def __mul__(self, other: "Point") -> "Point":
        vec = dict(self.rad)
        for q, e in other.rad:
            vec[q] = vec.get(q, Fraction(0)) + e
        return Point(self.torsion + other.torsion, tuple(sorted((q, e) for q, e in vec.items() if e)))

    def inverse(self) -> "Point":
        return self ** -1

    def power_p(self, p: int, n: int = 1) -> "Point":
        return self ** (p**n)

    def roots(self, k: int) -> list["Point"]:
        """All k-th roots, principal root (torsion/k) first."""
        rad = tuple((q, e / k) for q, e in self.rad)
        return [Point((self.torsion + i) / k, rad) for i in range(k)]

    def pth_roots(self, p: int) -> list["Point"]:
        return self.roots(p)

    def radical_depth(self, p: int) -> tuple[Fraction, int]:
        """(radicand r, depth h) with |self| = r^(1/p^h) and h minimal; raises if impossible."""
        h = 0
        while True:
            P = p**h
            if all((e * P).denominator == 1 for _, e in self.rad):
                r = Fraction(1)
                for q, e in self.rad:
                    r *= Fraction(q) ** int(e * P)
                return r, h
            h += 1
            if h > 64:
                raise ValueError("radical index is not a power of p")

    def is_p_power_radical(self, p: int) -> bool:
        for _, e in self.rad:
            d = e.denominator
            while True:
                g = gcd(d, p)
                if g == 1:
                    break
                d //= g
            if d != 1:
                return False
        return True

    # values
    def value(self) -> AlgConst:
        return _point_value(self)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi * float(self.torsion))
        for q, e in self.rad:
            z *= float(q) ** float(e)
        return z

    def sort_key(self) -> tuple:
        return (self.rad, self.torsion)

    def text(self) -> str:
        u = self.rad
        rad = ""
        ratpart = Fraction(1)
        if u:
            P = 1
            for _, e in u:
                P = lcm(P, e.denominator)
            r = Fraction(1)
            for q, e in u:
                r *= Fraction(q) ** int(e * P)
            rad = _frac_str(r) if P == 1 else f"root({_frac_str(r)},{P})"
            if P == 1:
                ratpart = r
        t = self.torsion
        if t == 0:
            return rad or "1"
        if t == Fraction(1, 2):
            return "-" + (rad or "1")
        z = f"zeta({t.denominator})" + (f"^{t.numerator}" if t.numerator != 1 else "")
        if not rad:
            return z
        if u and ratpart == Fraction(1) and "root" in rad:
            return z + "*" + rad
        return rad + "*" + z

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Point({self.text()})"


@lru_cache(maxsize=4096)
def _point_value(pt: Point) -> AlgConst:
    u, carry = _rad_from_vector(dict(pt.rad))
    return AlgConst({u: carry * Cyc.root(pt.torsion)})


def root_of_unity_order(x: Point) -> int | None:
    return x.order()


def point_power_p(x: Point, p: int, n: int = 1) -> Point:
    return x.power_p(p, n)


def point_pth_roots(x: Point, p: int) -> list[Point]:
    return x.pth_roots(p)


def alg_inv(a: AlgConst) -> AlgConst:
    return AlgConst.coerce(a).inverse()


def alg_arith(a, b, op: str) -> AlgConst:
    a, b = AlgConst.coerce(a), AlgConst.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


ZERO = AlgConst()
ONE = AlgConst.coerce(1)
