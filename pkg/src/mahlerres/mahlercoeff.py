"""Universal Mahler coefficients.

For 1 <= k <= m and n >= 0 the rational numbers  V(m, k, n)  are defined by
the partial fraction expansion

    1/(x^(p^n) - a^(p^n))^m = sum_{i, k} V(m, k, n) * b_i^(k - m p^n) / (x - b_i)^k

over the p^n-th roots b_i of a^(p^n).  Two independent routes are provided:
a power-series route (the production path) and a sum over restricted integer
partitions (the cross-check).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .constants import AlgConst, Point


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)


def partitions_bounded(k: int, bound: int) -> list[Partition]:
    """Partitions of k with every part < bound, parts weakly decreasing.

    Ordered lexicographically by parts, largest first.
    """
    out: list[Partition] = []

    def rec(rest: int, cap: int, acc: list[int]):
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(k, bound - 1, [])
    return out


def _check_indices(m: int, k: int, n: int) -> None:
    if not (1 <= k <= m) or n < 0:
        raise ValueError(f"need 1 <= k <= m and n >= 0, got m={m}, k={k}, n={n}")


@lru_cache(maxsize=None)
def _taylor_row(m: int, n: int, p: int) -> tuple[Fraction, ...]:
    """Coefficients of t^0..t^(m-1) in g_n(1+t)^(-m), g_n(x) = 1 + x + ... + x^(p^n - 1)."""
    q = p**n
    # g_n(1 + t) = sum_j binom(q, j+1) t^j
    g = [Fraction(comb(q, j + 1)) for j in range(m)]
    # series inverse of g
    inv = [Fraction(0)] * m
    inv[0] = 1 / g[0]
    for i in range(1, m):
        s = sum((g[j] * inv[i - j] for j in range(1, i + 1)), Fraction(0))
        inv[i] = -s / g[0]
    # m-th power by repeated truncated multiplication
    out = [Fraction(1)] + [Fraction(0)] * (m - 1)
    for _ in range(m):
        out = [sum((out[j] * inv[i - j] for j in range(i + 1)), Fraction(0)) for i in range(m)]
    return tuple(out)


def v_taylor(m: int, k: int, n: int, p: int) -> Fraction:
    """Universal coefficient via the Taylor expansion at x = 1."""
    _check_indices(m, k, n)
    return _taylor_row(m, n, p)[m - k]


def v_partition(m: int, k: int, n: int, p: int) -> Fraction:
    """Universal coefficient as a sum over partitions with parts below p^n."""
    _check_indices(m, k, n)
    q = p**n
    total = Fraction(0)
    for mu in partitions_bounded(m - k, q):
        ell = mu.length
        mult = [mu.multiplicity(i) for i in range(1, q)] if mu.parts else []
        multinom = factorial(m - 1 + ell) // factorial(m - 1)
        prod = 1
        for i, li in enumerate(mult, start=1):
            multinom //= factorial(li)
            prod *= comb(q, i + 1) ** li
        total += Fraction(multinom * prod) / Fraction(-q) ** ell
    return total / Fraction(q) ** m


vcoeff = v_taylor


def v_at(alpha: Point | AlgConst, m: int, k: int, n: int, p: int) -> AlgConst:
    """Pointwise coefficient V(m, k, n) * alpha^(k - m p^n)."""
    c = v_taylor(m, k, n, p)
    if c == 0:
        return AlgConst()
    e = k - m * p**n
    if isinstance(alpha, Point):
        return (alpha**e).value() * c
    return AlgConst.coerce(alpha) ** e * c
