"""Zonal harmonic polynomials: fast two-parameter evaluation.

For a reference word cbar of weight wc, the building blocks Q_{d,k} sum the
multilinear monomials with exactly k indices inside the support of cbar and
d-k outside.  Their value at v depends only on wv = wt(v) and
wj = wt(v & cbar); both factors of the closed form carry an alternating
sign (the sign on the second factor is pinned against the subset-summation
oracle in the tests, which is authoritative).

The one-dimensional space of degree-d harmonics invariant under coordinate
permutations fixing cbar is spanned by

    Z_d = sum_k kvec[k] Q_{d,k},   kvec[0] = 1,
    kvec[k+1] = -((n - wc) - (d - k - 1)) / (wc - k) * kvec[k].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import ResourceLimitError
from .gf2 import Word
from .discharm import DiscretePoly


def _check_args(n, wc, d, k, wv, wj):
    if not (0 <= k <= d <= wc <= n):
        raise ValueError("need 0 <= k <= d <= wc <= n")
    if not (0 <= wj <= min(wv, wc)):
        raise ValueError("need wj <= min(wv, wc)")
    if wv - wj > n - wc:
        raise ValueError("need wv - wj <= n - wc")


def qdk(n: int, wc: int, d: int, k: int, wv: int, wj: int) -> int:
    """Q_{d,k} evaluated at any v with wt(v) = wv, wt(v & cbar) = wj."""
    _check_args(n, wc, d, k, wv, wj)
    inner = sum((-1) ** i * comb(wj, i) * comb(wc - wj, k - i)
                for i in range(k + 1))
    wz = wv - wj  # ones of v outside the support of cbar
    outer = sum((-1) ** i * comb(wz, i) * comb((n - wc) - wz, d - k - i)
                for i in range(d - k + 1))
    return inner * outer


def qdk_bruteforce(cfixed: Word, d: int, k: int, v: Word) -> int:
    """Direct subset summation of the defining expression (test oracle).

    Sums (-1)^(v_{j_1} + ... + v_{j_d}) over all k-subsets of the support of
    cfixed and (d-k)-subsets of its complement.  Exponential; n <= 16.
    """
    if cfixed.n != v.n:
        raise ValueError("length mismatch")
    if cfixed.n > 16:
        raise ResourceLimitError("brute-force zonal sum limited to n <= 16")
    ones = cfixed.support()
    zeros = [j for j in range(cfixed.n) if j not in set(ones)]
    total = 0
    vb = v.bits
    for a in combinations(ones, k):
        abits = sum(1 << j for j in a)
        sa = (abits & vb).bit_count()
        for b in combinations(zeros, d - k):
            parity = (sa + sum((vb >> j) & 1 for j in b)) & 1
            total += -1 if parity else 1
    return total


class ZonalHarmonic:
    """Z_d for a reference weight wc, stored as the coefficient vector kvec."""

    __slots__ = ("n", "wc", "d", "kvec")

    def __init__(self, n: int, wc: int, d: int):
        if not 0 <= d <= wc <= n:
            raise ValueError("need 0 <= d <= wc <= n")
        self.n = n
        self.wc = wc
        self.d = d
        kvec = [Fraction(1)]
        for k in range(d):
            num = (n - wc) - (d - k - 1)
            kvec.append(Fraction(-num, wc - k) * kvec[k])
        self.kvec = tuple(kvec)

    def kvec_closed_form(self) -> tuple:
        """(-1)^k prod_{l<k} ((n-wc)-(d-l-1))/(wc-l); must equal the recurrence."""
        out = []
        for k in range(self.d + 1):
            prod = Fraction(1)
            for l in range(k):
                prod *= Fraction((self.n - self.wc) - (self.d - l - 1), self.wc - l)
            out.append((-1) ** k * prod)
        return tuple(out)

    def evaluate(self, wv: int, wj: int) -> Fraction:
        total = Fraction(0)
        for k, c in enumerate(self.kvec):
            if c:
                total += c * qdk(self.n, self.wc, self.d, k, wv, wj)
        return total

    def evaluate_word(self, v: Word, cfixed: Word) -> Fraction:
        if cfixed.weight() != self.wc:
            raise ValueError("reference word weight mismatch")
        return self.evaluate(v.weight(), v.intersection_weight(cfixed))

    def __repr__(self):
        return f"ZonalHarmonic(n={self.n}, wc={self.wc}, d={self.d})"


def zonal_evaluate(n: int, wc: int, d: int, wv: int, wj: int) -> Fraction:
    return ZonalHarmonic(n, wc, d).evaluate(wv, wj)


@lru_cache(maxsize=256)
def _zonal_cached(n: int, wc: int, d: int) -> ZonalHarmonic:
    return ZonalHarmonic(n, wc, d)


def zonal_values_row(n: int, wc: int, d: int, wv: int, j_range) -> list:
    z = _zonal_cached(n, wc, d)
    return [z.evaluate(wv, j) for j in j_range]


def zonal_as_discrete_poly(z: ZonalHarmonic, cfixed: Word) -> DiscretePoly:
    """Explicit multilinear expansion of Z_d relative to cfixed (n <= 16)."""
    if cfixed.n != z.n:
        raise ValueError("length mismatch")
    if cfixed.weight() != z.wc:
        raise ValueError("reference word weight mismatch")
    if z.n > 16:
        raise ResourceLimitError("expansion limited to n <= 16")
    ones = cfixed.support()
    zeros = [j for j in range(z.n) if j not in set(ones)]
    terms = {}
    for k, c in enumerate(z.kvec):
        if not c:
            continue
        for a in combinations(ones, k):
            abits = sum(1 << j for j in a)
            for b in combinations(zeros, z.d - k):
                mask = abits | sum(1 << j for j in b)
                s = terms.get(mask, 0) + c
                if s:
                    terms[mask] = s
                else:
                    terms.pop(mask, None)
    return DiscretePoly(z.n, z.d, terms)
