"""Multilinear polynomials in the variables (-1)^{v_j} and the ladder calculus.

A DiscretePoly is a sparse map from coordinate subsets (bitmasks) to exact
rationals; all keys share one degree d = |S|.  The three ladder operators
act by index deletion (raise_op... no: lowering to degree d-1), index
insertion (degree d+1), and scaling by n - 2d:

    apply_x: m_S -> sum over j in S of m_{S minus j}      (degree d-1)
    apply_y: m_S -> sum over j not in S of m_{S plus j}   (degree d+1)
    apply_h: m_S -> (n - 2d) m_S

Harmonic polynomials are ker(apply_x).  The decomposition of a degree-d
polynomial into harmonic layers q = sum_k apply_y^k p_k follows the usual
highest-weight recursion and needs no linear algebra; an exact nullspace
routine provides explicit harmonic bases for small slices.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .errors import ResourceLimitError
from .gf2 import Word


class DiscretePoly:
    """Sparse homogeneous multilinear polynomial on F_2^n."""

    __slots__ = ("n", "d", "terms")

    def __init__(self, n: int, d: int, terms=None):
        if not 0 <= d <= n:
            raise ValueError("degree must satisfy 0 <= d <= n")
        self.n = n
        self.d = d
        clean = {}
        for mask, c in (terms or {}).items():
            if mask >> n:
                raise ValueError("monomial outside ambient length")
            if mask.bit_count() != d:
                raise ValueError("mixed-degree terms in homogeneous polynomial")
            if c:
                clean[mask] = c
        self.terms = clean

    @staticmethod
    def monomial(n: int, support, coeff=1) -> "DiscretePoly":
        mask = support if isinstance(support, int) else sum(1 << j for j in support)
        return DiscretePoly(n, mask.bit_count(), {mask: coeff})

    @staticmethod
    def constant(n: int, value=1) -> "DiscretePoly":
        return DiscretePoly(n, 0, {0: value} if value else {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DiscretePoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms and (
            self.is_zero() or other.is_zero() or self.d == other.d)

    def __hash__(self):
        return hash((self.n, self.d, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("ambient length mismatch")
        if not self.is_zero() and not other.is_zero() and self.d != other.d:
            raise ValueError("cannot add different degrees; use a decomposition family")
        out = dict(self.terms)
        for mask, c in other.terms.items():
            s = out.get(mask, 0) + c
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        return DiscretePoly(self.n, self.d if not self.is_zero() else other.d, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DiscretePoly(self.n, self.d, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "DiscretePoly":
        if not c:
            return DiscretePoly(self.n, self.d, {})
        return DiscretePoly(self.n, self.d, {m: v * c for m, v in self.terms.items()})

    def evaluate(self, word) -> Fraction:
        bits = word.bits if isinstance(word, Word) else int(word)
        if isinstance(word, Word) and word.n != self.n:
            raise ValueError("length mismatch")
        total = 0
        for mask, c in self.terms.items():
            total = total - c if (mask & bits).bit_count() & 1 else total + c
        return total

    def evaluate_many(self, words: np.ndarray) -> np.ndarray:
        """Signs-and-sums over a uint64 word array (integer coefficients only)."""
        vals = np.zeros(len(words), dtype=np.int64)
        for mask, c in self.terms.items():
            ci = int(c)
            if ci != c:
                raise ValueError("evaluate_many needs integer coefficients")
            par = np.bitwise_count(words & np.uint64(mask)) & 1
            vals += np.where(par, -ci, ci)
        return vals

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms):
            idx = ",".join(str(j) for j in range(self.n) if (mask >> j) & 1)
            parts.append(f"{self.terms[mask]} * m({idx})")
        return " + ".join(parts)

    def __repr__(self):
        return f"DiscretePoly(n={self.n}, d={self.d}, {self.render()})"


# ---------------------------------------------------------------------------
# ladder operators
# ---------------------------------------------------------------------------

def apply_x(q: DiscretePoly) -> DiscretePoly:
    out = {}
    for mask, c in q.terms.items():
        m = mask
        while m:
            low = m & -m
            key = mask ^ low
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
            m ^= low
    return DiscretePoly(q.n, max(q.d - 1, 0), out)


def apply_y(q: DiscretePoly) -> DiscretePoly:
    out = {}
    full = (1 << q.n) - 1
    for mask, c in q.terms.items():
        m = full ^ mask
        while m:
            low = m & -m
            key = mask | low
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
            m ^= low
    return DiscretePoly(q.n, min(q.d + 1, q.n), out)


def apply_h(q: DiscretePoly) -> DiscretePoly:
    return q.scale(q.n - 2 * q.d)


def harmonic_dimension(n: int, d: int) -> int:
    if d > n // 2:
        return 0
    return comb(n, d) - comb(n, d - 1) if d else 1


# ---------------------------------------------------------------------------
# matrix forms and commutator verification (small n)
# ---------------------------------------------------------------------------

def _slice_masks(n: int, d: int) -> list:
    return [sum(1 << j for j in c) for c in combinations(range(n), d)]


def operator_matrix(n: int, d: int, op, out_d: int) -> np.ndarray:
    """Matrix of op: D_d -> D_{out_d}, columns/rows indexed colex by mask."""
    src = _slice_masks(n, d)
    dst = _slice_masks(n, out_d)
    index = {m: i for i, m in enumerate(dst)}
    mat = np.zeros((len(dst), len(src)), dtype=np.int64)
    for j, mask in enumerate(src):
        img = op(DiscretePoly(n, d, {mask: 1}))
        for m, c in img.terms.items():
            mat[index[m], j] = int(c)
    return mat


def commutator_checks(n: int, d: int) -> bool:
    """[X,Y] = H, [H,X] = 2X, [H,Y] = -2Y as exact matrices on the d-slice."""
    if n > 12:
        raise ResourceLimitError("full-matrix commutator check limited to n <= 12")
    dim = comb(n, d)
    x_d = operator_matrix(n, d, apply_x, d - 1) if d >= 1 else np.zeros((1, dim), dtype=np.int64)
    y_d = operator_matrix(n, d, apply_y, d + 1) if d < n else np.zeros((1, dim), dtype=np.int64)
    h_d = operator_matrix(n, d, apply_h, d)
    # [X,Y] on D_d: X_{d+1} Y_d - Y_{d-1} X_d = H_d
    lhs = np.zeros_like(h_d)
    if d < n:
        lhs = lhs + operator_matrix(n, d + 1, apply_x, d) @ y_d
    if d >= 1:
        lhs = lhs - operator_matrix(n, d - 1, apply_y, d) @ x_d
    ok = np.array_equal(lhs, h_d)
    # [H,X] = 2X on D_d (image in D_{d-1})
    if d >= 1:
        h_down = operator_matrix(n, d - 1, apply_h, d - 1)
        ok &= np.array_equal(h_down @ x_d - x_d @ h_d, 2 * x_d)
    # [H,Y] = -2Y on D_d (image in D_{d+1})
    if d < n:
        h_up = operator_matrix(n, d + 1, apply_h, d + 1)
        ok &= np.array_equal(h_up @ y_d - y_d @ h_d, -2 * y_d)
    return bool(ok)


# ---------------------------------------------------------------------------
# harmonic bases by exact nullspace
# ---------------------------------------------------------------------------

def harmonic_basis(n: int, d: int, budget: int = 6000) -> list:
    """Basis of ker(apply_x) on the degree-d slice, by exact elimination.

    Columns are ordered colex on subset masks; the basis is the standard
    free-column parametrization of the nullspace, so it is deterministic.
    Returns [] for d > n/2 (the kernel is trivially zero there).
    """
    if d > n // 2:
        return []
    if d == 0:
        return [DiscretePoly.constant(n, 1)]
    cols = _slice_masks(n, d)
    rows = _slice_masks(n, d - 1)
    if len(cols) > budget:
        raise ResourceLimitError(
            f"nullspace slice has {len(cols)} columns (budget {budget})")
    col_index = {m: i for i, m in enumerate(cols)}
    # build rows of the X matrix as dicts col -> 1
    row_entries = {m: [] for m in rows}
    for ci, mask in enumerate(cols):
        m = mask
        while m:
            low = m & -m
            row_entries[mask ^ low].append(ci)
            m ^= low
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for ri, m in enumerate(rows):
        for ci in row_entries[m]:
            mat[ri][ci] = Fraction(1)
    # exact Gauss-Jordan
    pivots = []
    r = 0
    for c in range(len(cols)):
        pr = next((i for i in range(r, len(rows)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        if pv != 1:
            mat[r] = [x / pv for x in mat[r]]
        for i in range(len(rows)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(len(cols)):
        if free in pivot_set:
            continue
        terms = {cols[free]: Fraction(1)}
        for ri, pc in enumerate(pivots):
            if mat[ri][free]:
                terms[cols[pc]] = -mat[ri][free]
        basis.append(DiscretePoly(n, d, terms))
    return basis


# ---------------------------------------------------------------------------
# decomposition into harmonic layers
# ---------------------------------------------------------------------------

def decompose(q: DiscretePoly) -> list:
    """Components [p_0, ..., p_d] with q = sum_k apply_y^k p_k, p_k harmonic.

    Uses the ladder recursion: if apply_x(q) = sum_j apply_y^j r_j then
    p_k = r_{k-1} / (k (n - 2d + k + 1)) for k >= 1 and p_0 is the exact
    remainder.  Requires d <= n/2 so the denominators stay positive.
    """
    n, d = q.n, q.d
    if d > n // 2:
        raise ValueError("decomposition requires degree <= n/2")
    if d == 0:
        return [q]
    lower = decompose(apply_x(q))
    comps = [None] * (d + 1)
    rebuilt = DiscretePoly(n, d, {})
    for k in range(1, d + 1):
        r = lower[k - 1]
        denom = k * (n - 2 * d + k + 1)
        p_k = r.scale(Fraction(1, denom))
        comps[k] = p_k
        lifted = p_k
        for _ in range(k):
            lifted = apply_y(lifted)
        rebuilt = rebuilt + lifted
    comps[0] = q - rebuilt
    return comps


def harmonic_projection(q: DiscretePoly) -> DiscretePoly:
    """The degree-d harmonic layer p_0 of q."""
    return decompose(q)[0]


def x_preimage(n: int, t_mask: int) -> DiscretePoly:
    """An explicit q of degree d with apply_x(q) = m_T, for |T| = d-1 < n/2.

    Ansatz q = sum over |S| = d of alpha(|S & T|) m_S.  Collecting the
    image coefficient of m_{T'} with i = |T' & T| gives the triangular
    system (d-1-i) alpha(i+1) + (n-2d+2+i) alpha(i) = [i == d-1], whose
    denominators are positive whenever d <= n/2.  Applying apply_x to the
    result therefore certifies surjectivity of the lowering operator onto
    the degree-(d-1) slice, one monomial orbit at a time.
    """
    dm1 = t_mask.bit_count()
    d = dm1 + 1
    if d > n // 2:
        raise ValueError("preimage ansatz needs d <= n/2")
    alpha = [Fraction(0)] * (d + 1)
    alpha[d - 1] = Fraction(1, n - d + 1)
    for i in range(d - 2, -1, -1):
        alpha[i] = -Fraction(d - 1 - i, n - 2 * d + 2 + i) * alpha[i + 1]
    terms = {}
    for combo in combinations(range(n), d):
        mask = sum(1 << j for j in combo)
        a = alpha[(mask & t_mask).bit_count()]
        if a:
            terms[mask] = a
    return DiscretePoly(n, d, terms)


def random_harmonic(n: int, d: int, rng: random.Random, terms: int = 12,
                    integral: bool = True) -> DiscretePoly:
    """A pseudorandom nonzero element of ker(apply_x) via projection."""
    while True:
        raw = {}
        for _ in range(terms):
            mask = sum(1 << j for j in rng.sample(range(n), d))
            raw[mask] = raw.get(mask, 0) + rng.randint(-9, 9)
        q = DiscretePoly(n, d, raw)
        if q.is_zero():
            continue
        p = harmonic_projection(q)
        if p.is_zero():
            continue
        if integral:
            denom = 1
            for c in p.terms.values():
                denom = denom * Fraction(c).denominator // _gcd(denom, Fraction(c).denominator)
            p = p.scale(denom)
        return p


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
