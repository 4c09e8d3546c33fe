"""Homogeneous bivariate polynomials with exact coefficients.

An HPoly of degree n is the coefficient vector of sum_w c_w x^(n-w) y^w,
indexed by the y-exponent w.  Coefficients live in Q(i, sqrt2) (see
scalars.py), which is just enough to express the reflection-group
substitutions; almost all polynomials handled in practice are rational.

The module also holds the invariant-theory data for self-dual codes: the
Type I generators x^2+y^2 and delta, the Type II generators phi and xi,
the module generators psi_0..psi_3, and exact decomposition of invariants
onto those bases.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ClaimViolationError
from .scalars import Scalar, SCALAR_ONE, SCALAR_ZERO


class HPoly:
    """Dense homogeneous polynomial in x, y over Q(i, sqrt2)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        if coeffs is None:
            self.coeffs = tuple(SCALAR_ZERO for _ in range(degree + 1))
        else:
            coeffs = [Scalar.of(c) for c in coeffs]
            if len(coeffs) != degree + 1:
                raise ValueError("coefficient vector length must be degree+1")
            self.coeffs = tuple(coeffs)

    @staticmethod
    def monomial(degree: int, w: int, coeff=1) -> "HPoly":
        """coeff * x^(degree-w) y^w."""
        cs = [SCALAR_ZERO] * (degree + 1)
        cs[w] = Scalar.of(coeff)
        return HPoly(degree, cs)

    @staticmethod
    def from_pairs(degree: int, pairs) -> "HPoly":
        cs = [SCALAR_ZERO] * (degree + 1)
        for w, c in pairs:
            cs[w] = cs[w] + Scalar.of(c)
        return HPoly(degree, cs)

    def __getitem__(self, w: int) -> Scalar:
        return self.coeffs[w]

    def __eq__(self, other):
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        return HPoly(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot subtract homogeneous polynomials of different degree")
        return HPoly(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HPoly(self.degree, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HPoly):
            out = [SCALAR_ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return HPoly(self.degree + other.degree, out)
        c = Scalar.of(other)
        return HPoly(self.degree, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def scale(self, c) -> "HPoly":
        return self * c

    def pow(self, e: int) -> "HPoly":
        if e < 0:
            raise ValueError("negative power")
        result = HPoly(0, [SCALAR_ONE])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def y_valuation(self) -> int:
        """Smallest w with c_w != 0; degree+1 for the zero polynomial."""
        for w, c in enumerate(self.coeffs):
            if c:
                return w
        return self.degree + 1

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def __repr__(self):
        return f"HPoly({render(self)!r})"


# ---------------------------------------------------------------------------
# text form: "c * x^a y^b" terms joined by " + ", rationals rendered exactly
# ---------------------------------------------------------------------------

def render(p: HPoly) -> str:
    terms = []
    n = p.degree
    for w, c in enumerate(p.coeffs):
        if not c:
            continue
        cs = str(c.as_fraction()) if c.is_rational else repr(c)
        xs = f"x^{n - w}" if n - w else ""
        ys = f"y^{w}" if w else ""
        body = " ".join(t for t in (xs, ys) if t)
        terms.append(f"{cs} * {body}" if body else cs)
    return " + ".join(terms) if terms else "0"


def parse(text: str, degree: int | None = None) -> HPoly:
    """Parse the render() grammar back into an HPoly (rational coefficients)."""
    text = text.strip()
    pairs = []
    deg = degree
    if text != "0":
        for term in text.split("+"):
            term = term.strip()
            coeff = Fraction(1)
            if "*" in term:
                cs, _, body = term.partition("*")
                coeff = Fraction(cs.strip())
            else:
                body = term
                try:
                    coeff = Fraction(term)
                    body = ""
                except ValueError:
                    pass
            a = b = 0
            for factor in body.split():
                var, _, e = factor.partition("^")
                e = int(e) if e else 1
                if var == "x":
                    a = e
                elif var == "y":
                    b = e
                else:
                    raise ValueError(f"unknown variable {var!r}")
            d = a + b
            if deg is None:
                deg = d
            elif d != deg and body:
                raise ValueError("terms of unequal total degree")
            pairs.append((b, coeff))
    if deg is None:
        raise ValueError("cannot infer degree of constant polynomial; pass degree=")
    return HPoly.from_pairs(deg, pairs)


# ---------------------------------------------------------------------------
# substitution and the MacWilliams transform
# ---------------------------------------------------------------------------

def substitute(p: HPoly, m) -> HPoly:
    """p(a x + b y, c x + d y) for the 2x2 matrix m = ((a, b), (c, d))."""
    (a, b), (c, d) = m
    a, b, c, d = (Scalar.of(t) for t in (a, b, c, d))
    n = p.degree
    out = [SCALAR_ZERO] * (n + 1)
    # powers of (a x + b y) and (c x + d y) as coefficient rows
    top = [[SCALAR_ONE]]
    bot = [[SCALAR_ONE]]
    for k in range(1, n + 1):
        prev = top[-1]
        row = [SCALAR_ZERO] * (k + 1)
        for i, t in enumerate(prev):
            if t:
                row[i] = row[i] + t * a
                row[i + 1] = row[i + 1] + t * b
        top.append(row)
        prev = bot[-1]
        row = [SCALAR_ZERO] * (k + 1)
        for i, t in enumerate(prev):
            if t:
                row[i] = row[i] + t * c
                row[i + 1] = row[i + 1] + t * d
        bot.append(row)
    for w, cw in enumerate(p.coeffs):
        if not cw:
            continue
        tr, br = top[n - w], bot[w]
        for i, t in enumerate(tr):
            if not t:
                continue
            ct = cw * t
            for j, u in enumerate(br):
                if u:
                    out[i + j] = out[i + j] + ct * u
    return HPoly(n, out)


def macwilliams_transform(w_poly: HPoly, dual_size: int) -> HPoly:
    """(1/dual_size) * W(x+y, x-y)."""
    if dual_size <= 0:
        raise ValueError("dual_size must be positive")
    sub = substitute(w_poly, ((1, 1), (1, -1)))
    return sub * Fraction(1, dual_size)


# ---------------------------------------------------------------------------
# Gleason generators and the psi module generators
# ---------------------------------------------------------------------------

def _poly(degree, pairs):
    return HPoly.from_pairs(degree, pairs)

X2_PLUS_Y2 = _poly(2, [(0, 1), (2, 1)])
_X2_MINUS_Y2 = _poly(2, [(0, 1), (2, -1)])
_X4_MINUS_Y4 = _poly(4, [(0, 1), (4, -1)])
_X8_MINUS_Y8 = _poly(8, [(0, 1), (8, -1)])
_X8_34_Y8 = _poly(8, [(0, 1), (4, -34), (8, 1)])
_XY = _poly(2, [(1, 1)])

PHI = _poly(8, [(0, 1), (4, 14), (8, 1)])
XI = _poly(8, [(4, 1)]) * _X4_MINUS_Y4.pow(4)
DELTA_I = _poly(4, [(2, 1)]) * _X2_MINUS_Y2.pow(2)

PSI = {
    0: HPoly(0, [1]),
    1: _poly(6, [(3, 1)]) * _X4_MINUS_Y4.pow(2) * _X8_MINUS_Y8 * _X8_34_Y8,
    2: _poly(4, [(2, 1)]) * _X4_MINUS_Y4.pow(2),
    3: _XY * _X8_MINUS_Y8 * _X8_34_Y8,
}

# y-valuations of psi_0..psi_3; the cusp-like generator xi has valuation 4
PSI_Y_VALUATION = {0: 0, 1: 3, 2: 2, 3: 1}


def gleason_basis() -> dict:
    """The named generators: phi, xi, deltaI, x2y2 ring unit, psi_0..psi_3."""
    return {
        "phi": PHI,
        "xi": XI,
        "deltaI": DELTA_I,
        "x2_plus_y2": X2_PLUS_Y2,
        "psi": dict(PSI),
    }


# generators of the two substitution groups
G_I_GENERATORS = (
    ((1, 0), (0, -1)),
    ((Scalar.inv_sqrt2(), Scalar.inv_sqrt2()), (Scalar.inv_sqrt2(), -Scalar.inv_sqrt2())),
)
G_II_GENERATORS = (
    ((1, 0), (0, Scalar.i())),
    ((Scalar.inv_sqrt2(), Scalar.inv_sqrt2()), (Scalar.inv_sqrt2(), -Scalar.inv_sqrt2())),
)


def invariance_report(p: HPoly, group: str) -> bool:
    """True iff p is fixed by both generators of 'G_I' or 'G_II'."""
    gens = {"G_I": G_I_GENERATORS, "G_II": G_II_GENERATORS}[group]
    return all(substitute(p, g) == p for g in gens)


# ---------------------------------------------------------------------------
# decompositions onto the invariant bases
# ---------------------------------------------------------------------------

def decompose_type_ii(w_poly: HPoly, check_invariance: bool = True) -> list:
    """Coefficients a_k with W = sum_k a_k phi^(m-3k) xi^k, m = deg/8.

    Matches coefficients at y^(4k) in increasing k; the cusp-like xi has
    y-valuation 4, so each step is forced.  A nonzero residual means the
    input is outside C[phi, xi].
    """
    n = w_poly.degree
    if n % 8:
        raise ValueError("Type II invariants have degree divisible by 8")
    if check_invariance and not invariance_report(w_poly, "G_II"):
        raise ClaimViolationError("polynomial is not G_II-invariant")
    m = n // 8
    residual = w_poly
    out = []
    for k in range(m // 3 + 1):
        a_k = residual[4 * k]
        out.append(a_k)
        if a_k:
            residual = residual - (PHI.pow(m - 3 * k) * XI.pow(k)) * a_k
    if residual:
        raise ClaimViolationError("nonzero residual: not in the invariant ring C[phi, xi]")
    return out


def recompose_type_ii(n: int, coeffs) -> HPoly:
    m = n // 8
    acc = HPoly(n)
    for k, a_k in enumerate(coeffs):
        acc = acc + (PHI.pow(m - 3 * k) * XI.pow(k)) * Scalar.of(a_k)
    return acc


def decompose_type_i(w_poly: HPoly, check_invariance: bool = True) -> list:
    """Coefficients b_k with W = sum_k b_k (x^2+y^2)^((n-8k)/2) deltaI^k."""
    n = w_poly.degree
    if n % 2:
        raise ValueError("Type I invariants have even degree")
    if check_invariance and not invariance_report(w_poly, "G_I"):
        raise ClaimViolationError("polynomial is not G_I-invariant")
    residual = w_poly
    out = []
    for k in range(n // 8 + 1):
        b_k = residual[2 * k]
        out.append(b_k)
        if b_k:
            residual = residual - (X2_PLUS_Y2.pow((n - 8 * k) // 2) * DELTA_I.pow(k)) * b_k
    if residual:
        raise ClaimViolationError("nonzero residual: not in the invariant ring C[x^2+y^2, delta]")
    return out


def recompose_type_i(n: int, coeffs) -> HPoly:
    acc = HPoly(n)
    for k, b_k in enumerate(coeffs):
        acc = acc + (X2_PLUS_Y2.pow((n - 8 * k) // 2) * DELTA_I.pow(k)) * Scalar.of(b_k)
    return acc


def divide_exact(p: HPoly, q: HPoly) -> HPoly:
    """Exact quotient p/q of homogeneous polynomials; raises if not divisible.

    Works on the dehomogenized forms in t = y/x, anchoring at the lowest
    y-exponent of q.
    """
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    v = q.y_valuation()
    if p.degree < q.degree:
        raise ClaimViolationError("degree of divisor exceeds degree of dividend")
    rdeg = p.degree - q.degree
    rem = list(p.coeffs)
    out = [SCALAR_ZERO] * (rdeg + 1)
    lead = q.coeffs[v]
    for w in range(rdeg + 1):
        c = rem[v + w]
        if not c:
            continue
        if w > rdeg:
            raise ClaimViolationError("polynomial division leaves a remainder")
        f = c / lead
        out[w] = f
        for j, qc in enumerate(q.coeffs):
            if qc:
                rem[j + w] = rem[j + w] - f * qc
    if any(rem):
        raise ClaimViolationError("polynomial division leaves a remainder")
    return HPoly(rdeg, out)
