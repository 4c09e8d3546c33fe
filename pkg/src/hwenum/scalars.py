"""Exact arithmetic in the ring Q(i, sqrt2).

Every matrix entry used by the invariant-theory substitutions lives here:
the Gaussian unit i, the normalization 1/sqrt(2), and the eighth root of
unity (1+i)/sqrt(2).  A scalar is stored as a + b*sqrt2 where a and b are
Gaussian rationals, i.e. four Fractions in total.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Scalar:
    """Element (ra + ia*i) + (rb + ib*i)*sqrt2 with exact rational parts."""

    __slots__ = ("ra", "ia", "rb", "ib", "_hash")

    def __init__(self, ra=0, ia=0, rb=0, ib=0):
        self.ra = _frac(ra)
        self.ia = _frac(ia)
        self.rb = _frac(rb)
        self.ib = _frac(ib)
        self._hash = None

    @staticmethod
    def of(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(_frac(x))

    @staticmethod
    def i() -> "Scalar":
        return Scalar(0, 1)

    @staticmethod
    def sqrt2() -> "Scalar":
        return Scalar(0, 0, 1)

    @staticmethod
    def inv_sqrt2() -> "Scalar":
        # 1/sqrt2 = sqrt2/2
        return Scalar(0, 0, Fraction(1, 2))

    @staticmethod
    def zeta8() -> "Scalar":
        # e^{i pi/4} = (1+i)/sqrt2 = (sqrt2/2)(1+i)
        return Scalar(0, 0, Fraction(1, 2), Fraction(1, 2))

    def __add__(self, other):
        o = Scalar.of(other)
        return Scalar(self.ra + o.ra, self.ia + o.ia, self.rb + o.rb, self.ib + o.ib)

    __radd__ = __add__

    def __sub__(self, other):
        o = Scalar.of(other)
        return Scalar(self.ra - o.ra, self.ia - o.ia, self.rb - o.rb, self.ib - o.ib)

    def __rsub__(self, other):
        return Scalar.of(other).__sub__(self)

    def __neg__(self):
        return Scalar(-self.ra, -self.ia, -self.rb, -self.ib)

    def __mul__(self, other):
        o = Scalar.of(other)
        # (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s,
        # with Gaussian products inside (s = sqrt2).
        ra = (self.ra * o.ra - self.ia * o.ia) + 2 * (self.rb * o.rb - self.ib * o.ib)
        ia = (self.ra * o.ia + self.ia * o.ra) + 2 * (self.rb * o.ib + self.ib * o.rb)
        rb = (self.ra * o.rb - self.ia * o.ib) + (self.rb * o.ra - self.ib * o.ia)
        ib = (self.ra * o.ib + self.ia * o.rb) + (self.rb * o.ia + self.ib * o.ra)
        return Scalar(ra, ia, rb, ib)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("scalar inverse of zero")
        # 1/(x + y s) = (x - y s)/(x^2 - 2 y^2) with x, y Gaussian.
        gr = (self.ra * self.ra - self.ia * self.ia) - 2 * (self.rb * self.rb - self.ib * self.ib)
        gi = 2 * self.ra * self.ia - 4 * self.rb * self.ib
        nrm = gr * gr + gi * gi
        # multiply conjugate-over-sqrt2 by conjugate-over-i of g, divide by |g|^2
        c = Scalar(self.ra, self.ia, -self.rb, -self.ib) * Scalar(gr / nrm, -gi / nrm)
        return c

    def __truediv__(self, other):
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.ra == other.ra and self.ia == other.ia
                and self.rb == other.rb and self.ib == other.ib)

    def __hash__(self):
        if self._hash is None:
            if self.ia == 0 and self.rb == 0 and self.ib == 0:
                self._hash = hash(self.ra)
            else:
                self._hash = hash((self.ra, self.ia, self.rb, self.ib))
        return self._hash

    def __bool__(self):
        return bool(self.ra or self.ia or self.rb or self.ib)

    @property
    def is_rational(self) -> bool:
        return self.ia == 0 and self.rb == 0 and self.ib == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"scalar {self!r} is not rational")
        return self.ra

    def __repr__(self):
        if self.is_rational:
            return str(self.ra)
        parts = []
        if self.ra:
            parts.append(str(self.ra))
        if self.ia:
            parts.append(f"{self.ia}*i")
        if self.rb:
            parts.append(f"{self.rb}*sqrt2")
        if self.ib:
            parts.append(f"{self.ib}*i*sqrt2")
        return "(" + " + ".join(parts) + ")" if parts else "0"


SCALAR_ZERO = Scalar()
SCALAR_ONE = Scalar(1)
