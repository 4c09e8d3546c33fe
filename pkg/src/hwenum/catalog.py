"""Named code constructions.

Every entry is built programmatically from its defining recipe and verified
by the test suite (self-duality, type, weight distribution, minimal weight):

  e8    extended Hamming [8,4,4]: affine-linear functions on F_2^3
  e7    dual Hamming / simplex [7,3,4]: linear functionals on F_2^3
  d4..  d_{2k}: doubly even words with paired coordinates, dimension k-1
  g24   extended binary Golay [24,12,8], via quadratic residues mod 23
  qr48  extended quadratic-residue code [48,24,12], residues mod 47
  rm25  Reed-Muller RM(2,5) [32,16,8]

The quadratic-residue recipe spans the cyclic shifts of the residue
indicator vector and appends an overall parity coordinate; for p = 23 and
p = 47 this yields the self-dual doubly even codes above (the p = 23 case
is the Golay code, pinned by its weight distribution in the tests).
"""

from __future__ import annotations

from .gf2 import LinearCode, Word, rref


def extended_hamming_e8() -> LinearCode:
    rows = []
    for f in range(4):  # f = 0: constant 1; f = 1..3: coordinate functionals
        bits = 0
        for p in range(8):
            val = 1 if f == 0 else (p >> (f - 1)) & 1
            bits |= val << p
        rows.append(bits)
    return LinearCode(8, rows)


def simplex_e7() -> LinearCode:
    rows = []
    for f in range(3):
        bits = 0
        for p in range(1, 8):  # columns = nonzero points of F_2^3
            bits |= ((p >> f) & 1) << (p - 1)
        rows.append(bits)
    return LinearCode(7, rows)


def d_code(length: int) -> LinearCode:
    """d_{2k}: paired coordinates, doubly even; generated by adjacent pair-pairs."""
    if length % 2 or length < 4:
        raise ValueError("d_{2k} needs even length >= 4")
    k = length // 2
    pair = lambda i: 0b11 << (2 * i)
    return LinearCode(length, [pair(i) | pair(i + 1) for i in range(k - 1)])


def quadratic_residue_extended(p: int) -> LinearCode:
    """Extended QR code of length p+1 for a prime p = 8m - 1."""
    residues = {(i * i) % p for i in range(1, p)}
    rows = []
    for s in range(p):
        bits = 0
        for q in residues:
            bits |= 1 << ((q + s) % p)
        rows.append(bits)
    reduced = rref(rows, p)
    ext = [b | ((b.bit_count() & 1) << p) for b in reduced]
    return LinearCode(p + 1, ext)


def golay_g24() -> LinearCode:
    return quadratic_residue_extended(23)


def qr48() -> LinearCode:
    return quadratic_residue_extended(47)


def reed_muller_rm25() -> LinearCode:
    """RM(2,5): evaluations of degree-<=2 monomials in 5 variables on F_2^5."""
    m = 5
    points = range(1 << m)
    rows = [sum(1 << p for p in points)]  # constant
    for i in range(m):
        rows.append(sum(((p >> i) & 1) << p for p in points))
    for i in range(m):
        for j in range(i + 1, m):
            rows.append(sum((((p >> i) & (p >> j)) & 1) << p for p in points))
    return LinearCode(1 << m, rows)


def zero_code(n: int) -> LinearCode:
    return LinearCode(n, [])


def repetition_pair() -> LinearCode:
    """The length-2 Type I code {00, 11}."""
    return LinearCode(2, [0b11])


_FIXED = {
    "e8": extended_hamming_e8,
    "e7": simplex_e7,
    "g24": golay_g24,
    "qr48": qr48,
    "rm25": reed_muller_rm25,
}


def catalog(name: str) -> LinearCode:
    """Look up a named code; d_{2k} codes are spelled 'd4', 'd6', ..., 'd128'."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    if key.startswith("d") and key[1:].isdigit():
        return d_code(int(key[1:]))
    raise ValueError(f"unknown catalog code {name!r}")


def catalog_names() -> list:
    return sorted(_FIXED) + ["d<2k> (e.g. d4, d16, d24)"]
