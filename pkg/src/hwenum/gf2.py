"""Binary words, linear codes, and codeword enumeration.

Words are bit-packed ints (coordinate j <-> bit j) wrapped in a small value
type; codes carry a row-reduced generator matrix, so code equality is just
RREF equality.  Enumeration walks the message space in binary-reflected
Gray-code order (one generator XOR per step); for large codes an equivalent
meet-in-the-middle path over numpy uint64 arrays produces the same counts
in milliseconds.  Length is capped at 128; the numpy fast paths require
n <= 63 (every code in the catalog satisfies this; longer codes fall back
to the pure-Python walk).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import ResourceLimitError

MAX_LENGTH = 128
ENUM_BUDGET_LOG2 = 28
_FAST_K = 16  # message sizes above this use the meet-in-the-middle path


class Word:
    """Immutable fixed-length bit vector over GF(2)."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if not 0 < n <= MAX_LENGTH:
            raise ValueError(f"word length must be in 1..{MAX_LENGTH}")
        if bits >> n:
            raise ValueError("bits outside word length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *_):
        raise AttributeError("Word is immutable")

    @staticmethod
    def from_string(s: str) -> "Word":
        s = s.strip()
        bits = 0
        for j, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise ValueError(f"invalid word character {ch!r}")
        return Word(len(s), bits)

    @staticmethod
    def from_support(n: int, support) -> "Word":
        bits = 0
        for j in support:
            if not 0 <= j < n:
                raise ValueError("support index out of range")
            bits |= 1 << j
        return Word(n, bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return Word(self.n, self.bits ^ other.bits)

    def __and__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return Word(self.n, self.bits & other.bits)

    def intersection_weight(self, other: "Word") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count()

    def support(self) -> tuple:
        return tuple(j for j in range(self.n) if (self.bits >> j) & 1)

    def complement(self) -> "Word":
        return Word(self.n, ~self.bits & ((1 << self.n) - 1))

    def __eq__(self, other):
        return isinstance(other, Word) and self.n == other.n and self.bits == other.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def __str__(self):
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.n))

    def __repr__(self):
        return f"Word({self})"


def wt(bits: int) -> int:
    return bits.bit_count()


# ---------------------------------------------------------------------------
# GF(2) row reduction on int-packed rows
# ---------------------------------------------------------------------------

def rref(rows, n: int) -> tuple:
    """Reduced row echelon form with pivots on the lowest-index columns.

    Returns the nonzero rows sorted by pivot column.  Column j is bit j.
    """
    basis = {}  # pivot column -> row
    for r in rows:
        cur = r
        while cur:
            p = (cur & -cur).bit_length() - 1
            if p in basis:
                cur ^= basis[p]
            else:
                basis[p] = cur
                break
    # back-substitute so each pivot column appears in exactly one row
    for p in sorted(basis, reverse=True):
        for q in basis:
            if q != p and (basis[q] >> p) & 1:
                basis[q] ^= basis[p]
    return tuple(basis[p] for p in sorted(basis))


class RowReducer:
    """Incremental GF(2) row reduction for streaming rank/span computation."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots = {}

    def add(self, row: int) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        cur = row
        while cur:
            p = (cur & -cur).bit_length() - 1
            if p in self.pivots:
                cur ^= self.pivots[p]
            else:
                self.pivots[p] = cur
                return True
        return False

    def contains(self, row: int) -> bool:
        cur = row
        while cur:
            p = (cur & -cur).bit_length() - 1
            if p not in self.pivots:
                return False
            cur ^= self.pivots[p]
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> tuple:
        return tuple(self.pivots[p] for p in sorted(self.pivots))


class LinearCode:
    """Binary linear code held as a row-reduced generator matrix."""

    __slots__ = ("n", "generators", "_dual")

    def __init__(self, n: int, generators):
        if not 0 < n <= MAX_LENGTH:
            raise ValueError(f"code length must be in 1..{MAX_LENGTH}")
        gens = []
        for g in generators:
            if isinstance(g, Word):
                if g.n != n:
                    raise ValueError("generator length mismatch")
                gens.append(g.bits)
            else:
                g = int(g)
                if g >> n:
                    raise ValueError("generator outside code length")
                gens.append(g)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", rref(gens, n))
        object.__setattr__(self, "_dual", None)

    def __setattr__(self, *_):
        raise AttributeError("LinearCode is immutable")

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.k

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.n == other.n
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.n, self.generators))

    def __contains__(self, word) -> bool:
        bits = word.bits if isinstance(word, Word) else int(word)
        red = RowReducer()
        for g in self.generators:
            red.add(g)
        return red.contains(bits)

    def words(self) -> list:
        return [Word(self.n, b) for b in gray_codewords(self)]

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k})"


def dual(code: LinearCode) -> LinearCode:
    """The annihilator code under the mod-2 dot product."""
    if code._dual is not None:
        return code._dual
    n, k = code.n, code.k
    pivots = [(g & -g).bit_length() - 1 for g in code.generators]
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    gens = []
    for f in free:
        v = 1 << f
        for p, g in zip(pivots, code.generators):
            if (g >> f) & 1:
                v |= 1 << p
        gens.append(v)
    d = LinearCode(n, gens)
    object.__setattr__(code, "_dual", d)
    object.__setattr__(d, "_dual", code)
    return d


def is_self_dual(code: LinearCode) -> bool:
    return 2 * code.k == code.n and dual(code) == code


def classify_type(code: LinearCode) -> str:
    """'notSelfDual', 'TypeI' (singly even), or 'TypeII' (doubly even)."""
    if not is_self_dual(code):
        return "notSelfDual"
    if all(g.bit_count() % 4 == 0 for g in code.generators):
        return "TypeII"
    return "TypeI"


def is_doubly_even(code: LinearCode) -> bool:
    """All codeword weights divisible by 4 (needs pairwise even overlaps)."""
    gens = code.generators
    if any(g.bit_count() % 4 for g in gens):
        return False
    return all((gens[i] & gens[j]).bit_count() % 2 == 0
               for i in range(len(gens)) for j in range(i + 1, len(gens)))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _check_budget(code: LinearCode):
    if code.k > ENUM_BUDGET_LOG2:
        raise ResourceLimitError(
            f"enumeration of 2^{code.k} codewords exceeds the 2^{ENUM_BUDGET_LOG2} budget")


def gray_codewords(code: LinearCode):
    """Yield all codewords (as ints) by Gray-code walk over the message space."""
    _check_budget(code)
    gens = code.generators
    word = 0
    yield word
    for i in range(1, 1 << len(gens)):
        word ^= gens[(i & -i).bit_length() - 1]
        yield word


def _split_span(code: LinearCode) -> tuple:
    """Two numpy uint64 arrays whose XOR grid is exactly the code."""
    gens = code.generators
    ka = len(gens) // 2
    def span(gs):
        ws = [0]
        for g in gs:
            ws.extend(w ^ g for w in ws[:])
        return np.array(ws, dtype=np.uint64)
    return span(gens[:ka]), span(gens[ka:])


def _pair_chunks(a_len: int, chunk: int = 512):
    for i in range(0, a_len, chunk):
        yield i, min(i + chunk, a_len)


def weight_distribution(code: LinearCode) -> list:
    """A_w for w = 0..n, by exact enumeration of all 2^k codewords."""
    _check_budget(code)
    n = code.n
    if code.k > _FAST_K and n <= 63:
        a, b = _split_span(code)
        counts = np.zeros(n + 1, dtype=np.int64)
        for lo, hi in _pair_chunks(len(a)):
            w = np.bitwise_count(a[lo:hi, None] ^ b[None, :])
            counts += np.bincount(w.ravel(), minlength=n + 1)
        return [int(c) for c in counts]
    counts = [0] * (n + 1)
    for w in gray_codewords(code):
        counts[w.bit_count()] += 1
    return counts


def joint_distribution(code: LinearCode, cfixed: Word) -> list:
    """N[w][j] = #{c in C : wt(c) = w, wt(c & cfixed) = j}."""
    if cfixed.n != code.n:
        raise ValueError("length mismatch between code and reference word")
    _check_budget(code)
    n = code.n
    m = cfixed.weight()
    table = [[0] * (m + 1) for _ in range(n + 1)]
    if code.k > _FAST_K and n <= 63:
        a, b = _split_span(code)
        mask = np.uint64(cfixed.bits)
        flat = np.zeros((n + 1) * (m + 1), dtype=np.int64)
        for lo, hi in _pair_chunks(len(a)):
            blk = a[lo:hi, None] ^ b[None, :]
            w = np.bitwise_count(blk).astype(np.int64)
            j = np.bitwise_count(blk & mask).astype(np.int64)
            flat += np.bincount((w * (m + 1) + j).ravel(), minlength=len(flat))
        for w in range(n + 1):
            for j in range(m + 1):
                table[w][j] = int(flat[w * (m + 1) + j])
        return table
    cb = cfixed.bits
    for word in gray_codewords(code):
        table[word.bit_count()][(word & cb).bit_count()] += 1
    return table


def shell(code: LinearCode, w: int) -> list:
    """All codewords of weight w, as ints."""
    _check_budget(code)
    n = code.n
    if code.k > _FAST_K and n <= 63:
        a, b = _split_span(code)
        found = []
        for lo, hi in _pair_chunks(len(a)):
            blk = a[lo:hi, None] ^ b[None, :]
            hits = blk[np.bitwise_count(blk) == w]
            found.extend(int(x) for x in hits)
        return found
    return [word for word in gray_codewords(code) if word.bit_count() == w]


def min_weight(code: LinearCode) -> int:
    """Minimal nonzero codeword weight (0 for the zero code)."""
    if code.k == 0:
        return 0
    dist = weight_distribution(code)
    return next(w for w in range(1, code.n + 1) if dist[w])


def shell_subcode(code: LinearCode, w: int) -> LinearCode:
    """The linear span of the weight-w codewords, row-reduced as they stream."""
    _check_budget(code)
    red = RowReducer()
    n = code.n
    if code.k > _FAST_K and n <= 63:
        for bits in shell(code, w):
            red.add(bits)
    else:
        for word in gray_codewords(code):
            if word.bit_count() == w:
                red.add(word)
    return LinearCode(code.n, red.rows())


def weight_enumerator(code: LinearCode):
    """W_C(x, y) as an HPoly of degree n."""
    from .polyring import HPoly
    return HPoly(code.n, weight_distribution(code))


# ---------------------------------------------------------------------------
# text format: first line "n k", then k rows of n characters in {0,1}
# ---------------------------------------------------------------------------

def code_to_text(code: LinearCode) -> str:
    lines = [f"{code.n} {code.k}"]
    lines.extend(str(Word(code.n, g)) for g in code.generators)
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> LinearCode:
    lines = [ln for ln in (s.strip() for s in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError('header must be "n k"')
    n, k = int(head[0]), int(head[1])
    if len(lines) != k + 1:
        raise ValueError(f"expected {k} generator rows, found {len(lines) - 1}")
    gens = []
    for ln in lines[1:]:
        if len(ln) != n:
            raise ValueError("generator row length mismatch")
        gens.append(Word.from_string(ln).bits)
    code = LinearCode(n, gens)
    if code.k != k:
        raise ValueError(f"generator rows are dependent: rank {code.k} != {k}")
    return code


def code_to_json(code: LinearCode, name: str | None = None) -> dict:
    out = {"n": code.n, "k": code.k,
           "generators": [str(Word(code.n, g)) for g in code.generators]}
    if name:
        out["name"] = name
    return out


def distribution_to_json(dist) -> dict:
    return {"counts": {str(w): int(c) for w, c in enumerate(dist) if c}}
