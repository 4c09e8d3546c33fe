"""Zonal harmonics: the subset-summation oracle is authoritative.

The closed-form evaluator carries an alternating sign in *both* binomial
factors; the first test pins that convention against direct summation of
the defining expression before anything else relies on it.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from hwenum.discharm import DiscretePoly, apply_x, harmonic_basis
from hwenum.gf2 import Word
from hwenum.zonal import (ZonalHarmonic, qdk, qdk_bruteforce,
                          zonal_as_discrete_poly, zonal_evaluate)


def _canonical_cfixed(n, wc):
    return Word(n, (1 << wc) - 1)


def test_sign_convention_pinned_by_oracle_exhaustive_small():
    for n in (4, 5, 6):
        for wc in range(n + 1):
            cfixed = _canonical_cfixed(n, wc)
            for d in range(min(4, wc) + 1):
                for k in range(d + 1):
                    for vb in range(1 << n):
                        v = Word(n, vb)
                        wv, wj = v.weight(), v.intersection_weight(cfixed)
                        if wv - wj > n - wc:
                            continue
                        assert qdk(n, wc, d, k, wv, wj) == qdk_bruteforce(cfixed, d, k, v)


def test_sign_convention_random_reference_words():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(4, 10)
        cb = rng.getrandbits(n)
        vb = rng.getrandbits(n)
        cfixed, v = Word(n, cb), Word(n, vb)
        wc = cfixed.weight()
        d = rng.randint(0, min(4, wc))
        k = rng.randint(0, d)
        wv, wj = v.weight(), v.intersection_weight(cfixed)
        assert qdk(n, wc, d, k, wv, wj) == qdk_bruteforce(cfixed, d, k, v)


def test_qdk_all_zero_word():
    # only the i = 0 terms survive
    assert qdk(10, 4, 3, 2, 0, 0) == 6 * 6  # C(4,2) * C(6,1)
    assert qdk(8, 4, 1, 1, 0, 0) == 4


def test_qdk_spec_example():
    # n=8, wc=4, d=1, k=1, v covering the support: first factor -4, second 1
    assert qdk(8, 4, 1, 1, 4, 4) == -4


def test_qdk_degree_zero_is_one():
    for wv, wj in [(0, 0), (3, 1), (5, 2)]:
        assert qdk(8, 4, 0, 0, wv, wj) == 1


def test_recurrence_matches_closed_form():
    for n in range(1, 13):
        for wc in range(n + 1):
            for d in range(wc + 1):
                z = ZonalHarmonic(n, wc, d)
                assert z.kvec == z.kvec_closed_form()
                assert z.kvec[0] == 1


def test_x_action_on_qdk_identity():
    # X Q_{d,k} = ((n-wc)-(d-k-1)) Q_{d-1,k} + (wc-(k-1)) Q_{d-1,k-1}
    def q_poly(n, cfixed, d, k):
        ones = cfixed.support()
        zeros = [j for j in range(n) if j not in set(ones)]
        terms = {}
        for a in combinations(ones, k):
            for b in combinations(zeros, d - k):
                mask = sum(1 << j for j in a) | sum(1 << j for j in b)
                terms[mask] = 1
        return DiscretePoly(n, d, terms)

    for n in (6, 9, 12):
        for wc in (0, 2, n // 2, n - 1):
            cfixed = _canonical_cfixed(n, wc)
            for d in range(1, min(4, wc) + 1):
                for k in range(d + 1):
                    lhs = apply_x(q_poly(n, cfixed, d, k))
                    c1 = (n - wc) - (d - k - 1)
                    rhs = q_poly(n, cfixed, d - 1, k).scale(c1) if k <= d - 1 \
                        else DiscretePoly(n, d - 1, {})
                    if k >= 1:
                        rhs = rhs + q_poly(n, cfixed, d - 1, k - 1).scale(wc - (k - 1))
                    assert lhs == rhs


def test_expansion_example_from_recurrence():
    # n=4, wc=2, cfixed on coordinates {0,1}, d=1: (m2 + m3) - (m0 + m1)
    z = ZonalHarmonic(4, 2, 1)
    poly = zonal_as_discrete_poly(z, Word.from_string("1100"))
    expected = DiscretePoly(4, 1, {0b0100: 1, 0b1000: 1, 0b0001: -1, 0b0010: -1})
    assert poly == expected


def test_expansion_degree_zero():
    z = ZonalHarmonic(6, 3, 0)
    poly = zonal_as_discrete_poly(z, Word.from_string("111000"))
    assert poly == DiscretePoly(6, 0, {0: 1})


def test_expansion_is_harmonic():
    for n, wc, d in [(6, 3, 2), (8, 4, 3), (8, 6, 4), (10, 5, 3), (12, 6, 4)]:
        z = ZonalHarmonic(n, wc, d)
        poly = zonal_as_discrete_poly(z, _canonical_cfixed(n, wc))
        assert apply_x(poly).is_zero()


def test_two_parameter_well_definedness_exhaustive():
    for n, wc, d in [(6, 3, 2), (8, 5, 3), (10, 4, 2)]:
        cfixed = _canonical_cfixed(n, wc)
        z = ZonalHarmonic(n, wc, d)
        poly = zonal_as_discrete_poly(z, cfixed)
        for vb in range(1 << n):
            v = Word(n, vb)
            wv, wj = v.weight(), v.intersection_weight(cfixed)
            assert poly.evaluate(v) == z.evaluate(wv, wj)


def test_invariant_harmonic_space_is_one_dimensional():
    # rank of {X Q_{d,k}}_k equals d, so the kernel inside span{Q_{d,k}} is
    # exactly one line, spanned by Z_d
    from hwenum.zonal import _zonal_cached

    def expand_q(n, cfixed, d, k):
        ones = cfixed.support()
        zeros = [j for j in range(n) if j not in set(ones)]
        terms = {}
        for a in combinations(ones, k):
            for b in combinations(zeros, d - k):
                terms[sum(1 << j for j in a) | sum(1 << j for j in b)] = 1
        return DiscretePoly(n, d, terms)

    for n, wc, d in [(6, 3, 2), (8, 4, 2), (8, 4, 3), (10, 6, 3)]:
        cfixed = _canonical_cfixed(n, wc)
        images = [apply_x(expand_q(n, cfixed, d, k)) for k in range(d + 1)]
        # exact rank over Q of the image vectors
        rows = []
        for img in images:
            rows.append(dict(img.terms))
        rank = 0
        pivots = {}
        for row in rows:
            row = dict(row)
            while row:
                piv = min(row)
                if piv in pivots:
                    prow, pval = pivots[piv]
                    f = Fraction(row[piv]) / pval
                    for m, c in prow.items():
                        nv = row.get(m, 0) - f * c
                        if nv:
                            row[m] = nv
                        else:
                            row.pop(m, None)
                else:
                    pivots[piv] = (row, Fraction(row[piv]))
                    rank += 1
                    break
        assert rank == d


def test_zonal_wc1_matches_degree_one_harmonic():
    # Z_1 for cfixed = unit vector is -(n (-1)^{v_j} - sum_k (-1)^{v_k})
    n, j = 24, 5
    rng = random.Random(3)
    z = ZonalHarmonic(n, 1, 1)
    cfixed = Word.from_support(n, [j])
    qj = DiscretePoly(n, 1, {1 << k: (n - 1 if k == j else -1) for k in range(n)})
    for _ in range(10):
        v = Word(n, rng.getrandbits(n))
        assert z.evaluate_word(v, cfixed) == -qj.evaluate(v)


def test_e8_weight4_shell_zonal_sum_vanishes():
    from hwenum.catalog import catalog
    from hwenum.gf2 import shell
    e8 = catalog("e8")
    words = shell(e8, 4)
    cfixed = Word(8, words[0])
    z = ZonalHarmonic(8, 4, 2)
    total = sum(z.evaluate(4, (w & cfixed.bits).bit_count()) for w in words)
    assert total == 0


def test_precondition_errors():
    with pytest.raises(ValueError):
        qdk(8, 4, 5, 2, 0, 0)  # d > wc
    with pytest.raises(ValueError):
        qdk(8, 4, 2, 3, 0, 0)  # k > d
    with pytest.raises(ValueError):
        qdk(8, 4, 2, 1, 6, 1)  # wv - wj > n - wc
