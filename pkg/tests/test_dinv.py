from collections import Counter
from fractions import Fraction
from math import gcd

import pytest

from h2unknot.catalog import D_L23_3, F_23
from h2unknot.core import TwoBridgeLink, normalize
from h2unknot.dinv import (
    CorrectionTable,
    d_lens,
    d_lens_raw,
    f_table,
    f_term,
    spin_center,
    to_c1_labeling,
)
from h2unknot.errors import EvenOrder, InvalidParameter, NonCoprime, OutOfRange, SymmetryFailure

F = Fraction


def odd_pairs(max_p):
    for p in range(3, max_p + 1, 2):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def test_raw_base_and_hand_values():
    assert d_lens_raw(1, 0) == (F(0),)
    assert d_lens_raw(3, 1) == (F(1, 2), F(-1, 6), F(-1, 6))


def test_raw_lens_p1_closed_form():
    # one recursion step onto S^3: d(L(p,1), j) = ((2j - p)^2 - p) / (4p)
    for p in range(2, 120):
        assert d_lens_raw(p, 1) == tuple(F((2 * j - p) ** 2 - p, 4 * p) for j in range(p))


def test_raw_errors():
    with pytest.raises(NonCoprime):
        d_lens_raw(6, 4)
    with pytest.raises(InvalidParameter):
        d_lens_raw(5, 7)


def test_published_table_23_3():
    table = d_lens(normalize(23, 3))
    assert table.values == D_L23_3
    assert table[0] == F(3, 2)
    assert table[1] == table[22] == F(85, 46)
    assert Counter(d_lens_raw(23, 3)) == Counter(D_L23_3)


def test_labeled_5_2():
    assert d_lens(normalize(5, 2)).values == (F(0), F(-2, 5), F(2, 5), F(2, 5), F(-2, 5))


def test_spin_center():
    # the fixed point of j -> p + q - 1 - j
    for p, q in odd_pairs(61):
        j0 = spin_center(p, q)
        assert (2 * j0 - (p + q - 1)) % p == 0
    with pytest.raises(EvenOrder):
        spin_center(8, 3)


def test_even_order_stays_raw():
    table = d_lens(normalize(8, 3))
    assert not table.labeled
    assert table.values == d_lens_raw(8, 3)
    with pytest.raises(EvenOrder):
        to_c1_labeling(d_lens_raw(8, 3), 8, 3)


def test_relabel_rejects_asymmetric():
    raw = list(d_lens_raw(7, 2))
    raw[0] += 1
    with pytest.raises(SymmetryFailure):
        to_c1_labeling(tuple(raw), 7, 2)


def test_symmetry_odd_p():
    for p, q in odd_pairs(199):
        t = d_lens(TwoBridgeLink(p, q))
        assert all(t[i] == t[-i] for i in range(p)), (p, q)


def test_orientation_reversal():
    for p, q in odd_pairs(99):
        a = d_lens(TwoBridgeLink(p, q))
        b = d_lens(TwoBridgeLink(p, p - q))
        assert b.values == tuple(-x for x in a.values)
        assert b.values == a.negated().values


def test_inverse_invariance():
    for p, q in odd_pairs(99):
        a = d_lens(TwoBridgeLink(p, q)).values
        b = d_lens(TwoBridgeLink(p, pow(q, -1, p))).values
        assert Counter(a) == Counter(b)
        assert any(all(b[u * i % p] == a[i] for i in range(p))
                   for u in range(1, p) if gcd(u, p) == 1), (p, q)


def test_integrality():
    for p in range(2, 80):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert all((4 * p * q * x).denominator == 1 for x in d_lens_raw(p, q))


def test_memo_matches_fresh_recursion():
    def fresh(p, q):
        if p == 1:
            return (F(0),)
        tail = fresh(q, p % q)
        return tuple(F((2 * j + 1 - p - q) ** 2 - p * q, 4 * p * q) - tail[j % q] for j in range(p))

    for p, q in [(23, 3), (55, 34), (97, 41), (144, 89)]:
        assert d_lens_raw(p, q) == fresh(p, q)


def test_table_helpers():
    t = d_lens(normalize(23, 3))
    assert t[23] == t[0] and t[-1] == t[22]
    assert len(t) == 23 and list(t) == list(t.values)
    assert t.shifted(2).values == tuple(x + 2 for x in t.values)
    doc = t.as_dict()
    assert doc["p"] == 23 and doc["labeled"] is True and doc["d"][0] == [3, 2]
    lines = t.to_csv().splitlines()
    assert lines[0] == "i,numerator,denominator" and lines[1] == "0,3,2" and len(lines) == 24
    with pytest.raises(ValueError):
        CorrectionTable(5, 2, (F(0),))


def test_f_examples():
    assert f_term(23, 0) == F(11, 2)
    assert f_term(23, 1) == F(-11, 46)
    assert f_term(23, 22) == F(-11, 46)
    assert f_table(23) == F_23
    with pytest.raises(OutOfRange):
        f_term(23, 23)
    with pytest.raises(OutOfRange):
        f_term(23, -1)


def test_f_definition():
    for p in range(1, 60, 2):
        for i in range(p):
            expected = (F((p - i) ** 2, p) - 1) / 4 if i % 2 == 0 else (F(i * i, p) - 1) / 4
            assert f_term(p, i) == expected
