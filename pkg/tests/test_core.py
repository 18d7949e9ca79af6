from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from h2unknot.core import (
    UNKNOT,
    ContinuedFraction,
    TwoBridgeLink,
    cf_eval,
    cf_expand,
    determinant,
    equivalent,
    mod_inverse,
    normalize,
    units_of,
)
from h2unknot.errors import DegenerateFraction, InvalidParameter, NonCoprime


def convergent(terms):
    # independent evaluation through the numerator/denominator recurrence
    h, h_prev = 1, 0
    k, k_prev = 0, 1
    for a in terms:
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    return h, k


def coprime_pairs(max_p):
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


@pytest.mark.parametrize("p, q, expected", [
    (23, 26, (23, 3)),
    (23, -3, (23, 20)),
    (45, 64, (45, 19)),
    (1, 17, (1, 0)),
])
def test_normalize(p, q, expected):
    link = normalize(p, q)
    assert (link.p, link.q) == expected
    assert normalize(link.p, link.q) == link


def test_normalize_errors():
    with pytest.raises(NonCoprime):
        normalize(6, 4)
    with pytest.raises(InvalidParameter):
        normalize(0, 1)
    with pytest.raises(InvalidParameter):
        normalize(-5, 2)
    with pytest.raises(InvalidParameter):
        TwoBridgeLink(5, 7)


def test_knot_iff_odd():
    assert normalize(23, 3).is_knot
    assert not normalize(8, 3).is_knot
    assert UNKNOT.is_unknot and UNKNOT.is_knot


@pytest.mark.parametrize("p, q, terms", [
    (23, 3, (7, 1, 2)),
    (3, 1, (3,)),
    (43, 25, (1, 1, 2, 1, 1, 3)),
    (1, 0, (1,)),
])
def test_cf_expand(p, q, terms):
    assert cf_expand(normalize(p, q)).terms == terms


@pytest.mark.parametrize("terms, value", [
    ((3,), Fraction(3)),
    ((2, 3), Fraction(7, 3)),
    ((7, 1, 2), Fraction(23, 3)),
])
def test_cf_eval(terms, value):
    assert cf_eval(ContinuedFraction(terms)) == value
    assert cf_eval(terms) == Fraction(*convergent(terms))


def test_cf_eval_degenerate():
    with pytest.raises(DegenerateFraction):
        cf_eval([1, 0, 0])
    with pytest.raises(InvalidParameter):
        ContinuedFraction(())


def test_cf_round_trip_exhaustive():
    for p, q in coprime_pairs(200):
        cf = cf_expand(TwoBridgeLink(p, q))
        assert all(a >= 1 for a in cf)
        assert len(cf) == 1 or cf.terms[-1] >= 2
        assert cf_eval(cf) == Fraction(p, q)
        assert convergent(cf.terms) == (p, q)


@pytest.mark.parametrize("a, b, mirror, expected", [
    ((5, 2), (5, 3), False, True),
    ((5, 2), (5, 2), False, True),
    ((7, 2), (7, 3), False, False),
    ((7, 2), (7, 3), True, True),
    ((7, 2), (9, 2), True, False),
])
def test_equivalent(a, b, mirror, expected):
    assert equivalent(normalize(*a), normalize(*b), up_to_mirror=mirror) is expected


def test_equivalent_reflexive_symmetric():
    links = [TwoBridgeLink(p, q) for p, q in coprime_pairs(100)]
    by_p = {}
    for link in links:
        by_p.setdefault(link.p, []).append(link)
    for group in by_p.values():
        for a in group:
            for mirror in (False, True):
                assert equivalent(a, a, mirror)
                for b in group:
                    assert equivalent(a, b, mirror) == equivalent(b, a, mirror)


@given(st.integers(3, 60), st.data())
def test_equivalent_transitive(p, data):
    qs = [q for q in range(1, p) if gcd(p, q) == 1]
    a, b, c = (TwoBridgeLink(p, data.draw(st.sampled_from(qs))) for _ in range(3))
    for mirror in (False, True):
        if equivalent(a, b, mirror) and equivalent(b, c, mirror):
            assert equivalent(a, c, mirror)


def test_determinant():
    assert determinant(normalize(43, 25)) == 43
    assert determinant(UNKNOT) == 1
    assert determinant(normalize(23, 3)) == 23


def test_mod_inverse():
    assert mod_inverse(3, 23) == 8
    assert mod_inverse(2, 5) == 3
    for p in range(2, 30):
        assert mod_inverse(1, p) == 1
    with pytest.raises(NonCoprime):
        mod_inverse(4, 6)


def test_mod_inverse_involution():
    for p, q in coprime_pairs(200):
        inv = mod_inverse(q, p)
        assert 0 < inv < p and inv * q % p == 1
        assert mod_inverse(inv, p) == q


def test_units_of():
    assert units_of(23) == list(range(1, 23))
    assert units_of(1) == []
    assert units_of(9) == [1, 2, 4, 5, 7, 8]


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals, rationals)
def test_rational_arithmetic_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    for x in (a + b, a * b, a - c):
        assert x.denominator >= 1
        assert gcd(x.numerator, x.denominator) == 1
