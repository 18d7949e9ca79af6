from math import gcd

import pytest

from h2unknot.core import TwoBridgeLink, cf_expand, normalize
from h2unknot.composite import (
    case_a_witness,
    case_b_witnesses,
    composite_u2_one,
    tangle_upper_bound,
    u2_classify,
    u2_upper_bound,
    verify_case_a,
    verify_case_b,
)
from h2unknot.errors import TrivialSummand


def links(max_p):
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield TwoBridgeLink(p, q)


def test_case_a_example():
    v = composite_u2_one(normalize(5, 2), normalize(2, 1))
    assert v.u2_is_one and v.case == "CaseA"
    assert v.as_dict() == {"u2_is_one": True, "case": "CaseA", "witness": v.witness}


def test_case_b_example():
    v = composite_u2_one(normalize(3, 1), normalize(7, 5))
    assert v.u2_is_one and v.case == "CaseB"
    triples = {(w["v"], w["epsilon"], w["a"], w["b"]) for w in v.all_witnesses if "v" in w}
    assert (3, 1, 2, 1) in triples


def test_negative_example():
    v = composite_u2_one(normalize(3, 1), normalize(3, 1))
    assert not v.u2_is_one and v.case == "None" and v.witness is None


def test_trivial_summand():
    with pytest.raises(TrivialSummand):
        composite_u2_one(TwoBridgeLink(1, 0), normalize(3, 1))


def test_mirror_flag():
    # Hopf link # trefoil: S(3, 2) is the mirror of S(3, 1)
    hopf, trefoil = normalize(2, 1), normalize(3, 1)
    assert not composite_u2_one(hopf, trefoil).u2_is_one
    assert composite_u2_one(hopf, trefoil, mirror=True).u2_is_one
    assert composite_u2_one(hopf, normalize(3, 2)).u2_is_one


def test_mirror_mode_only_widens():
    ls = list(links(16))
    for a in ls:
        for b in ls:
            if composite_u2_one(a, b).u2_is_one:
                assert composite_u2_one(a, b, mirror=True).u2_is_one


def test_sum_with_swapped_fraction_grid():
    for p in range(3, 61):
        for q in range(2, p):
            if gcd(p, q) == 1:
                v = composite_u2_one(TwoBridgeLink(p, q), normalize(q, p))
                assert v.u2_is_one, (p, q)


def test_symmetric_in_summands():
    ls = list(links(40))
    for a in ls:
        for b in ls:
            x, y = composite_u2_one(a, b), composite_u2_one(b, a)
            assert x.u2_is_one == y.u2_is_one and x.case == y.case, (a, b)


def test_witnesses_reverify():
    ls = list(links(30))
    for a in ls:
        for b in ls:
            for mirror in (False, True):
                if case_a_witness(a, b, mirror) is not None:
                    assert verify_case_a(a, b, mirror)
                for w in case_b_witnesses(a, b, mirror):
                    assert verify_case_b(a, b, w, mirror)
                    assert w["v"] * w["a"] * w["b"] + w["epsilon"] == b.p
                    assert (a.q - w["epsilon"]) % a.p == 0
                    assert gcd(w["a"], w["b"]) == 1


def test_verify_case_b_rejects_bad_witness():
    a, b = normalize(3, 1), normalize(7, 5)
    w = case_b_witnesses(a, b)[0]
    assert not verify_case_b(a, b, {**w, "b": w["b"] + 1})
    assert not verify_case_b(a, b, {**w, "epsilon": -w["epsilon"]})


def test_classify_examples():
    c = u2_classify(normalize(23, 3))
    assert (c.lower, c.upper, c.exact) == (2, 2, 2)
    assert u2_classify(normalize(43, 25)).exact == 1
    assert u2_classify(TwoBridgeLink(1, 0)).exact == 0
    assert u2_classify(normalize(23, 3)).as_dict() == {
        "p": 23, "q": 3, "lower": 2, "upper": 2, "exact": 2,
        "provenance": ["not-berge-realizable", "suffix-bound"],
    }


def test_bounds():
    for p in range(2, 101):
        assert u2_classify(TwoBridgeLink(p, 1)).exact == 1
    for link in links(90):
        c = u2_classify(link)
        assert 1 <= c.lower <= c.upper
        assert u2_upper_bound(link) <= len(cf_expand(link))
        if c.lower == 1:
            assert c.exact == 1


def test_tangle_bound_23_3():
    # S(3, 23) = S(3, 2) is realizable, so the tangle bound is 1 + 1
    assert tangle_upper_bound(normalize(23, 3)) == 2
    assert u2_upper_bound(normalize(23, 3)) == 2


def test_classification_is_a_knot_invariant():
    # equal for S(p, q), S(p, q^{-1}) and both mirrors
    for link in links(80):
        p, q = link.p, link.q
        c = u2_classify(link)
        for other in (pow(q, -1, p), p - q, p - pow(q, -1, p)):
            d = u2_classify(TwoBridgeLink(p, other))
            assert (c.lower, c.upper) == (d.lower, d.upper), (p, q, other)
