"""Composite 2-bridge links, suffix bounds, and u2 classification.

S(p,q) # S(r,s), both nontrivial, has u2 = 1 exactly when, for one ordering
of the summands, either

* Case A: S(r, s) = S(q, p), where r may be any positive lift of
  q^{+-1} mod p, or
* Case B: S(p, q) = S(v, e) and S(r, s) = S(v*a*b + e, v*a^2) with
  e = +-1 and gcd(a, b) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .berge import u2_is_one_2bridge
from .core import TwoBridgeLink, cf_eval, cf_expand, equivalent, normalize
from .errors import TrivialSummand

__all__ = [
    "CompositeVerdict",
    "composite_u2_one",
    "case_a_witness",
    "case_b_witnesses",
    "verify_case_a",
    "verify_case_b",
    "u2_upper_bound",
    "tangle_upper_bound",
    "U2Classification",
    "u2_classify",
]


@dataclass(frozen=True)
class CompositeVerdict:
    u2_is_one: bool
    case: str  # "CaseA", "CaseB" or "None"
    witness: dict | None = None
    # every witness found, in preference order
    all_witnesses: tuple[dict, ...] = field(default=(), repr=False)

    def as_dict(self) -> dict:
        return {"u2_is_one": self.u2_is_one, "case": self.case, "witness": self.witness}


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def case_a_witness(first: TwoBridgeLink, second: TwoBridgeLink, mirror=False) -> dict | None:
    """Case A for the ordering (first, second): S(r, s) = S(r, p) with
    r = q^{+-1} (mod p).

    ``lifted`` is false exactly when r = q, the form S(r, s) = S(q, p) read
    literally; other representatives of q^{+-1} mod p count as lifted.
    """
    p, q = first.p, first.q
    r = second.p
    if gcd(r, p) != 1:
        return None
    residues = {q, pow(q, -1, p)}
    if r % p not in residues:
        return None
    if not equivalent(normalize(r, p), second, up_to_mirror=mirror):
        return None
    return {"ordering": [[first.p, first.q], [second.p, second.q]], "lifted": r != q}


def case_b_witnesses(first: TwoBridgeLink, second: TwoBridgeLink, mirror=False) -> list[dict]:
    """Case B witnesses (v, epsilon, a, b) for the ordering (first, second)."""
    p, q = first.p, first.q
    r = second.p
    out = []
    for eps in (1, -1):
        if (q - eps) % p:
            continue
        n = r - eps
        if n <= 0 or n % p:
            continue
        # v*a | r - eps with v = p, so a runs over divisors of (r - eps)/p
        for a in _divisors(n // p):
            b = n // (p * a)
            if gcd(a, b) != 1:
                continue
            if equivalent(normalize(r, p * a * a), second, up_to_mirror=mirror):
                out.append({"ordering": [[first.p, first.q], [second.p, second.q]],
                            "v": p, "epsilon": eps, "a": a, "b": b})
    return out


def verify_case_a(first: TwoBridgeLink, second: TwoBridgeLink, mirror=False) -> bool:
    p, q, r, s = first.p, first.q, second.p, second.q
    if gcd(r, p) != 1 or r % p not in {q, pow(q, -1, p)}:
        return False
    targets = {p % r, pow(p, -1, r)}
    if mirror:
        targets |= {(-t) % r for t in targets}
    return s in targets


def verify_case_b(first: TwoBridgeLink, second: TwoBridgeLink, w: dict, mirror=False) -> bool:
    """Re-check a Case B witness directly from its numbers."""
    p, q, r, s = first.p, first.q, second.p, second.q
    v, eps, a, b = w["v"], w["epsilon"], w["a"], w["b"]
    if v != p or eps not in (1, -1) or a < 1 or b < 1 or gcd(a, b) != 1:
        return False
    if (q - eps) % p or r != v * a * b + eps:
        return False
    m = (v * a * a) % r
    targets = {m, pow(m, -1, r)}
    if mirror:
        targets |= {(-t) % r for t in targets}
    return s in targets


def composite_u2_one(first: TwoBridgeLink, second: TwoBridgeLink, mirror: bool = False) -> CompositeVerdict:
    """Decide whether S(p,q) # S(r,s) has H(2)-unknotting number one.

    Both orderings are tried.  Preference for the reported ``case``: the
    literal Case A form, then Case B, then a lifted Case A; every witness
    found is kept in ``all_witnesses``.
    """
    if first.p < 2 or second.p < 2:
        raise TrivialSummand("both summands must be nontrivial 2-bridge links")
    found_a, found_b = [], []
    for x, y in ((first, second), (second, first)):
        w = case_a_witness(x, y, mirror)
        if w is not None:
            found_a.append(w)
        found_b.extend(case_b_witnesses(x, y, mirror))
    literal_a = [w for w in found_a if not w["lifted"]]
    lifted_a = [w for w in found_a if w["lifted"]]
    found = literal_a + found_b + lifted_a
    if not found:
        return CompositeVerdict(False, "None", None, ())
    case = "CaseB" if found[0] in found_b else "CaseA"
    return CompositeVerdict(True, case, found[0], tuple(found))


@lru_cache(maxsize=None)
def _is_one(p, q):
    return u2_is_one_2bridge(TwoBridgeLink(p, q))[0]


def _suffix_link(terms) -> TwoBridgeLink:
    value = cf_eval(terms)
    return normalize(value.numerator, value.denominator)


@lru_cache(maxsize=None)
def _bound(terms: tuple[int, ...]) -> int:
    if len(terms) == 1:
        # C(a) is the (2, a) torus link; one move undoes it unless |a| <= 1
        return 0 if abs(terms[0]) <= 1 else 1
    best = len(terms)
    for start in range(len(terms)):
        suffix = terms[start:]
        link = _suffix_link(suffix)
        if link.p == 1:
            base = 0
        elif _is_one(link.p, link.q):
            base = 1
        elif len(suffix) == 1:
            base = _bound(suffix)
        else:
            base = 1 + _bound(suffix[1:])
        best = min(best, start + base)
    return best


def u2_upper_bound(link: TwoBridgeLink) -> int:
    """Upper bound on u2 from u2(C(a1..an)) <= u2(C(ai..an)) + i - 1.

    Applied recursively over the all-positive expansion of p/q.
    """
    if link.p == 1:
        return 0
    return _bound(cf_expand(link).terms)


def tangle_upper_bound(link: TwoBridgeLink) -> int:
    """u2 <= u2(S(q, p)) + 1 for a (p, q)-tangle unknotting number one link."""
    if link.p == 1:
        return 0
    return u2_classify(normalize(link.q, link.p)).upper + 1


@dataclass(frozen=True)
class U2Classification:
    link: TwoBridgeLink
    lower: int
    upper: int
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"lower {self.lower} > upper {self.upper} for {self.link}")

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def as_dict(self) -> dict:
        return {
            "p": self.link.p,
            "q": self.link.q,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": list(self.provenance),
        }


def u2_classify(link: TwoBridgeLink) -> U2Classification:
    """Lower bound from Berge realizability, upper bound from the best suffix
    bound over the presentations S(p, +-q^{+-1}) of the same unoriented knot
    type up to mirroring."""
    if link.p == 1:
        return U2Classification(link, 0, 0, ("unknot",))
    if _is_one(link.p, link.q):
        return U2Classification(link, 1, 1, ("berge-realizable",))
    upper = min(u2_upper_bound(rep) for rep in _presentations(link))
    return U2Classification(link, 2, upper, ("not-berge-realizable", "suffix-bound"))


def _presentations(link: TwoBridgeLink):
    # S(p, q^{-1}) is the same link and u2 ignores mirroring, but each
    # presentation has its own expansion and hence its own suffix bound
    p = link.p
    for q in (link.q, p - link.q):
        yield TwoBridgeLink(p, q)
        yield TwoBridgeLink(p, pow(q, -1, p))
