"""Lens spaces realized by integral surgery on Berge knots.

L(alpha, beta) is realized when some k has beta = +-k^2 (mod alpha) and
(alpha, k) falls into one of seven congruence families:

    I    alpha = i*k +- 1 (mod k^2), gcd(i, k) in {1, 2}
    II   alpha = +-(2k + e) d (mod k^2), d | k - e, (k - e)/d odd
    III  alpha = +-(k + e) d (mod k^2), d | 2k - e
    IV   alpha = +-(k + e) d (mod k^2), d | k + e, d odd
    V    k^2 +- k +- 1 = 0 (mod alpha)
    VI   alpha = 22 j^2 + 9 j + 1, k = 11 j + 2
    VII  alpha = 22 j^2 + 13 j + 2, k = 11 j + 3

with e = +-1.  A 2-bridge link S(p, q) has H(2)-unknotting number one
exactly when L(p, q) is on this list.  The list is stated for a particular
beta, while L(p, q) and L(p, q^{-1}) are the same manifold, so
:func:`u2_is_one_2bridge` tries both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .core import TwoBridgeLink
from .errors import InvalidParameter, NonCoprime

__all__ = [
    "FAMILIES",
    "BergeWitness",
    "family_witnesses",
    "find_berge_witnesses",
    "verify_witness",
    "u2_is_one_2bridge",
    "witnesses_as_dict",
]

FAMILIES = ("I", "II", "III", "IV", "V", "VI", "VII")
SIGNS = (1, -1)


_SIGN_KEYS = ("sign", "epsilon", "outer_sign", "sign1", "sign2")


@dataclass(frozen=True)
class BergeWitness:
    """A satisfied family together with its parameters.

    ``params`` is a tuple of (name, value) pairs in a fixed per-family order;
    ``beta`` is the presentation L(alpha, beta) the witness certifies.
    """

    family: str
    k: int
    ksq_sign: int
    params: tuple = ()
    beta: int | None = None

    def __getitem__(self, name):
        return dict(self.params)[name]

    @property
    def d(self):
        return dict(self.params).get("d")

    def sort_key(self):
        # +1 signs sort before -1
        return (self.k, FAMILIES.index(self.family), -self.ksq_sign,
                tuple(-v if name in _SIGN_KEYS else v for name, v in self.params))

    def as_dict(self) -> dict:
        return {"family": self.family, "k": self.k, "ksq_sign": self.ksq_sign,
                **dict(self.params), "beta": self.beta}


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _family_one(alpha, k):
    # i only matters mod k: alpha = i*k + s (mod k^2) forces k | alpha - s
    # and then i = (alpha - s)/k (mod k).
    for s in SIGNS:
        if (alpha - s) % k == 0:
            i = ((alpha - s) // k) % k
            g = gcd(i, k)
            if g in (1, 2):
                yield {"i": i, "sign": s, "gcd_value": g}


def _family_two(alpha, k):
    m = k * k
    for e in SIGNS:
        n = k - e
        if n == 0:
            continue  # (k - e)/d = 0 is never odd
        for d in _divisors(n):
            if (n // d) % 2 == 1:
                for s in SIGNS:
                    if (alpha - s * (2 * k + e) * d) % m == 0:
                        yield {"epsilon": e, "d": d, "outer_sign": s}


def _family_three(alpha, k):
    m = k * k
    for e in SIGNS:
        for d in _divisors(2 * k - e):
            for s in SIGNS:
                if (alpha - s * (k + e) * d) % m == 0:
                    yield {"epsilon": e, "d": d, "outer_sign": s}


def _family_four(alpha, k):
    m = k * k
    for e in SIGNS:
        n = k + e
        # n = 0 only for k = 1, where every congruence mod 1 holds; d = 1 stands in.
        for d in _divisors(n) if n else [1]:
            if d % 2 == 1:
                for s in SIGNS:
                    if (alpha - s * (k + e) * d) % m == 0:
                        yield {"epsilon": e, "d": d, "outer_sign": s}


def _family_five(alpha, k):
    for s1 in SIGNS:
        for s2 in SIGNS:
            if (k * k + s1 * k + s2) % alpha == 0:
                yield {"sign1": s1, "sign2": s2}


def _sporadic(alpha, k, offset, lin, const):
    # k = |11 j + offset| and alpha = 22 j^2 + lin j + const
    for signed_k in (k, -k):
        if (signed_k - offset) % 11 == 0:
            j = (signed_k - offset) // 11
            if 22 * j * j + lin * j + const == alpha:
                yield {"j": j}


def _family_six(alpha, k):
    return _sporadic(alpha, k, 2, 9, 1)


def _family_seven(alpha, k):
    return _sporadic(alpha, k, 3, 13, 2)


_FAMILY_TESTS = (
    ("I", _family_one),
    ("II", _family_two),
    ("III", _family_three),
    ("IV", _family_four),
    ("V", _family_five),
    ("VI", _family_six),
    ("VII", _family_seven),
)


def family_witnesses(alpha: int, k: int) -> list[tuple[str, dict]]:
    """All (family, params) satisfied by (alpha, k), ignoring beta."""
    if alpha < 1 or k < 1:
        raise InvalidParameter("alpha and k must be positive")
    return [(name, params) for name, test in _FAMILY_TESTS for params in test(alpha, k)]


def find_berge_witnesses(alpha: int, beta: int, k_max: int | None = None) -> list[BergeWitness]:
    """Every witness with 1 <= k <= k_max (default alpha), sorted by (k, family).

    An empty list means no witness exists within the bound.
    """
    if alpha < 1:
        raise InvalidParameter(f"alpha must be positive, got {alpha}")
    if gcd(alpha, beta) != 1:
        raise NonCoprime(f"gcd({alpha}, {beta}) != 1")
    if k_max is None:
        k_max = alpha
    if k_max < 1:
        raise InvalidParameter(f"k_max must be positive, got {k_max}")
    return list(_search(alpha, beta % alpha, k_max))


@lru_cache(maxsize=8192)
def _search(alpha, beta, k_max):
    found = []
    for k in range(1, k_max + 1):
        k2 = k * k
        signs = [s for s in SIGNS if (beta - s * k2) % alpha == 0]
        if not signs:
            continue
        fams = family_witnesses(alpha, k)
        for s in signs:
            found.extend(BergeWitness(name, k, s, tuple(params.items()), beta) for name, params in fams)
    found.sort(key=BergeWitness.sort_key)
    return tuple(found)


def verify_witness(alpha: int, beta: int, w: BergeWitness) -> bool:
    """Re-check a witness from its recorded parameters alone."""
    k, P = w.k, dict(w.params)
    if k < 1 or w.ksq_sign not in SIGNS:
        return False
    if w.beta is not None and (w.beta - beta) % alpha:
        return False
    if (beta - w.ksq_sign * k * k) % alpha:
        return False
    m = k * k
    fam = w.family
    if fam == "I":
        i, s = P["i"], P["sign"]
        return s in SIGNS and gcd(i, k) in (1, 2) and gcd(i, k) == P["gcd_value"] \
            and (alpha - i * k - s) % m == 0
    if fam in ("II", "III", "IV"):
        e, d, s = P["epsilon"], P["d"], P["outer_sign"]
        if e not in SIGNS or s not in SIGNS or d < 1:
            return False
        if fam == "II":
            return (k - e) % d == 0 and ((k - e) // d) % 2 == 1 \
                and (alpha - s * (2 * k + e) * d) % m == 0
        if fam == "III":
            return (2 * k - e) % d == 0 and (alpha - s * (k + e) * d) % m == 0
        return (k + e) % d == 0 and d % 2 == 1 and (alpha - s * (k + e) * d) % m == 0
    if fam == "V":
        return (k * k + P["sign1"] * k + P["sign2"]) % alpha == 0
    if fam == "VI":
        j = P["j"]
        return alpha == 22 * j * j + 9 * j + 1 and abs(11 * j + 2) == k
    if fam == "VII":
        j = P["j"]
        return alpha == 22 * j * j + 13 * j + 2 and abs(11 * j + 3) == k
    return False


def u2_is_one_2bridge(link: TwoBridgeLink, k_max: int | None = None) -> tuple[bool, list[BergeWitness]]:
    """Decide u2(S(p, q)) = 1 and return the supporting witnesses.

    Witnesses for L(p, q) come first, then those for L(p, q^{-1}).
    """
    if link.p < 2:
        raise InvalidParameter("the unknot has u2 = 0; pass a nontrivial link")
    ws = find_berge_witnesses(link.p, link.q, k_max)
    inverse = pow(link.q, -1, link.p)
    if inverse != link.q:
        ws += find_berge_witnesses(link.p, inverse, k_max)
    return bool(ws), ws


def witnesses_as_dict(alpha: int, beta: int, witnesses) -> dict:
    return {"alpha": alpha, "beta": beta, "witnesses": [w.as_dict() for w in witnesses]}
