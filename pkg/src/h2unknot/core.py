"""2-bridge normal forms, continued fractions and modular helpers.

All rational values in the package are :class:`fractions.Fraction`, which is
exact and always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateFraction, InvalidParameter, NonCoprime

__all__ = [
    "Fraction",
    "TwoBridgeLink",
    "ContinuedFraction",
    "normalize",
    "cf_expand",
    "cf_eval",
    "equivalent",
    "determinant",
    "mod_inverse",
    "units_of",
    "UNKNOT",
]


@dataclass(frozen=True, order=True)
class TwoBridgeLink:
    """The 2-bridge link S(p, q) in normal form, 0 < q < p, or (1, 0)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidParameter(f"p must be positive, got {self.p}")
        if self.p == 1:
            if self.q != 0:
                raise InvalidParameter("the unknot is encoded as (1, 0)")
            return
        if not 0 < self.q < self.p:
            raise InvalidParameter(f"q must lie in (0, {self.p}), got {self.q}")
        if gcd(self.p, self.q) != 1:
            raise NonCoprime(f"gcd({self.p}, {self.q}) != 1")

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    def mirror(self) -> TwoBridgeLink:
        if self.p == 1:
            return self
        return TwoBridgeLink(self.p, self.p - self.q)

    def __str__(self):
        return f"S({self.p},{self.q})"


UNKNOT = TwoBridgeLink(1, 0)


def normalize(p: int, q: int) -> TwoBridgeLink:
    """Reduce (p, q) to normal form; q is taken mod p.

    >>> normalize(23, -3)
    TwoBridgeLink(p=23, q=20)
    """
    if p < 1:
        raise InvalidParameter(f"p must be positive, got {p}")
    if p == 1:
        return UNKNOT
    q = q % p
    if gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p}, {q}) != 1")
    return TwoBridgeLink(p, q)


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise InvalidParameter("a continued fraction needs at least one term")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def suffix(self, start: int) -> ContinuedFraction:
        """Terms from 0-based position ``start`` onwards."""
        return ContinuedFraction(self.terms[start:])


def cf_expand(link: TwoBridgeLink) -> ContinuedFraction:
    """Euclidean expansion of p/q with all terms positive.

    The unknot (1, 0) expands to ``[1]``.
    """
    p, q = link.p, link.q
    if p == 1:
        return ContinuedFraction((1,))
    if q == 0:
        raise InvalidParameter(f"S({p},0) has no continued fraction")
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return ContinuedFraction(tuple(terms))


def cf_eval(cf) -> Fraction:
    """Evaluate a1 + 1/(a2 + ... + 1/an) exactly.

    Accepts a :class:`ContinuedFraction` or any sequence of integers.
    """
    terms = list(cf)
    if not terms:
        raise InvalidParameter("empty continued fraction")
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if value == 0:
            raise DegenerateFraction(f"zero intermediate denominator in {terms}")
        value = a + 1 / value
    return value


def mod_inverse(q: int, p: int) -> int:
    """Inverse of q modulo p, as a representative in [0, p)."""
    if p < 1:
        raise InvalidParameter(f"modulus must be positive, got {p}")
    if gcd(q, p) != 1:
        raise NonCoprime(f"{q} is not invertible modulo {p}")
    return pow(q, -1, p)


def units_of(p: int) -> list[int]:
    """Units of Z/pZ in (0, p), ascending.  Empty for p = 1."""
    if p < 1:
        raise InvalidParameter(f"modulus must be positive, got {p}")
    return [u for u in range(1, p) if gcd(u, p) == 1]


def determinant(link: TwoBridgeLink) -> int:
    return link.p


def equivalent(a: TwoBridgeLink, b: TwoBridgeLink, up_to_mirror: bool = False) -> bool:
    """Equivalence of unoriented 2-bridge links.

    Strict mode: p1 = p2 and q2 = q1^{+-1} mod p.  With ``up_to_mirror``
    the mirror images S(p, -q^{+-1}) are also accepted.
    """
    if a.p != b.p:
        return False
    p = a.p
    if p == 1:
        return True
    candidates = {a.q, mod_inverse(a.q, p)}
    if up_to_mirror:
        candidates |= {(-c) % p for c in candidates}
    return b.q in candidates
