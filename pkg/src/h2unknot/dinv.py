"""Correction terms of lens spaces and the grading shift f(i).

The raw table comes from the standard lens-space recursion

    d(L(p,q), j) = ((2j + 1 - p - q)^2 - pq) / (4pq) - d(L(q, p mod q), j mod q)

with d(L(1, 0), 0) = 0.  For odd p the raw index j is shifted so that the
unique self-conjugate structure sits at label 0 (see :func:`to_c1_labeling`).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .core import TwoBridgeLink
from .errors import EvenOrder, InvalidParameter, NonCoprime, OutOfRange, SymmetryFailure

__all__ = [
    "CorrectionTable",
    "d_lens_raw",
    "spin_center",
    "to_c1_labeling",
    "d_lens",
    "f_term",
    "f_table",
]


@dataclass(frozen=True)
class CorrectionTable:
    """Correction terms d(L(p,q), i) for i = 0..p-1.

    ``labeled`` is true when index i is the c1 label (odd p only); otherwise
    the values are in raw recursion order.
    """

    p: int
    q: int
    values: tuple[Fraction, ...]
    labeled: bool = True

    def __post_init__(self):
        if len(self.values) != self.p:
            raise InvalidParameter(f"expected {self.p} values, got {len(self.values)}")

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i % self.p]

    def __len__(self):
        return self.p

    def __iter__(self):
        return iter(self.values)

    def is_symmetric(self) -> bool:
        p = self.p
        return all(self.values[i] == self.values[-i % p] for i in range(p))

    def shifted(self, delta) -> CorrectionTable:
        """Pointwise ``d(i) + delta``; handy for building comparison tables."""
        return CorrectionTable(self.p, self.q, tuple(v + delta for v in self.values), self.labeled)

    def negated(self) -> CorrectionTable:
        return CorrectionTable(self.p, self.q, tuple(-v for v in self.values), self.labeled)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "labeled": self.labeled,
            "d": [[v.numerator, v.denominator] for v in self.values],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "numerator", "denominator"])
        for i, v in enumerate(self.values):
            writer.writerow([i, v.numerator, v.denominator])
        return buf.getvalue()


def _check_pair(p: int, q: int):
    if p < 1:
        raise InvalidParameter(f"p must be positive, got {p}")
    if p == 1:
        if q != 0:
            raise InvalidParameter("L(1, q) is only accepted as (1, 0)")
        return
    if not 0 < q < p:
        raise InvalidParameter(f"q must lie in (0, {p}), got {q}")
    if gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p}, {q}) != 1")


@lru_cache(maxsize=4096)
def _raw(p: int, q: int) -> tuple[Fraction, ...]:
    # Sub-tables are immutable tuples, so sharing them through the cache
    # cannot change any result.
    if p == 1:
        return (Fraction(0),)
    sub = _raw(q, p % q)
    four_pq = 4 * p * q
    return tuple(
        Fraction((2 * j + 1 - p - q) ** 2 - p * q, four_pq) - sub[j % q]
        for j in range(p)
    )


def d_lens_raw(p: int, q: int) -> tuple[Fraction, ...]:
    """Correction terms of L(p, q) in recursion order j = 0..p-1."""
    _check_pair(p, q)
    return _raw(p, q)


def spin_center(p: int, q: int) -> int:
    """The raw index j0 with 2*j0 = p + q - 1 (mod p); p must be odd."""
    if p % 2 == 0:
        raise EvenOrder(f"p = {p} is even; no unique self-conjugate label")
    # 2 is invertible mod odd p, with inverse (p + 1) / 2.
    return ((p + q - 1) * (p + 1) // 2) % p


def to_c1_labeling(raw, p: int, q: int) -> CorrectionTable:
    """Relabel a raw table so that label 0 is the spin structure.

    Label i corresponds to raw index j0 + i.
    """
    if p % 2 == 0:
        raise EvenOrder(f"c1 labeling needs odd order, got p = {p}")
    if len(raw) != p:
        raise InvalidParameter(f"expected {p} raw values, got {len(raw)}")
    j0 = spin_center(p, q)
    table = CorrectionTable(p, q, tuple(raw[(j0 + i) % p] for i in range(p)), True)
    if not table.is_symmetric():
        raise SymmetryFailure(f"relabeled table of L({p},{q}) is not symmetric")
    return table


def d_lens(link: TwoBridgeLink) -> CorrectionTable:
    """Correction-term table of the double branched cover L(p, q) of S(p, q).

    Odd p gives the c1-labeled table; even p gives the raw table with
    ``labeled=False``.
    """
    raw = d_lens_raw(link.p, link.q)
    if link.p % 2 == 0:
        return CorrectionTable(link.p, link.q, raw, labeled=False)
    return to_c1_labeling(raw, link.p, link.q)


def f_term(p: int, i: int) -> Fraction:
    """The grading term ((p + (-1)^i p)/2 - i)^2 / (4p) - 1/4 for 0 <= i < p.

    The parity of the representative i in [0, p) decides the branch, so the
    value is not a function on Z/pZ taken alone.
    """
    if p < 1:
        raise InvalidParameter(f"p must be positive, got {p}")
    if not 0 <= i < p:
        raise OutOfRange(f"i = {i} outside [0, {p})")
    center = p if i % 2 == 0 else 0
    return Fraction((center - i) ** 2, 4 * p) - Fraction(1, 4)


def f_table(p: int) -> tuple[Fraction, ...]:
    return tuple(f_term(p, i) for i in range(p))
