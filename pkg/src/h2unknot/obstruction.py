"""Even positive matchings and their transfer to tangle-unknotting knots.

For a knot with odd determinant p and u2 = 1 there must be a sign e and a
unit u of Z/pZ such that every

    I(i) = e * d(u*i) + f(i),   0 <= i < p,

is an even nonnegative integer.  :func:`matching_exists` searches all (e, u)
exhaustively; nonexistence shows u2 > 1, while existence decides nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .core import TwoBridgeLink, units_of
from .dinv import CorrectionTable, d_lens, f_table
from .errors import EvenOrder, MismatchedOrder, NonUnit

__all__ = [
    "Failure",
    "PairDiagnostic",
    "MatchingReport",
    "i_sequence",
    "classify_sequence",
    "matching_exists",
    "Dominance",
    "dominance_compare",
    "TransferAssumption",
    "TransferReport",
    "transfer_obstruction",
]


class Failure(str, Enum):
    NON_INTEGER = "NonInteger"
    ODD_INTEGER = "OddInteger"
    NEGATIVE = "Negative"
    NONE = "None"


def _require_labeled(table: CorrectionTable):
    if table.p % 2 == 0 or not table.labeled:
        raise EvenOrder(f"matching needs a c1-labeled table of odd order, got p = {table.p}")


def i_sequence(table: CorrectionTable, epsilon: int, u: int) -> tuple[Fraction, ...]:
    """I(i) = epsilon * d(u*i mod p) + f(i) for i = 0..p-1."""
    _require_labeled(table)
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon}")
    p = table.p
    if gcd(u, p) != 1:
        raise NonUnit(f"{u} is not a unit modulo {p}")
    f = f_table(p)
    d = table.values
    return tuple(epsilon * d[(u * i) % p] + f[i] for i in range(p))


def classify_sequence(seq) -> tuple[Failure, tuple[int, ...]]:
    """First failing test and the indices that fail it.

    Tests run in the order integrality, parity, sign, so a Negative verdict
    means the sequence already passed the parity test.
    """
    seq = [Fraction(x) for x in seq]
    scale = lcm(*(x.denominator for x in seq)) if seq else 1
    return _classify_scaled([x.numerator * (scale // x.denominator) for x in seq], scale)


def _classify_scaled(nums, scale):
    # entry i is nums[i] / scale
    bad = tuple(i for i, n in enumerate(nums) if n % scale)
    if bad:
        return Failure.NON_INTEGER, bad
    two = 2 * scale
    bad = tuple(i for i, n in enumerate(nums) if n % two)
    if bad:
        return Failure.ODD_INTEGER, bad
    bad = tuple(i for i, n in enumerate(nums) if n < 0)
    if bad:
        return Failure.NEGATIVE, bad
    return Failure.NONE, ()


@dataclass(frozen=True)
class PairDiagnostic:
    """Outcome for one (epsilon, u); entry i of I is ``scaled[i] / scale``."""

    epsilon: int
    u: int
    scaled: tuple[int, ...] = field(repr=False)
    scale: int
    first_failure: Failure
    failure_indices: tuple[int, ...] = ()

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.scale) for n in self.scaled)

    @property
    def parity_ok(self) -> bool:
        return self.first_failure in (Failure.NEGATIVE, Failure.NONE)

    @property
    def feasible(self) -> bool:
        return self.first_failure is Failure.NONE

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "u": self.u,
            "I": [[x.numerator, x.denominator] for x in self.values],
            "first_failure": self.first_failure.value,
            "failure_indices": list(self.failure_indices),
        }


@dataclass(frozen=True)
class MatchingReport:
    p: int
    q: int
    feasible: bool
    feasible_pairs: tuple[tuple[int, int], ...]
    diagnostics: tuple[PairDiagnostic, ...] = field(repr=False)

    @property
    def parity_passing(self) -> tuple[PairDiagnostic, ...]:
        return tuple(dg for dg in self.diagnostics if dg.parity_ok)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "feasible": self.feasible,
            "feasible_pairs": [list(pair) for pair in self.feasible_pairs],
            "diagnostics": [dg.as_dict() for dg in self.diagnostics],
        }


def matching_exists(table: CorrectionTable) -> MatchingReport:
    """Search every sign and unit for an even positive matching.

    Diagnostics cover all (epsilon, u) pairs in order epsilon = +1 then -1,
    u ascending.  For p = 1 the single trivial automorphism is used.
    """
    _require_labeled(table)
    p = table.p
    f = f_table(p)
    scale = lcm(*(x.denominator for x in table.values), *(x.denominator for x in f))
    d_num = [x.numerator * (scale // x.denominator) for x in table.values]
    f_num = [x.numerator * (scale // x.denominator) for x in f]
    units = units_of(p) or [1]
    diagnostics = []
    for eps in (1, -1):
        for u in units:
            nums = tuple(eps * d_num[(u * i) % p] + f_num[i] for i in range(p))
            failure, where = _classify_scaled(nums, scale)
            diagnostics.append(PairDiagnostic(eps, u, nums, scale, failure, where))
    pairs = tuple((dg.epsilon, dg.u) for dg in diagnostics if dg.feasible)
    return MatchingReport(p, table.q, bool(pairs), pairs, tuple(diagnostics))


@dataclass(frozen=True)
class Dominance:
    kind: str  # "DominatesEven", "Equal" or "Fails"
    index: int | None = None
    reason: str | None = None  # "NonInteger", "OddDifference" or "Negative"

    def as_dict(self) -> dict:
        return {"kind": self.kind, "index": self.index, "reason": self.reason}


def dominance_compare(lower: CorrectionTable, upper: CorrectionTable) -> Dominance:
    """Check that upper(i) - lower(i) is a nonnegative even integer for all i."""
    if lower.p != upper.p:
        raise MismatchedOrder(f"tables of order {lower.p} and {upper.p}")
    if lower.values == upper.values:
        return Dominance("Equal")
    for i, (lo, hi) in enumerate(zip(lower.values, upper.values)):
        diff = hi - lo
        if diff.denominator != 1:
            return Dominance("Fails", i, "NonInteger")
        if diff.numerator % 2:
            return Dominance("Fails", i, "OddDifference")
        if diff < 0:
            return Dominance("Fails", i, "Negative")
    return Dominance("DominatesEven")


class TransferAssumption(str, Enum):
    """How the companion knot C of a tangle-unknotting knot unknots.

    NEG_TO_POS: a negative-to-positive crossing change unknots C, so
    d(Sigma(K), i) - d(L(p,q), i) is a nonnegative even integer for all i.
    AMPHICHEIRAL: C is amphicheiral with unknotting number one, which forces
    the two tables to agree.
    """

    NEG_TO_POS = "neg-to-pos"
    AMPHICHEIRAL = "amphicheiral"


@dataclass(frozen=True)
class TransferReport:
    link: TwoBridgeLink
    assumption: TransferAssumption
    obstructed: bool
    # per (epsilon, u): "parity", "negative", or "none" when nothing persists
    certificate: tuple[tuple[int, int, str], ...]

    @property
    def conclusion(self) -> str:
        return "U2AtLeastTwo" if self.obstructed else "Inconclusive"

    def as_dict(self) -> dict:
        return {
            "p": self.link.p,
            "q": self.link.q,
            "assumption": self.assumption.value,
            "conclusion": self.conclusion,
            "certificate": [{"epsilon": e, "u": u, "persists": why} for e, u, why in self.certificate],
        }


def _persistent_failure(dg: PairDiagnostic, assumption: TransferAssumption) -> str:
    if assumption is TransferAssumption.AMPHICHEIRAL:
        if dg.first_failure is Failure.NEGATIVE:
            return "negative"
        return "none" if dg.feasible else "parity"
    # Adding an even, nonnegative e(i) to every d keeps all parities, and
    # for epsilon = -1 it can only lower I, so negative entries stay negative.
    if not dg.parity_ok:
        return "parity"
    if dg.epsilon == -1 and dg.first_failure is Failure.NEGATIVE:
        return "negative"
    return "none"


def transfer_obstruction(link: TwoBridgeLink, assumption: TransferAssumption | str) -> TransferReport:
    """Carry the matching obstruction of L(p, q) over to a knot K with
    Sigma(K) = S^3_{p/q}(C), under the given assumption on C."""
    assumption = TransferAssumption(assumption)
    if link.p % 2 == 0:
        raise EvenOrder(f"transfer needs odd determinant, got p = {link.p}")
    report = matching_exists(d_lens(link))
    cert = tuple((dg.epsilon, dg.u, _persistent_failure(dg, assumption)) for dg in report.diagnostics)
    obstructed = all(why != "none" for _, _, why in cert)
    return TransferReport(link, assumption, obstructed, cert)
