"""Built-in knot fixtures and the published regression values.

``run_selftest`` recomputes every published number and reports one
``Check`` per item; the CLI ``selftest`` and ``catalog`` commands are thin
wrappers around it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr

from .berge import find_berge_witnesses, u2_is_one_2bridge
from .composite import composite_u2_one, tangle_upper_bound, u2_classify, u2_upper_bound
from .core import determinant, normalize
from .dinv import d_lens, f_table
from .obstruction import Failure, i_sequence, matching_exists, transfer_obstruction
from .sweep import enumerate_u2

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "D_L23_3",
    "F_23",
    "I_L23_3",
    "Check",
    "check_entry",
    "run_catalog",
    "run_selftest",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    given: tuple[int, int]  # as written in the source, before normalization
    expected_u2: int
    expected_witness: tuple[str, int, int] | None = None  # (family, k, d)

    @property
    def link(self):
        return normalize(*self.given)


CATALOG = (
    CatalogEntry("9_21", (43, 25), 1, ("II", 5, 2)),
    CatalogEntry("9_23", (45, 64), 1, ("II", 8, 3)),
    CatalogEntry("9_26", (47, 81), 1, ("II", 9, 2)),
    CatalogEntry("9_31", (55, 144), 1, ("III", 12, 5)),
    CatalogEntry("S(23,3)", (23, 3), 2),
)

_h = 46
D_L23_3 = tuple(Fr(n, _h) for n in (
    69, 85, 41, 29, 49, 9, 1, 25, -11, -15, 13, -19, -19,
    13, -15, -11, 25, 1, 9, 49, 29, 41, 85,
))
F_23 = tuple(Fr(n, _h) for n in (
    253, -11, 209, -7, 169, 1, 133, 13, 101, 29, 73, 49, 49,
    73, 29, 101, 13, 133, 1, 169, -7, 209, -11,
))
I_L23_3 = (4, 0, 4, -2, 4, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 2, 0, 2, 0, 4, -2, 4, 0)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def check_entry(entry: CatalogEntry) -> Check:
    link = entry.link
    cls = u2_classify(link)
    ok = cls.exact == entry.expected_u2
    label = entry.name if entry.name == str(link) else f"{entry.name} = {link}"
    detail = f"{label}: u2 in [{cls.lower}, {cls.upper}]"
    if entry.expected_witness is not None:
        fam, k, d = entry.expected_witness
        hits = [w for w in find_berge_witnesses(link.p, link.q)
                if (w.family, w.k, w.d) == (fam, k, d)]
        ok = ok and bool(hits)
        detail += f"; witness family {fam} k={k} d={d} {'found' if hits else 'MISSING'}"
    return Check(f"catalog {entry.name}", ok, detail)


def run_catalog() -> list[Check]:
    return [check_entry(e) for e in CATALOG]


def _checks():
    yield Check("normalize S(45,64) -> S(45,19)", normalize(45, 64) == normalize(45, 19) and normalize(45, 64).q == 19)
    yield Check("determinant S(43,25) = 43", determinant(normalize(43, 25)) == 43)
    yield Check("determinant S(23,3) = 23", determinant(normalize(23, 3)) == 23)

    table = d_lens(normalize(23, 3))
    yield Check("d(L(23,3), i) table", table.values == D_L23_3)
    yield Check("f(i) table, p = 23", f_table(23) == F_23)

    for u in (8, 15):
        seq = i_sequence(table, -1, u)
        yield Check(f"I sequence, epsilon = -1, u = {u}", seq == tuple(Fr(x) for x in I_L23_3))
    for eps in (1, -1):
        first = {i_sequence(table, eps, u)[0] for u in range(1, 23)}
        yield Check(f"I(0) = ({eps}*3 + 11)/2 for every u", first == {Fr(eps * 3 + 11, 2)})

    report = matching_exists(table)
    passing = [(dg.epsilon, dg.u, dg.first_failure, dg.failure_indices) for dg in report.parity_passing]
    yield Check("L(23,3) has no even positive matching",
                not report.feasible
                and passing == [(-1, 8, Failure.NEGATIVE, (3, 20)), (-1, 15, Failure.NEGATIVE, (3, 20))],
                f"parity-passing pairs: {[(e, u) for e, u, *_ in passing]}")

    cls = u2_classify(normalize(23, 3))
    yield Check("u2(S(23,3)) = 2 exactly", (cls.lower, cls.upper) == (2, 2))
    yield Check("suffix bound u2(S(23,3)) <= 2", u2_upper_bound(normalize(23, 3)) == 2)

    for assume in ("neg-to-pos", "amphicheiral"):
        tr = transfer_obstruction(normalize(23, 3), assume)
        upper = tangle_upper_bound(normalize(23, 3))
        yield Check(f"transfer ({assume}): u2(K) = 2", tr.obstructed and upper == 2)

    for given, k in (((43, 25), 5), ((47, 81), 9)):
        ok, ws = u2_is_one_2bridge(normalize(*given))
        yield Check(f"u2(S{given}) = 1", ok and any(w.k == k and w.family == "II" for w in ws))

    v = composite_u2_one(normalize(5, 2), normalize(2, 1))
    yield Check("S(5,2) # S(2,1) has u2 = 1 (Case A)", v.u2_is_one and v.case == "CaseA")

    swept = {(c.link.p, c.link.q): c.exact for c in enumerate_u2(55, knots_only=True)}
    yield Check("enumerate to p = 55 lists S(55,34) with u2 = 1", swept.get((55, 34)) == 1)

    yield from run_catalog()


def run_selftest() -> list[Check]:
    return list(_checks())
