"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 domain error, 3 failed internal
check or regression, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import __version__
from .berge import find_berge_witnesses, u2_is_one_2bridge, witnesses_as_dict
from .catalog import run_catalog, run_selftest
from .composite import composite_u2_one, tangle_upper_bound, u2_classify, u2_upper_bound
from .core import cf_expand, normalize
from .dinv import CorrectionTable, d_lens, d_lens_raw
from .errors import DomainError, SymmetryFailure
from .obstruction import matching_exists, transfer_obstruction
from .sweep import dump_record, enumerate_u2

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def fmt_q(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(out, text):
    out.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj)


# -- subcommands ------------------------------------------------------------

def cmd_u2(args, out):
    link = normalize(args.p, args.q)
    cls = u2_classify(link)
    if args.format == "json":
        return _emit(out, _json(cls.as_dict()))
    if args.format == "csv":
        d = cls.as_dict()
        return _emit(out, _csv([["p", "q", "lower", "upper", "exact"],
                                [d["p"], d["q"], d["lower"], d["upper"], "" if d["exact"] is None else d["exact"]]]))
    lines = [f"{link}  p/q = {list(cf_expand(link))}"]
    if link.p == 1:
        lines.append("unknot")
    else:
        _, ws = u2_is_one_2bridge(link)
        if ws:
            w = ws[0]
            lines.append(f"Berge-realizable: L({link.p},{w.beta}), family {w.family}, k = {w.k}"
                         f" ({len(ws)} witnesses)")
        else:
            lines.append(f"not Berge-realizable (no witness with k <= {link.p}): u2 >= 2")
            lines.append(f"suffix bound: u2 <= {cls.upper}")
    if cls.exact is not None:
        lines.append(f"u2 = {cls.exact} (exact)")
    else:
        lines.append(f"{cls.lower} <= u2 <= {cls.upper}")
    _emit(out, "\n".join(lines))


def cmd_berge(args, out):
    link = normalize(args.p, args.q)
    ws = find_berge_witnesses(link.p, link.q, args.kmax)
    if args.format == "json":
        return _emit(out, _json(witnesses_as_dict(link.p, link.q, ws)))
    if args.format == "csv":
        rows = [["family", "k", "ksq_sign", "params"]]
        rows += [[w.family, w.k, w.ksq_sign, ";".join(f"{n}={v}" for n, v in w.params)] for w in ws]
        return _emit(out, _csv(rows))
    kmax = args.kmax or link.p
    inverse = pow(link.q, -1, link.p) if link.p > 1 else 0
    note = ""
    if inverse != link.q:
        n_inv = len(find_berge_witnesses(link.p, inverse, args.kmax))
        note = f"\nsame manifold L({link.p},{inverse}): {n_inv} witnesses with k <= {kmax}"
    if not ws:
        return _emit(out, f"L({link.p},{link.q}): no Berge witness with k <= {kmax}" + note)
    lines = [f"L({link.p},{link.q}): {len(ws)} Berge witnesses with k <= {kmax}"]
    for w in ws:
        params = ", ".join(f"{n}={v}" for n, v in w.params)
        lines.append(f"  family {w.family:<3} k={w.k:<4} beta = {'+' if w.ksq_sign > 0 else '-'}k^2  {params}")
    _emit(out, "\n".join(lines) + note)


def cmd_dtable(args, out):
    link = normalize(args.p, args.q)
    if args.raw:
        table = CorrectionTable(link.p, link.q, d_lens_raw(link.p, link.q), labeled=False)
    else:
        table = d_lens(link)
    if args.format == "json":
        return _emit(out, _json(table.as_dict()))
    if args.format == "csv":
        return _emit(out, table.to_csv())
    label = "i" if table.labeled else "j"
    lines = [f"d(L({link.p},{link.q}), {label})" + ("" if table.labeled else "  [raw recursion order]")]
    lines += [f"{i:>4}  {fmt_q(v)}" for i, v in enumerate(table)]
    _emit(out, "\n".join(lines))


def cmd_match(args, out):
    link = normalize(args.p, args.q)
    report = matching_exists(d_lens(link))
    if args.format == "json":
        return _emit(out, _json(report.as_dict()))
    if args.format == "csv":
        rows = [["epsilon", "u", "first_failure", "failure_indices"]]
        rows += [[dg.epsilon, dg.u, dg.first_failure.value, " ".join(map(str, dg.failure_indices))]
                 for dg in report.diagnostics]
        return _emit(out, _csv(rows))
    lines = [f"L({link.p},{link.q}): {len(report.diagnostics)} (epsilon, u) pairs searched"]
    if report.feasible:
        lines.append(f"even positive matching exists: {list(report.feasible_pairs)} (inconclusive for u2 = 1)")
    else:
        lines.append("no even positive matching: u2 > 1")
    for dg in report.parity_passing:
        seq = ",".join(str(x.numerator) if x.denominator == 1 else fmt_q(x) for x in dg.values)
        status = "ok" if dg.feasible else f"negative at i = {list(dg.failure_indices)}"
        lines.append(f"  parity passes for epsilon={dg.epsilon:+d}, u={dg.u}: I = ({seq})  {status}")
    _emit(out, "\n".join(lines))


def cmd_transfer(args, out):
    link = normalize(args.p, args.q)
    rep = transfer_obstruction(link, args.assume)
    upper = tangle_upper_bound(link)
    companion = normalize(link.q, link.p)
    lower = 2 if rep.obstructed else 1
    if args.format == "json":
        d = rep.as_dict()
        d.update(lower=lower, upper=upper, exact=lower if lower == upper else None)
        return _emit(out, _json(d))
    if args.format == "csv":
        rows = [["epsilon", "u", "persists"]] + [list(c) for c in rep.certificate]
        return _emit(out, _csv(rows))
    counts = {}
    for _, _, why in rep.certificate:
        counts[why] = counts.get(why, 0) + 1
    lines = [
        f"K: ({link.p},{link.q})-tangle unknotting number one knot, Sigma(K) = S^3_{{{link.p}/{link.q}}}(C)",
        f"assumption on C: {rep.assumption.value}",
        "persistent failures: " + ", ".join(f"{k} x{v}" for k, v in sorted(counts.items())),
    ]
    if rep.obstructed:
        lines.append("conclusion: u2(K) >= 2")
    else:
        lines.append("conclusion: inconclusive")
    lines.append(f"upper bound: u2(K) <= u2({companion}) + 1 = {upper}")
    if lower == upper:
        lines.append(f"u2(K) = {upper}")
    _emit(out, "\n".join(lines))


def cmd_composite(args, out):
    a, b = normalize(args.p, args.q), normalize(args.r, args.s)
    v = composite_u2_one(a, b, mirror=args.mirror)
    if args.format == "json":
        return _emit(out, _json(v.as_dict()))
    if args.format == "csv":
        return _emit(out, _csv([["u2_is_one", "case", "witness"],
                                [v.u2_is_one, v.case, _json(v.witness)]]))
    if not v.u2_is_one:
        return _emit(out, f"{a} # {b}: no Case A or Case B form\nu2 >= 2")
    w = v.witness
    if v.case == "CaseA":
        x, y = w["ordering"]
        detail = f"S({y[0]},{y[1]}) = S({x[1]},{x[0]})" + (" up to the lift of r" if w["lifted"] else "")
    else:
        detail = f"v={w['v']}, epsilon={w['epsilon']:+d}, a={w['a']}, b={w['b']}"
    case = {"CaseA": "Case A", "CaseB": "Case B"}[v.case]
    _emit(out, f"{a} # {b}: {detail}\nu2 = 1 ({case})")


def cmd_bound(args, out):
    link = normalize(args.p, args.q)
    ub = u2_upper_bound(link)
    if args.format == "json":
        return _emit(out, _json({"p": link.p, "q": link.q, "upper": ub, "cf": list(cf_expand(link))}))
    if args.format == "csv":
        return _emit(out, _csv([["p", "q", "upper"], [link.p, link.q, ub]]))
    _emit(out, f"{link}  p/q = {list(cf_expand(link))}\nu2 <= {ub}")


def cmd_enumerate(args, out):
    if args.max_p < 1:
        raise UsageError("--max-p must be positive")
    records = enumerate_u2(args.max_p, args.knots_only, args.cache)
    if args.format == "csv":
        out.write("p,q,lower,upper,exact\n")
    for cls in records:
        if args.format == "json":
            out.write(dump_record(cls) + "\n")
        elif args.format == "csv":
            exact = "" if cls.exact is None else cls.exact
            out.write(f"{cls.link.p},{cls.link.q},{cls.lower},{cls.upper},{exact}\n")
        else:
            rng = f"u2 = {cls.exact}" if cls.exact is not None else f"{cls.lower} <= u2 <= {cls.upper}"
            out.write(f"{str(cls.link):<12} {rng}\n")


def _report_checks(checks, args, out) -> int:
    if args.format == "json":
        _emit(out, _json([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]))
    elif args.format == "csv":
        _emit(out, _csv([["name", "ok", "detail"]] + [[c.name, c.ok, c.detail] for c in checks]))
    else:
        for c in checks:
            out.write(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "") + "\n")
        failed = sum(not c.ok for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_INTERNAL


def cmd_catalog(args, out):
    return _report_checks(run_catalog(), args, out)


def cmd_selftest(args, out):
    return _report_checks(run_selftest(), args, out)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = _Parser(prog="h2unknot", description="H(2)-unknotting numbers of 2-bridge links")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pq(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.set_defaults(func=func)
        return sp

    pq("u2", cmd_u2, "classify u2 of S(p,q)")
    sp = pq("berge", cmd_berge, "list Berge witnesses for L(p,q)")
    sp.add_argument("--kmax", type=int, default=None)
    sp = pq("dtable", cmd_dtable, "correction terms of L(p,q)")
    sp.add_argument("--raw", action="store_true", help="recursion order instead of c1 labels")
    pq("match", cmd_match, "even positive matching search")
    sp = pq("transfer", cmd_transfer, "obstruction for tangle unknotting number one knots")
    sp.add_argument("--assume", required=True, choices=("neg-to-pos", "amphicheiral"))
    pq("bound", cmd_bound, "suffix upper bound on u2(S(p,q))")

    sp = sub.add_parser("composite", parents=[common], help="u2 = 1 test for S(p,q) # S(r,s)")
    for name in ("p", "q", "r", "s"):
        sp.add_argument(name, type=int)
    sp.add_argument("--mirror", action="store_true", help="compare summands up to mirror image")
    sp.set_defaults(func=cmd_composite)

    sp = sub.add_parser("enumerate", parents=[common], help="classify all S(p,q) with p <= N")
    sp.add_argument("--max-p", type=int, required=True)
    sp.add_argument("--knots-only", action="store_true")
    sp.add_argument("--cache", default=None, help="JSON-lines cache file")
    sp.set_defaults(func=cmd_enumerate)

    sub.add_parser("catalog", parents=[common], help="verify the built-in fixtures").set_defaults(func=cmd_catalog)
    sub.add_parser("selftest", parents=[common], help="recompute all published values").set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        status = args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (SymmetryFailure, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return status or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
