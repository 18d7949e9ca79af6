"""Classification sweeps over all 2-bridge links up to a given determinant."""

from __future__ import annotations

import json
import logging
from math import gcd
from pathlib import Path

from .composite import U2Classification, u2_classify
from .core import TwoBridgeLink, mod_inverse

log = logging.getLogger(__name__)

__all__ = ["class_representatives", "enumerate_u2", "dump_record", "load_cache"]


def class_representatives(max_p: int, knots_only: bool = False):
    """Yield S(p, q) with q = min(q, q^{-1} mod p), p = 2..max_p ascending."""
    for p in range(2, max_p + 1):
        if knots_only and p % 2 == 0:
            continue
        for q in range(1, p):
            if gcd(p, q) == 1 and q <= mod_inverse(q, p):
                yield TwoBridgeLink(p, q)


def dump_record(cls: U2Classification) -> str:
    return json.dumps(cls.as_dict())


def _parse_record(line: str) -> U2Classification:
    rec = json.loads(line)
    link = TwoBridgeLink(int(rec["p"]), int(rec["q"]))
    cls = U2Classification(link, int(rec["lower"]), int(rec["upper"]), tuple(rec["provenance"]))
    if rec["exact"] != cls.exact:
        raise ValueError("inconsistent exact field")
    return cls


def load_cache(path) -> dict[tuple[int, int], U2Classification]:
    """Read a JSON-lines cache; corrupt lines are skipped with a warning."""
    cache = {}
    path = Path(path)
    if not path.exists():
        return cache
    with path.open() as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                cls = _parse_record(line)
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
                continue
            cache[(cls.link.p, cls.link.q)] = cls
    return cache


def enumerate_u2(max_p: int, knots_only: bool = False, cache_path=None):
    """Classify one representative per equivalence class, in order.

    With ``cache_path`` previously computed records are reused and new ones
    appended, so an interrupted sweep can be resumed.
    """
    cache = load_cache(cache_path) if cache_path else {}
    sink = open(cache_path, "a") if cache_path else None
    try:
        for link in class_representatives(max_p, knots_only):
            cls = cache.get((link.p, link.q))
            if cls is None:
                cls = u2_classify(link)
                if sink is not None:
                    sink.write(dump_record(cls) + "\n")
                    sink.flush()
            yield cls
    finally:
        if sink is not None:
            sink.close()
