"""
Composites and upper bounds
===========================

Connected sums with u2 = 1 come in two shapes, and band moves along a
continued fraction give upper bounds for everything else.
"""

from math import gcd

from h2unknot import normalize
from h2unknot.composite import composite_u2_one, u2_classify, u2_upper_bound
from h2unknot.core import cf_expand
from h2unknot.sweep import enumerate_u2

for summands in [((5, 2), (2, 1)), ((3, 1), (7, 5)), ((3, 1), (3, 1))]:
    a, b = (normalize(*s) for s in summands)
    v = composite_u2_one(a, b)
    print(f"{a} # {b}: u2 = 1 is {v.u2_is_one} ({v.case})", v.witness or "")

# S(p,q) # S(q,p) always has u2 = 1
print(all(composite_u2_one(normalize(p, q), normalize(q, p)).u2_is_one
          for p in range(3, 30) for q in range(2, p) if gcd(p, q) == 1))

link = normalize(23, 3)
print(link, "expansion", list(cf_expand(link)), "upper bound", u2_upper_bound(link))
print(u2_classify(link).as_dict())

# a short census of knots with odd determinant up to 25
census = {}
for cls in enumerate_u2(25, knots_only=True):
    census.setdefault((cls.lower, cls.upper), []).append(str(cls.link))
for (lower, upper), names in sorted(census.items()):
    label = f"u2 = {lower}" if lower == upper else f"{lower} <= u2 <= {upper}"
    print(f"{label}: {len(names)} classes")
