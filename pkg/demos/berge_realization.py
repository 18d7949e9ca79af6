"""
Which lens spaces come from Berge knots
=======================================

A 2-bridge link S(p,q) has u2 = 1 exactly when L(p,q) is integral surgery on
a Berge knot.  The search reports every family that fires, with parameters.
"""

from h2unknot import normalize
from h2unknot.berge import find_berge_witnesses, u2_is_one_2bridge, verify_witness
from h2unknot.catalog import CATALOG

for entry in CATALOG:
    link = entry.link
    ok, witnesses = u2_is_one_2bridge(link)
    print(f"{entry.name:8} {str(link):10} u2 = 1: {ok}")
    for w in witnesses[:3]:
        print("    ", w.as_dict(), "re-verified:", verify_witness(link.p, link.q, w))

# the search bound defaults to k <= p; shrinking it can only drop witnesses
for k_max in (11, 12, 55):
    print(f"k <= {k_max}: {len(find_berge_witnesses(55, 34, k_max))} witness(es)")

# every S(p,1) is realizable through k = 1
print(all(u2_is_one_2bridge(normalize(p, 1))[0] for p in range(2, 60)))
