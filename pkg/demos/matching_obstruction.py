"""
The even positive matching test
===============================

If a knot with odd determinant has u2 = 1, some sign e and unit u make every
I(i) = e*d(u*i) + f(i) an even nonnegative integer.  For L(23,3) no choice
works, and the near misses show why.
"""

from h2unknot import normalize
from h2unknot.dinv import d_lens
from h2unknot.obstruction import matching_exists, transfer_obstruction

report = matching_exists(d_lens(normalize(23, 3)))
print("feasible:", report.feasible, "over", len(report.diagnostics), "pairs")

for dg in report.parity_passing:
    seq = [int(x) for x in dg.values]
    print(f"e = {dg.epsilon:+d}, u = {dg.u:2}: {seq}  negative at {list(dg.failure_indices)}")

# the same failures persist for any knot whose cover is p/q surgery on a
# companion that unknots by a negative-to-positive change
for assume in ("neg-to-pos", "amphicheiral"):
    print(assume, "->", transfer_obstruction(normalize(23, 3), assume).conclusion)

# existence is only necessary: L(3,1) passes and decides nothing
print("L(3,1) feasible:", matching_exists(d_lens(normalize(3, 1))).feasible)
