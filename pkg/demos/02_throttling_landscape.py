"""
Sum and product throttling
==========================

th_c(G) minimizes cops + rounds; th_c_x(G) minimizes cops * (1 + rounds),
the person-hours of the pursuit.  The k-sweep is exact: every row comes
from a full retrograde solve at that cop count.
"""

from copthrottle import check_iq_proposition, throttling_points, throttling_report
from copthrottle.families import complete, cycle, grid, path, petersen, star

for g in [path(9), cycle(4), complete(5), star(5), grid(3, 4), petersen()]:
    rep = throttling_report(g)
    print(f"{g.name:10s} c={rep.cop_number}  th_c={rep.th_sum} (k={rep.th_sum_k})  "
          f"th_c_x={rep.th_prod} (k={rep.th_prod_k})")

# The per-k table for the 9-path: one cop is slow, two or three balance.
print("\n" + throttling_report(path(9), k_max=4).to_csv())

# Throttling points are all achievable (cops, rounds) pairs; the flags mark
# which attain each optimum.
print("throttling points of P9:")
for pt in throttling_points(path(9)):
    tags = []
    if pt.sum_minimum:
        tags.append("sum-min")
    if pt.product_minimum:
        tags.append("prod-min")
    print(f"  (k={pt.k}, p={pt.p}) {' '.join(tags)}")

# The AM-GM-style equivalence: th_c_x hits floor((th_c+1)^2/4) exactly when
# all sum-minimum points sit in I(q) and one of them is also product-minimum.
for g in [complete(2), path(9), cycle(4)]:
    chk = check_iq_proposition(g)
    print(f"I(q) check on {g.name}: left={chk.left} right={chk.right} holds={chk.holds}")
