"""
The headline graph families
===========================

M(ell) separates the product throttling optimum from both the cop-number-
and domination-sized placements; the spider-with-cores family realizes
high sum throttling from any high-cop-number core.
"""

from copthrottle import capt_k, cop_number, domination_number, solve_k
from copthrottle.families import (
    attach_star,
    h_family,
    m_ell,
    m_ell_cop_placement,
    path,
    petersen,
)

# M(3): a C4 with three pendant paths, then a leaf on every vertex.
g = m_ell(3)
print(f"{g.name}: order {g.n} (6*3+8), domination number {domination_number(g)[0]}")
print("cop number:", cop_number(g))

# The full separation lives at ell = 7 (order 50); the three-cop placement
# sits on each pendant path.  Run the m-ell verify suite (or the acceptance
# tests) for the exhaustive k=2 sweep; here the placement and one solve:
ell = 7
g7 = m_ell(ell)
placement = m_ell_cop_placement(ell)
print(f"\nM(7): order {g7.n}, three-cop placement {placement}")
table = solve_k(g7, 3, budget=10**9)
c3 = table.placement_value(placement)
print(f"capt(M(7); placement) = {c3}, so th_prod work = {3 * (1 + c3)} person-rounds")
c2, _ = capt_k(g7, 2, budget=10**9)
print(f"capt_2(M(7)) = {c2}, so two cops need {2 * (1 + c2)} person-rounds")
print(f"gamma-many cops (25) need {2 * 25} person-rounds")

# A spider with Petersen cores: the backbone of the high-throttling family.
h = h_family(3, 2, petersen())
print(f"\n{h.name}: order {h.n} = 1 + 3*2 + 3*10")

# Star attachment keeps throttling under control: members of S(P4) of
# order 9 all have th_c <= 4.
from copthrottle import throttling_report

sample = attach_star(path(4), 4, [(0, 1), (2, 3)])
print(f"S(P4) member of order {sample.n}: th_c = {throttling_report(sample).th_sum}")
