"""
Exact Cops and Robbers on small graphs
======================================

The engine solves the full game by retrograde analysis: states are
(cop multiset, robber vertex) with the cops to move, and layer t of the
fixpoint holds exactly the states the cops win within t rounds.
"""

from copthrottle import (
    GameState,
    capt_k,
    cop_number,
    optimal_moves,
    solve_placement,
)
from copthrottle.families import cycle, path, petersen

# One cop in the middle of a path: capture takes exactly the radius.
p5 = path(5)
value, table = solve_placement(p5, (2,))
print("capt(P5; {2}) =", value)

# The robber survives forever against one cop on a 4-cycle...
c4 = cycle(4)
print("capt(C4; {0}) =", solve_placement(c4, (0,))[0])

# ...but two antipodal cops finish in one round.
print("capt(C4; {0,2}) =", solve_placement(c4, (0, 2))[0])

# capt_k minimizes over every multiset of k starting vertices.
for k in (1, 2, 3):
    v, witness = capt_k(path(9), k)
    print(f"capt_{k}(P9) = {v}  (witness {witness})")

# Cop numbers by increasing-k search; Petersen is the classic 3-cop graph.
print("c(P9) =", cop_number(path(9)))
print("c(C4) =", cop_number(c4))
print("c(Petersen) =", cop_number(petersen()))

# Optimal play extracted from the solved table: the cop walks the robber
# down, the robber retreats into the corner.
cops, robber = (2,), 0
print("\noptimal play on P5 from cops", cops, "robber", robber)
rounds = 0
while robber not in cops:
    cops = optimal_moves(p5, table, GameState(cops, robber), "cops")[0]
    rounds += 1
    if robber in cops:
        break
    robber = optimal_moves(p5, table, GameState(cops, robber), "robber")[0]
print(f"  captured at {robber} after {rounds} rounds")
