"""
When does a hidden-variable model exist?
========================================

For two settings per side, a mixture of deterministic strategies
reproduces the four correlations exactly when all four cyclic CHSH
combinations lie in [-2, 2].  Here the LP answer and the inequality
answer are compared along the singlet's correlations as the detector
angle changes.
"""

# %%
import math

import numpy as np

from bellforge import CorrelationTable, correlation_table, family_S, fine_feasible, fine_inequalities, named_states

psi = named_states()["singlet"]
for deg in range(0, 181, 15):
    table = correlation_table(psi, family_S(), math.radians(deg))
    combos = fine_inequalities(table)
    res = fine_feasible(table)
    worst = max(abs(c) for c in combos)
    print(f"{deg:4d} deg  max|combination| = {worst:6.4f}  LP: {'feasible' if res.feasible else 'infeasible'}")

# %%
# A feasible table comes with a witness: weights on deterministic strategies.
table = correlation_table(psi, family_S(), math.radians(80))
res = fine_feasible(table)
for strat, w in sorted(res.witness.items(), key=lambda kv: -kv[1]):
    print(f"  {strat.label()}  {w:.4f}")

# %%
# Random tables: the two tests never disagree.
rng = np.random.default_rng(0)

keys = [(1, 1), (1, 2), (2, 1), (2, 2)]
agree = 0
for _ in range(1000):
    t = CorrelationTable((2, 2), dict(zip(keys, rng.uniform(-1, 1, 4))))
    agree += fine_feasible(t).feasible == all(abs(c) <= 2 for c in fine_inequalities(t))
print(f"agreement on 1000 random tables: {agree}/1000")
