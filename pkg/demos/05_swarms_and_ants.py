"""
Two population methods: particle swarms and ant colonies
========================================================

Swarms share one global best and each particle remembers its own;
velocities blend both pulls with fresh random weights every sweep.
Ant colonies share a pheromone matrix instead: good edges collect
deposits, everything evaporates, and tours condense onto the trails.
"""

import numpy as np

from stochopt import (
    AcoConfig,
    Budget,
    ContinuousLandscape,
    SwarmConfig,
    aco_run,
    pso_run,
    two_route_instance,
)

# A one-dimensional valley with its floor at x = -1.
line = ContinuousLandscape("abs_linear")
rec = pso_run(line, Budget(5_000, target_fitness=1e-2), seed=0)
print(
    f"swarm: |x - (-1)| = {rec.best_fitness:.5f} "
    f"after {rec.evaluations} evals ({rec.extras['sweeps']} sweeps)"
)

# The two increments set the balance between private memory and the
# crowd.  Overweighting the private pull slows convergence down.
def median_evals(cfg):
    outcomes = []
    for seed in range(30):
        r = pso_run(line, Budget(5_000, target_fitness=1e-2), seed, cfg=cfg)
        outcomes.append(r.evaluations_to_success or 5_000)
    return float(np.median(outcomes))

print("median evals, increments 2/2   :", median_evals(SwarmConfig()))
print("median evals, increments 20/.2 :", median_evals(
    SwarmConfig(p_increment=20.0, g_increment=0.2)))

# Four cities, two meaningfully different cycles: the unit ring (length
# 4) and the diagonal alternatives (length 8).
ring = two_route_instance()
rec = aco_run(ring, Budget(200), seed=0)
tau = np.array(rec.extras["pheromone"])
short = sum(tau[a, b] for a, b in [(0, 1), (1, 2), (2, 3), (3, 0)])
diag = sum(tau[a, b] for a, b in [(0, 2), (2, 1), (1, 3), (3, 0)])
print(f"ants: best tour {rec.best_fitness}, trail mass ring {short:.2f} "
      f"vs diagonals {diag:.2f}")

# Evaporation keeps early luck from locking in; the floor tau_min keeps
# every edge explorable forever.
heavy = AcoConfig(rho=0.5, q=4.0)
rec = aco_run(ring, Budget(200), seed=0, cfg=heavy)
tau = np.array(rec.extras["pheromone"])
print("fast evaporation, trail range  :", round(tau.min(), 4), "to", round(tau.max(), 2))
