"""
Simulated annealing: uphill moves at a falling temperature
==========================================================

Acceptance of a cost increase delta happens with probability
exp(-delta / T).  Hot systems wander, cold systems descend; the cooling
schedule carries the search from one regime to the other.
"""

import math
from pathlib import Path

from stochopt import (
    Budget,
    CoolingSchedule,
    metropolis_accept,
    next_temperature,
    parse_tsp_file,
    seeded_rng,
    simulated_annealing,
)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# The acceptance rule in isolation.  At delta = T ln 2 the acceptance
# probability is exactly one half; downhill moves always pass.
rng = seeded_rng(0)
temperature = 2.0
delta = temperature * math.log(2.0)
accepted = sum(metropolis_accept(delta, temperature, rng) for _ in range(10_000))
print(f"acceptance at delta = T ln 2: {accepted / 10_000:.3f} (expect ~0.5)")

# Two schedule shapes ship with the toolkit: geometric decay and linear
# decrement with a floor.
geometric = CoolingSchedule(kind="geometric", t0=100.0, rate=0.8)
linear = CoolingSchedule(kind="linear", t0=100.0, decrement=30.0, t_floor=1.0)
print("geometric:", [round(next_temperature(geometric, i), 2) for i in range(5)])
print("linear   :", [round(next_temperature(linear, i), 2) for i in range(5)])

# On an actual tour instance the starting temperature matters more than
# anything else, so by default it is calibrated from a short random walk
# (ten times the mean cost change seen along it).
eight = parse_tsp_file(FIXTURES / "eight.tsp")
rec = simulated_annealing(eight, Budget(10_000, target_fitness=242.465), seed=0)
print(
    f"annealed tour: {rec.best_fitness:.4f} after {rec.evaluations} evals "
    f"({rec.status}, calibrated t0 = {rec.extras['t0']:.1f})"
)

# The run keeps score of its uphill traffic: how many worsening moves
# were proposed and how many the temperature let through.
print(
    "uphill accepted/proposed:",
    f"{rec.extras['uphill_accepted']}/{rec.extras['uphill_proposed']}",
)
