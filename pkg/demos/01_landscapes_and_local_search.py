"""
Landscapes, greedy descent, and why restarts matter
===================================================

The smallest landscape with a genuine trap: eight corners of a cube,
each with its own cost, moves along the edges.  Greedy descent can stall
on a corner that is better than its three neighbors yet far from the
cheapest corner of all.
"""

from stochopt import (
    Budget,
    cube_fixture,
    cube_state,
    hill_climb_first_accept,
    hill_climb_steepest,
    random_search,
)

cube = cube_fixture()
start = cube_state(1, 0, 0)  # the corner costing 10

# Steepest descent looks at all three neighboring corners and takes the
# best strict improvement.  From the 10-corner it reaches the 8-corner
# and stops: all three neighbors there cost more, so the status says
# local_optimum even though a 5-corner exists on the far side.
rec = hill_climb_steepest(cube, Budget(100), seed=0, start=start)
print("steepest descent :", rec.best_fitness, rec.status, f"{rec.evaluations} evals")

# First-accept climbing drifts across equal-cost corners too, but the
# basin around 8 is strict, so it ends in the same place.
rec = hill_climb_first_accept(cube, Budget(60), seed=0, start=start)
print("first accept     :", rec.best_fitness, rec.status, f"{rec.evaluations} evals")

# The classic fixes. Restarting from a fresh random corner whenever a
# local optimum appears turns the trap into a coverage problem...
rec = hill_climb_steepest(
    cube, Budget(60), seed=0, start=start, restart_on_optimum=True
)
print("with restarts    :", rec.best_fitness, f"{rec.extras['restarts']} restarts")

# ...and so does accepting every move, good or bad (a pure random walk),
# or ignoring structure entirely and sampling corners at random.
rec = hill_climb_first_accept(cube, Budget(200), seed=0, start=start, random_walk=True)
print("random walk      :", rec.best_fitness)

rec = random_search(cube, Budget(100), seed=0)
print("random sampling  :", rec.best_fitness, f"{rec.evaluations} evals")

# Every run leaves the same trace structure behind: the best-so-far
# curve pairs an evaluation index with each strict improvement.
print("best-so-far curve:", rec.best_curve[:4], "...")
