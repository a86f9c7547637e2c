"""Random search and the two hill-climbing strategies.

`random_search` draws independent uniform solutions and keeps the best.
`hill_climb_first_accept` samples one neighbor at a time and, by default,
moves whenever the neighbor is no worse than the current solution, so
plateaus can drift; `random_walk=True` switches to the unconditional-move
variant, where only the best-so-far bookkeeping does the optimizing.
`hill_climb_steepest` enumerates the whole neighborhood, moves only on a
strict improvement (ties go to the lowest-index neighbor), and stops at
the first local optimum.
"""

from __future__ import annotations

from .core import Budget, Run, RunRecord


def random_search(problem, budget: Budget, seed: int) -> RunRecord:
    run = Run(problem, budget, seed, "random_search")
    while not run.finished:
        run.evaluate(problem.random_solution(run.rng))
    return run.record()


def hill_climb_first_accept(
    problem,
    budget: Budget,
    seed: int,
    start=None,
    random_walk: bool = False,
) -> RunRecord:
    run = Run(problem, budget, seed, "hill_climb")
    current = (
        problem.validate(start) if start is not None else problem.random_solution(run.rng)
    )
    f_current = run.evaluate(current)
    while not run.finished:
        candidate, _ = problem.sample_neighbor(current, run.rng)
        f_candidate = run.evaluate(candidate)
        if random_walk or f_candidate <= f_current:
            current, f_current = candidate, f_candidate
    return run.record(extras={"random_walk": random_walk})


def hill_climb_steepest(
    problem,
    budget: Budget,
    seed: int = 0,
    start=None,
    restart_on_optimum: bool = False,
) -> RunRecord:
    run = Run(problem, budget, seed, "steepest_descent")
    current = (
        problem.validate(start) if start is not None else problem.random_solution(run.rng)
    )
    f_current = run.evaluate(current)
    status = None
    restarts = 0
    while not run.finished:
        best = None
        best_f = f_current
        enumerated_all = True
        for candidate, _ in problem.neighbors(current):
            if run.finished:
                enumerated_all = False
                break
            f = run.evaluate(candidate)
            if f < best_f:  # strict; first strictly-best neighbor wins ties
                best, best_f = candidate, f
        if best is not None:
            current, f_current = best, best_f
            continue
        if not enumerated_all:
            break  # budget died mid-enumeration; local optimality unknown
        if restart_on_optimum and not run.finished:
            restarts += 1
            current = problem.random_solution(run.rng)
            f_current = run.evaluate(current)
            continue
        status = "local_optimum"
        break
    return run.record(status, extras={"restarts": restarts})
