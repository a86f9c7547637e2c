import pytest

from stochopt import (
    Budget,
    NoNeighborError,
    TabletopInstance,
    cube_state,
    hill_climb_first_accept,
    hill_climb_steepest,
    random_search,
)

START = cube_state(1, 0, 0)  # the cost-10 vertex


def test_steepest_descent_stalls_at_the_secondary_basin(cube):
    rec = hill_climb_steepest(cube, Budget(100), start=START)
    assert rec.status == "local_optimum"
    assert rec.best_fitness == 8.0
    assert rec.best_solution == cube_state(1, 0, 1)
    # start + two full neighborhood sweeps
    assert rec.evaluations == 7
    assert rec.extras["restarts"] == 0


def test_steepest_descent_reports_exhaustion_mid_sweep(cube):
    rec = hill_climb_steepest(cube, Budget(3), start=START)
    assert rec.status == "budget_exhausted"
    assert rec.evaluations == 3


def test_steepest_restarts_escape_the_trap(cube):
    rec = hill_climb_steepest(cube, Budget(60), seed=0, start=START, restart_on_optimum=True)
    assert rec.best_fitness == 5.0
    assert rec.extras["restarts"] >= 1


def test_first_accept_reaches_the_same_trap(cube):
    rec = hill_climb_first_accept(cube, Budget(60), seed=0, start=START)
    assert rec.best_fitness == 8.0
    assert rec.status == "budget_exhausted"
    assert not rec.extras["random_walk"]


def test_random_walk_crosses_ridges(cube):
    rec = hill_climb_first_accept(cube, Budget(200), seed=0, start=START, random_walk=True)
    assert rec.best_fitness == 5.0
    assert rec.extras["random_walk"]


def test_random_search_finds_the_minimum_quickly(cube):
    rec = random_search(cube, Budget(8), seed=206)
    assert rec.best_fitness == 5.0
    assert rec.algorithm == "random_search"


def test_random_search_stops_at_the_target(cube):
    rec = random_search(cube, Budget(100, target_fitness=5.0), seed=206)
    assert rec.status == "target_reached"
    assert rec.evaluations_to_success is not None
    assert rec.evaluations_to_success <= 8
    assert rec.evaluations == rec.evaluations_to_success


def test_best_curve_is_strictly_decreasing(cube):
    rec = random_search(cube, Budget(50), seed=1)
    values = [f for _, f in rec.best_curve]
    assert values == sorted(set(values), reverse=True)
    assert values[-1] == rec.best_fitness


def test_steepest_raises_on_isolated_start():
    lonely = TabletopInstance([3.0, 4.0], edges=[])
    rec = hill_climb_steepest(lonely, Budget(10), start=0)
    # an empty neighborhood is a (vacuous) local optimum
    assert rec.status == "local_optimum"
    with pytest.raises(NoNeighborError):
        hill_climb_first_accept(lonely, Budget(10), seed=0, start=0)
