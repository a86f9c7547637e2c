import json
import logging
from types import SimpleNamespace

import numpy as np
import pytest

from stochopt import (
    AcoConfig,
    AntState,
    Budget,
    PheromoneMatrix,
    ValidationError,
    aco_run,
    choose_next_city,
    edge_desirability,
    global_update,
    local_update,
    seeded_rng,
    two_route_instance,
)


def _fresh_ant(current, n):
    visited = np.zeros(n, dtype=bool)
    visited[current] = True
    return AntState(current=current, visited=visited, tour=[current])


def test_config_validation():
    for bad in (
        dict(ants=0),
        dict(w_tau=-1.0),
        dict(w_tau=0.0, w_eta=0.0),
        dict(rho=0.0),
        dict(rho=1.0),
        dict(local_deposit=0.0),
        dict(q=0.0),
        dict(tau0=0.0),
        dict(tau_min=0.0),
        dict(tau0=0.5, tau_min=0.6),
        dict(tau0=2.0, tau_max=1.0),
        dict(rule="rank"),
    ):
        with pytest.raises(ValidationError):
            AcoConfig(**bad)


def test_edge_desirability_both_rules():
    added = AcoConfig(w_tau=1.0, w_eta=2.0)
    assert edge_desirability(2.0, 4.0, added) == 2.0 + 2.0 / 4.0
    multiplied = AcoConfig(w_tau=2.0, w_eta=3.0, rule="product")
    assert edge_desirability(2.0, 4.0, multiplied) == pytest.approx(4.0 / 64.0)
    with pytest.raises(ValidationError):
        edge_desirability(1.0, 0.0, added)


def test_choose_next_city_follows_the_roulette_wheel():
    cfg = AcoConfig(w_tau=1.0, w_eta=2.0)
    tau = PheromoneMatrix.initial(4, cfg)
    tau.tau[0] = [1.0, 0.3, 2.0, 0.7]
    inst = SimpleNamespace(
        n=4, d=np.array([[0.0, 1.0, 2.0, 4.0]] * 4)
    )
    ant = _fresh_ant(0, 4)

    scores = np.array([0.3 + 2.0 / 1.0, 2.0 + 2.0 / 2.0, 0.7 + 2.0 / 4.0])
    cum = np.cumsum(scores / scores.sum())
    for seed in range(20):
        draw = seeded_rng(seed).random()
        idx = min(int(np.searchsorted(cum, draw, side="right")), 2)
        got = choose_next_city(ant, tau, inst, cfg, seeded_rng(seed))
        assert got == [1, 2, 3][idx]


def test_single_candidate_skips_the_draw():
    cfg = AcoConfig()
    tau = PheromoneMatrix.initial(3, cfg)
    inst = SimpleNamespace(n=3, d=np.ones((3, 3)))
    ant = _fresh_ant(0, 3)
    ant.visited[1] = True
    rng = seeded_rng(7)
    assert choose_next_city(ant, tau, inst, cfg, rng) == 2
    # the generator was never consulted
    assert rng.random() == seeded_rng(7).random()


def test_zero_desirability_falls_back_to_uniform(caplog):
    cfg = AcoConfig(w_tau=0.0, w_eta=1.0)
    tau = PheromoneMatrix.initial(3, cfg)
    d = np.full((3, 3), np.inf)
    np.fill_diagonal(d, 0.0)
    inst = SimpleNamespace(n=3, d=d)
    ant = _fresh_ant(0, 3)
    with caplog.at_level(logging.WARNING, logger="stochopt.aco"):
        picks = {choose_next_city(ant, tau, inst, cfg, seeded_rng(s)) for s in range(30)}
    assert picks == {1, 2}
    assert any("falling back to a uniform choice" in r.message for r in caplog.records)


def test_no_candidate_raises():
    cfg = AcoConfig()
    tau = PheromoneMatrix.initial(2, cfg)
    inst = SimpleNamespace(n=2, d=np.ones((2, 2)))
    ant = _fresh_ant(0, 2)
    ant.visited[:] = True
    with pytest.raises(ValidationError):
        choose_next_city(ant, tau, inst, cfg, seeded_rng(0))


def test_local_update_is_symmetric_and_clamped():
    cfg = AcoConfig(local_deposit=0.01)
    tau = PheromoneMatrix.initial(3, cfg)
    local_update(tau, (0, 1), cfg)
    assert tau.tau[0, 1] == tau.tau[1, 0] == 1.01
    assert tau.tau[0, 2] == 1.0

    capped = AcoConfig(local_deposit=0.01, tau_max=1.005)
    tau = PheromoneMatrix.initial(3, capped)
    local_update(tau, (0, 1), capped)
    assert tau.tau[0, 1] == 1.005


def test_global_update_matches_hand_computation():
    cfg = AcoConfig(rho=0.5, q=2.0)
    tau = PheromoneMatrix.initial(4, cfg)
    tour = [0, 2, 1, 3]
    global_update(tau, tour, 8.0, cfg)
    want = np.full((4, 4), 0.5)
    for a, b in [(0, 2), (2, 1), (1, 3), (3, 0)]:
        want[a, b] += 2.0 / 8.0
        want[b, a] = want[a, b]
    np.testing.assert_allclose(tau.tau, want)


def test_one_iteration_leaves_the_predicted_trail():
    # one ant, one tour: chosen edges carry the local deposit, the
    # closing edge only the global share, everything else just evaporates
    inst = two_route_instance()
    cfg = AcoConfig(ants=1, rho=0.5, local_deposit=0.25, q=1.0, tau0=1.0)
    rec = aco_run(inst, Budget(1), seed=4, cfg=cfg)
    assert rec.evaluations == 1
    assert rec.extras["iterations"] == 1

    tour = list(rec.best_solution)
    length = rec.best_fitness
    tau = np.array(rec.extras["pheromone"])
    chosen = {frozenset(e) for e in zip(tour, tour[1:])}
    closing = frozenset((tour[-1], tour[0]))
    for i in range(4):
        assert tau[i, i] == 0.5
        for j in range(i + 1, 4):
            pair = frozenset((i, j))
            if pair == closing:
                want = 0.5 + 1.0 / length
            elif pair in chosen:
                want = (1.0 + 0.25) * 0.5 + 1.0 / length
            else:
                want = 0.5
            assert tau[i, j] == pytest.approx(want)
            assert tau[j, i] == tau[i, j]


def test_budget_counts_tours(triangle):
    rec = aco_run(triangle, Budget(12), seed=0, cfg=AcoConfig(ants=3))
    assert rec.evaluations == 12
    assert rec.extras["iterations"] == 4
    assert len(rec.extras["iteration_best"]) == 4
    assert rec.best_fitness == 3.0


def test_partial_iteration_drops_its_update(triangle):
    rec = aco_run(triangle, Budget(5), seed=0, cfg=AcoConfig(ants=3))
    assert rec.evaluations == 5
    assert rec.extras["iterations"] == 1
    assert rec.status == "budget_exhausted"


def test_target_stops_mid_iteration(triangle):
    budget = Budget(1000, target_fitness=3.0)
    rec = aco_run(triangle, budget, seed=0, cfg=AcoConfig(ants=3))
    assert rec.status == "target_reached"
    assert rec.evaluations == rec.evaluations_to_success
    assert rec.evaluations < 1000


def test_needs_a_distance_matrix(cube):
    with pytest.raises(ValidationError):
        aco_run(cube, Budget(10), seed=0)


def test_runs_are_reproducible():
    inst = two_route_instance()
    a = aco_run(inst, Budget(60), seed=9)
    b = aco_run(inst, Budget(60), seed=9)
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())


def test_trail_mass_collects_on_the_short_route():
    inst = two_route_instance()
    rec = aco_run(inst, Budget(200), seed=0)
    tau = np.array(rec.extras["pheromone"])
    short = [(0, 1), (1, 2), (2, 3), (3, 0)]
    long_route = [(0, 2), (2, 1), (1, 3), (3, 0)]
    short_mass = sum(tau[a, b] for a, b in short)
    long_mass = sum(tau[a, b] for a, b in long_route)
    assert short_mass > long_mass
    assert rec.best_fitness == 4.0
