"""Ant system for tours: pheromone trails, probabilistic construction.

Each iteration every ant builds a complete tour city by city.  From city
x an unvisited city y is drawn by roulette wheel over a desirability
score that combines the pheromone on the edge and the inverse of its
length.  The score is a weighted SUM,

    score(x, y) = w_tau * tau[x][y] + w_eta / d[x][y]

(the classical product tau^a * eta^b is available as rule="product").
Every edge an ant picks receives a small constant deposit immediately;
after the iteration all trails evaporate by rho and the iteration-best
tour's edges gain q / tour_length.  Entries live in [tau_min, tau_max],
so trails fade toward the floor but never vanish and cannot blow up.

Budgets count completed tours, one objective evaluation each, so ant
runs compare against other algorithms on equal terms.  Each ant owns a
child RNG stream, which keeps a run reproducible regardless of how ant
construction might be scheduled.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    Budget,
    BudgetExhaustedError,
    Run,
    RunRecord,
    ValidationError,
    split_streams,
)

log = logging.getLogger(__name__)

RULES = ("sum", "product")


@dataclass(frozen=True)
class AcoConfig:
    ants: int | None = None  # None: one ant per city
    w_tau: float = 1.0
    w_eta: float | None = None  # None: 2 * mean edge length, scale-matching
    rho: float = 0.1
    local_deposit: float = 0.01
    q: float = 1.0
    tau0: float = 1.0
    tau_min: float = 1e-4
    tau_max: float = 1e6
    rule: str = "sum"

    def __post_init__(self):
        if self.ants is not None and self.ants < 1:
            raise ValidationError("need at least one ant")
        if self.w_tau < 0 or (self.w_eta is not None and self.w_eta < 0):
            raise ValidationError("desirability weights must be non-negative")
        if self.w_tau == 0 and self.w_eta == 0:
            raise ValidationError("desirability weights must not both be zero")
        if not 0 < self.rho < 1:
            raise ValidationError("evaporation rate must lie in (0, 1)")
        if self.local_deposit <= 0 or self.q <= 0 or self.tau0 <= 0:
            raise ValidationError("deposits and tau0 must be positive")
        if not 0 < self.tau_min <= self.tau0 <= self.tau_max:
            raise ValidationError("need 0 < tau_min <= tau0 <= tau_max")
        if self.rule not in RULES:
            raise ValidationError(f"rule must be one of {RULES}")


@dataclass
class PheromoneMatrix:
    tau: np.ndarray
    tau_min: float
    tau_max: float

    @classmethod
    def initial(cls, n: int, cfg: AcoConfig) -> "PheromoneMatrix":
        return cls(
            tau=np.full((n, n), float(cfg.tau0)),
            tau_min=cfg.tau_min,
            tau_max=cfg.tau_max,
        )

    def clamp(self):
        np.clip(self.tau, self.tau_min, self.tau_max, out=self.tau)


@dataclass
class AntState:
    current: int
    visited: np.ndarray  # boolean mask
    tour: list
    length: float = 0.0


def _resolved(cfg: AcoConfig, inst) -> AcoConfig:
    n = inst.n
    updates = {}
    if cfg.ants is None:
        updates["ants"] = n
    if cfg.w_eta is None:
        off = inst.d[~np.eye(n, dtype=bool)]
        updates["w_eta"] = 2.0 * float(off.mean())
    return replace(cfg, **updates) if updates else cfg


def edge_desirability(tau_xy: float, d_xy: float, cfg: AcoConfig) -> float:
    if d_xy <= 0:
        raise ValidationError("distinct cities at distance 0 break the inverse-distance term")
    if cfg.rule == "product":
        return float(tau_xy**cfg.w_tau * (1.0 / d_xy) ** cfg.w_eta)
    return float(cfg.w_tau * tau_xy + cfg.w_eta / d_xy)


def _desirability_row(tau_row, d_row, cfg: AcoConfig) -> np.ndarray:
    if np.any(d_row <= 0):
        raise ValidationError("distinct cities at distance 0 break the inverse-distance term")
    if cfg.rule == "product":
        return tau_row**cfg.w_tau * (1.0 / d_row) ** cfg.w_eta
    return cfg.w_tau * tau_row + cfg.w_eta / d_row


def choose_next_city(ant: AntState, tau: PheromoneMatrix, inst, cfg: AcoConfig, rng) -> int:
    candidates = np.flatnonzero(~ant.visited)
    if candidates.size == 0:
        raise ValidationError("no unvisited city to move to")
    if candidates.size == 1:
        return int(candidates[0])
    scores = _desirability_row(
        tau.tau[ant.current, candidates], inst.d[ant.current, candidates], cfg
    )
    total = scores.sum()
    if total <= 0:
        log.warning("all desirabilities zero; falling back to a uniform choice")
        return int(candidates[rng.integers(candidates.size)])
    cum = np.cumsum(scores / total)
    idx = int(np.searchsorted(cum, rng.random(), side="right"))
    return int(candidates[min(idx, candidates.size - 1)])


def local_update(tau: PheromoneMatrix, edge: tuple, cfg: AcoConfig) -> PheromoneMatrix:
    x, y = edge
    tau.tau[x, y] += cfg.local_deposit
    tau.tau[y, x] = tau.tau[x, y]
    tau.clamp()
    return tau


def global_update(tau: PheromoneMatrix, best_tour, tour_length: float, cfg: AcoConfig) -> PheromoneMatrix:
    tau.tau *= 1.0 - cfg.rho
    gain = cfg.q / tour_length
    tour = np.asarray(best_tour)
    for a, b in zip(tour, np.roll(tour, -1)):
        tau.tau[a, b] += gain
        tau.tau[b, a] = tau.tau[a, b]
    tau.clamp()
    return tau


def _build_tour(inst, tau: PheromoneMatrix, cfg: AcoConfig, rng) -> AntState:
    n = inst.n
    start = int(rng.integers(n))
    ant = AntState(
        current=start,
        visited=np.zeros(n, dtype=bool),
        tour=[start],
    )
    ant.visited[start] = True
    for _ in range(n - 1):
        city = choose_next_city(ant, tau, inst, cfg, rng)
        ant.length += float(inst.d[ant.current, city])
        local_update(tau, (ant.current, city), cfg)
        ant.visited[city] = True
        ant.tour.append(city)
        ant.current = city
    ant.length += float(inst.d[ant.current, ant.tour[0]])  # closing edge, never chosen
    return ant


def aco_run(
    problem,
    budget: Budget,
    seed: int,
    cfg: AcoConfig | None = None,
) -> RunRecord:
    """Ant-system search over a distance matrix until the tour budget ends.

    The final trail matrix, iteration count and per-iteration best
    lengths land in extras for trail-level analysis.
    """
    if not hasattr(problem, "d"):
        raise ValidationError("ant runs need a distance-matrix instance")
    cfg = _resolved(cfg or AcoConfig(), problem)
    run = Run(problem, budget, seed, "aco")
    tau = PheromoneMatrix.initial(problem.n, cfg)
    streams = split_streams(run.rng, cfg.ants)
    iterations = 0
    iteration_best: list[float] = []
    try:
        while not run.finished:
            best_len = float("inf")
            best_tour = None
            for stream in streams:
                ant = _build_tour(problem, tau, cfg, stream)
                cost = run.evaluate(ant.tour)
                if cost < best_len:
                    best_len = cost
                    best_tour = ant.tour
                if run.target_reached:
                    break
            if best_tour is not None:
                global_update(tau, best_tour, best_len, cfg)
                iterations += 1
                iteration_best.append(best_len)
    except BudgetExhaustedError:
        pass
    extras = {
        "iterations": iterations,
        "iteration_best": iteration_best,
        "pheromone": tau.tau.tolist(),
        "ants": cfg.ants,
    }
    return run.record(extras=extras)
