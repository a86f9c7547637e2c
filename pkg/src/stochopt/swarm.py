"""Particle swarm optimization in its original two-increment form.

Each particle carries a position, a velocity, and the best point it has
personally evaluated; the swarm shares the best point anyone has found.
Per dimension, the velocity gains a pull toward the personal best and a
pull toward the swarm best, each scaled by its increment and a fresh
uniform draw:

    v'[i] = v[i] + p_increment * r1[i] * (p_best[i] - pos[i])
                 + g_increment * r2[i] * (g_best[i] - pos[i])

Everything is minimization, so personal bests start at +inf and update
on strictly smaller cost.  The sweep order is particle-index order:
all velocities update against the previous sweep's swarm best, then all
particles move and evaluate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Budget,
    BudgetExhaustedError,
    Run,
    RunRecord,
    UnsupportedOperationError,
    ValidationError,
)


@dataclass
class Particle:
    pos: np.ndarray
    veloc: np.ndarray
    p_best_pos: np.ndarray
    p_best_val: float = float("inf")


@dataclass
class GlobalBest:
    pos: np.ndarray
    val: float = float("inf")


@dataclass(frozen=True)
class SwarmConfig:
    size: int = 20
    p_increment: float = 2.0
    g_increment: float = 2.0
    vmax: float | None = None  # None: half the variable range at run start
    inertia: float | None = None  # None: plain sum, the original rule

    def __post_init__(self):
        if self.size < 1:
            raise ValidationError("swarm size must be at least 1")
        if self.p_increment < 0 or self.g_increment < 0:
            raise ValidationError("increments must be non-negative")
        if self.vmax is not None and self.vmax <= 0:
            raise ValidationError("vmax must be positive when given")


def update_velocity(
    p: Particle, g: GlobalBest, cfg: SwarmConfig, rng
) -> np.ndarray:
    dim = p.pos.shape[0]
    r1 = rng.random(dim)
    r2 = rng.random(dim)
    keep = 1.0 if cfg.inertia is None else cfg.inertia
    v = (
        keep * p.veloc
        + cfg.p_increment * r1 * (p.p_best_pos - p.pos)
        + cfg.g_increment * r2 * (g.pos - p.pos)
    )
    if cfg.vmax is not None:
        v = np.clip(v, -cfg.vmax, cfg.vmax)
    return v


def step_swarm(particles, g: GlobalBest, problem, cfg: SwarmConfig, rng, evaluate=None):
    """One synchronous sweep: velocities first, then move/evaluate all.

    `evaluate` defaults to the bare objective; drivers pass a counting
    wrapper.  Out-of-bounds positions are clamped in place and counted
    via the returned clamp tally.
    """
    evaluate = evaluate or problem.evaluate
    for p in particles:
        p.veloc = update_velocity(p, g, cfg, rng)
    clamped = 0
    for p in particles:
        p.pos = p.pos + p.veloc
        p.pos, hit = problem.clamp(p.pos)
        if hit:
            clamped += 1
        val = evaluate(p.pos)
        if val < p.p_best_val:
            p.p_best_val = val
            p.p_best_pos = p.pos.copy()
    for p in particles:
        if p.p_best_val < g.val:
            g.val = p.p_best_val
            g.pos = p.p_best_pos.copy()
    return particles, g, clamped


def pso_run(
    problem,
    budget: Budget,
    seed: int,
    cfg: SwarmConfig | None = None,
) -> RunRecord:
    """Swarm search on a continuous landscape until the budget is spent.

    Positions start uniform in the bounds, velocities uniform in
    one tenth of the range either way.  The swarm best after every sweep
    lands in extras["gbest_curve"].
    """
    cfg = cfg or SwarmConfig()
    if getattr(problem, "kind", None) != "continuous":
        raise UnsupportedOperationError("particle swarms need a continuous landscape")
    run = Run(problem, budget, seed, "pso")
    rng = run.rng
    lo = problem.lower
    hi = problem.upper
    span = hi - lo
    if cfg.vmax is not None:
        run_cfg = cfg
    else:
        run_cfg = SwarmConfig(
            size=cfg.size,
            p_increment=cfg.p_increment,
            g_increment=cfg.g_increment,
            vmax=float(span.max()) / 2.0,
            inertia=cfg.inertia,
        )
    particles = []
    for _ in range(cfg.size):
        pos = lo + rng.random(problem.dim) * span
        veloc = (rng.random(problem.dim) * 2.0 - 1.0) * span / 10.0
        particles.append(Particle(pos=pos, veloc=veloc, p_best_pos=pos.copy()))
    g = GlobalBest(pos=particles[0].pos.copy())
    clamp_count = 0
    sweeps = 0
    gbest_curve: list[float] = []
    try:
        for p in particles:
            val = run.evaluate(p.pos)
            if val < p.p_best_val:
                p.p_best_val = val
                p.p_best_pos = p.pos.copy()
            if val < g.val:
                g.val = val
                g.pos = p.pos.copy()
        gbest_curve.append(g.val)
        while not run.finished:
            particles, g, clamped = step_swarm(
                particles, g, problem, run_cfg, rng, evaluate=run.evaluate
            )
            clamp_count += clamped
            sweeps += 1
            gbest_curve.append(g.val)
    except BudgetExhaustedError:
        pass
    extras = {
        "sweeps": sweeps,
        "clamped_moves": clamp_count,
        "gbest_curve": gbest_curve,
        "vmax": run_cfg.vmax,
    }
    return run.record(extras=extras)
