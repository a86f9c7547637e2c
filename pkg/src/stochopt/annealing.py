"""Metropolis acceptance and simulated annealing with cooling schedules.

Temperature carries the whole scale (the Boltzmann constant is absorbed,
k = 1): a worsening step of size delta is accepted with probability
exp(-delta / T), and any non-worsening step is accepted outright without
consuming a random draw.

The rescaled mode replaces the plain energy difference by

    (sqrt(E_j) - sqrt(E_i))^2 - (sqrt(E_i) - E_t_root)^2,

with target energy E_t = alpha * T^2 recomputed whenever the temperature
moves.  Energies fed to the transform are the objective shifted by the
running minimum, so they stay non-negative.  `rescaled_form` selects the
formula exactly as stated above ("as_printed") or the target-centered
variant (sqrt(E_j) - sqrt(E_t))^2 - (sqrt(E_i) - sqrt(E_t))^2 found
elsewhere in the literature ("target_centered").
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Budget, Run, RunRecord, ValidationError

# geometric schedules never hit zero algebraically; below this the float
# has underflowed and the chain is stuck anyway
T_UNDERFLOW = 1e-300


@dataclass(frozen=True)
class CoolingSchedule:
    """Temperature sequence; `t0=None` asks the run to calibrate it.

    Geometric: T_i = t0 * rate**i.  Linear: T_i = max(t0 - i*decrement,
    t_floor).  `steps_per_temperature` proposals happen at each index i;
    `max_temperature_steps`, when set, exhausts the schedule and freezes
    the run.
    """

    kind: str = "geometric"
    t0: float | None = None
    rate: float = 0.95
    decrement: float = 0.0
    t_floor: float = 1e-9
    steps_per_temperature: int = 100
    max_temperature_steps: int | None = None

    def __post_init__(self):
        if self.kind not in ("geometric", "linear"):
            raise ValidationError(f"unknown schedule kind {self.kind!r}")
        if self.t0 is not None and self.t0 <= 0:
            raise ValidationError("initial temperature must be positive")
        if self.kind == "geometric" and not (0.0 < self.rate < 1.0):
            raise ValidationError("geometric factor must lie in (0, 1)")
        if self.kind == "linear" and self.decrement <= 0:
            raise ValidationError("linear schedules need a positive decrement")
        if self.kind == "linear" and self.t_floor <= 0:
            raise ValidationError("linear schedules need a positive floor")
        if self.steps_per_temperature < 1:
            raise ValidationError("need at least one proposal per temperature")


def next_temperature(schedule: CoolingSchedule, i: int, t0: float | None = None) -> float:
    """Temperature at step index i; `t0` overrides a calibrated start."""
    if i < 0:
        raise ValidationError("temperature step index must be >= 0")
    start = schedule.t0 if t0 is None else t0
    if start is None or start <= 0:
        raise ValidationError("schedule has no positive initial temperature")
    if schedule.kind == "geometric":
        return start * schedule.rate**i
    return max(start - i * schedule.decrement, schedule.t_floor)


def metropolis_accept(delta: float, temperature: float, rng) -> bool:
    if temperature <= 0:
        raise ValidationError("temperature must be positive")
    if delta <= 0:
        return True
    return rng.random() < math.exp(-delta / temperature)


def rescaled_delta(e_i: float, e_j: float, e_t: float) -> float:
    if e_i < 0 or e_j < 0 or e_t < 0:
        raise ValidationError(
            "rescaled energies must be non-negative; shift the objective first"
        )
    return (math.sqrt(e_j) - math.sqrt(e_i)) ** 2 - (math.sqrt(e_i) - math.sqrt(e_t)) ** 2


def _target_centered_delta(e_i: float, e_j: float, e_t: float) -> float:
    if e_i < 0 or e_j < 0 or e_t < 0:
        raise ValidationError(
            "rescaled energies must be non-negative; shift the objective first"
        )
    return (math.sqrt(e_j) - math.sqrt(e_t)) ** 2 - (math.sqrt(e_i) - math.sqrt(e_t)) ** 2


def calibrate_t0(problem, run: Run, start, probes: int = 100) -> tuple[float, object, float]:
    """T0 = 10 x mean |step| along a random probe walk from `start`.

    The walk's evaluations count against the run budget.  Returns (t0,
    last solution, its fitness) so the caller can resume from where the
    probe left the chain.
    """
    current = start
    f_current = run.evaluate(current)
    deltas = []
    while len(deltas) < probes and not run.finished:
        candidate, _ = problem.sample_neighbor(current, run.rng)
        f_candidate = run.evaluate(candidate)
        deltas.append(abs(f_candidate - f_current))
        current, f_current = candidate, f_candidate
    mean = sum(deltas) / len(deltas) if deltas else 0.0
    t0 = 10.0 * mean
    if t0 <= 0:
        t0 = 1.0  # flat probe region; any positive scale works
    return t0, current, f_current


def simulated_annealing(
    problem,
    budget: Budget,
    seed: int,
    schedule: CoolingSchedule | None = None,
    start=None,
    rescaled: bool = False,
    alpha: float = 1.0,
    rescaled_form: str = "as_printed",
    record_current: bool = False,
) -> RunRecord:
    if rescaled and alpha <= 0:
        raise ValidationError("alpha must be positive")
    if rescaled_form not in ("as_printed", "target_centered"):
        raise ValidationError(f"unknown rescaled form {rescaled_form!r}")
    schedule = schedule or CoolingSchedule()
    run = Run(problem, budget, seed, "simulated_annealing")
    current = (
        problem.validate(start) if start is not None else problem.random_solution(run.rng)
    )

    t0_override = None
    if schedule.t0 is None:
        t0_override, current, f_current = calibrate_t0(problem, run, current)
    else:
        f_current = run.evaluate(current)

    transform = rescaled_delta if rescaled_form == "as_printed" else _target_centered_delta
    step_index = 0
    uphill_proposed = 0
    uphill_accepted = 0
    current_curve = [f_current] if record_current else None
    status = None

    while not run.finished:
        if (
            schedule.max_temperature_steps is not None
            and step_index >= schedule.max_temperature_steps
        ):
            status = "frozen"
            break
        temperature = next_temperature(schedule, step_index, t0_override)
        if temperature < T_UNDERFLOW:
            status = "frozen"
            break
        for _ in range(schedule.steps_per_temperature):
            if run.finished:
                break
            candidate, _ = problem.sample_neighbor(current, run.rng)
            f_candidate = run.evaluate(candidate)
            raw_delta = f_candidate - f_current
            if rescaled:
                e_t = alpha * temperature * temperature
                delta = transform(
                    f_current - run.best_fitness, f_candidate - run.best_fitness, e_t
                )
            else:
                delta = raw_delta
            if raw_delta > 0:
                uphill_proposed += 1
            if metropolis_accept(delta, temperature, run.rng):
                if raw_delta > 0:
                    uphill_accepted += 1
                current, f_current = candidate, f_candidate
            if current_curve is not None:
                current_curve.append(f_current)
        step_index += 1

    extras = {
        "temperature_steps": step_index,
        "uphill_proposed": uphill_proposed,
        "uphill_accepted": uphill_accepted,
        "t0": schedule.t0 if t0_override is None else t0_override,
    }
    if current_curve is not None:
        extras["current_curve"] = current_curve
    return run.record(status, extras=extras)
