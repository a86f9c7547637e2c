"""Shared contracts for the toolkit: problems, moves, budgets, run records.

Everything is phrased as minimization.  A problem exposes a cost function
over one of four solution encodings (city permutation, item-to-bin
assignment, real vector, discrete state id) plus neighborhood access.
Optimizers consume problems through a `Run`, which counts every objective
evaluation and keeps the best-so-far trace, so reported evaluation counts
are exact and budgets are enforced in evaluations, never wall time.

Randomness comes from numpy's PCG64 generator.  Given the same seed the
draw sequence is identical on every platform, and `split_streams` derives
independent child streams (one per ant, per restart, ...) from a parent
generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np


class OptimizationError(Exception):
    """Base class for toolkit errors."""


class ValidationError(OptimizationError):
    """A solution or configuration violates its declared structure."""


class EncodingMismatchError(ValidationError):
    """A solution uses the wrong encoding for the target problem."""


class NoNeighborError(OptimizationError):
    """The current solution has an empty neighborhood."""


class UnsupportedOperationError(OptimizationError):
    """The problem kind cannot support the requested operation."""


class BudgetExhaustedError(OptimizationError):
    """An evaluation was requested after the budget ran out."""


class ParseError(OptimizationError):
    """An instance file is malformed; message carries the line number."""


Solution = Any  # tuple, np.ndarray or int depending on the problem kind
Fitness = float


def seeded_rng(seed: int) -> np.random.Generator:
    """Return the toolkit's reference generator (PCG64) for a seed."""
    return np.random.Generator(np.random.PCG64(seed))


def split_streams(rng: np.random.Generator, n: int) -> list[np.random.Generator]:
    """Derive n independent child generators from rng (stable order)."""
    return list(rng.spawn(n))


@dataclass(frozen=True)
class Move:
    """A reversible neighborhood step.

    `attributes` are the hashable atoms the step consumes (the city
    adjacencies a reversal breaks, an (item, source bin) pair, an axis
    and direction on a state graph).  `reverse_attributes` are the atoms
    of the inverse step, i.e. what the move creates; a short-term memory
    that wants to forbid undoing a move stores exactly these.
    """

    attributes: tuple
    reverse_attributes: tuple
    label: Any = None


@dataclass(frozen=True)
class Budget:
    """Evaluation budget plus optional success target.

    A run halts no later than `max_evaluations` objective calls; if
    `target_fitness` is set the run may stop as soon as the best-so-far
    cost reaches it, and the evaluation index of that event is recorded.
    """

    max_evaluations: int
    target_fitness: float | None = None

    def __post_init__(self):
        if self.max_evaluations < 1:
            raise ValidationError("budget must allow at least one evaluation")


@dataclass(frozen=True)
class RunRecord:
    """Deterministic trace of one optimizer run.

    `best_curve` holds (evaluation index, best cost) at every strict
    improvement, so the best-so-far value at any budget n can be read off
    the curve.  `extras` carries algorithm-specific counters and must stay
    JSON-serializable; wall time never appears here.
    """

    algorithm: str
    seed: int
    status: str
    evaluations: int
    best_fitness: float
    best_solution: Any
    best_curve: tuple
    evaluations_to_success: int | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "status": self.status,
            "evaluations": self.evaluations,
            "best_fitness": self.best_fitness,
            "best_solution": self.best_solution,
            "best_curve": [list(p) for p in self.best_curve],
            "evaluations_to_success": self.evaluations_to_success,
            "extras": self.extras,
        }


def success_time(record: RunRecord, threshold: float) -> int | None:
    """First evaluation index at which best cost was <= threshold."""
    for n, f in record.best_curve:
        if f <= threshold:
            return n
    return None


class Run:
    """Evaluation counter and best-so-far tracker for one optimizer run.

    Optimizers call `evaluate` for every objective computation; nothing
    else touches the counter.  `finished` turns true once the budget is
    spent or the target cost has been reached.
    """

    def __init__(self, problem: "Problem", budget: Budget, seed: int, algorithm: str):
        self.problem = problem
        self.budget = budget
        self.seed = seed
        self.algorithm = algorithm
        self.rng = seeded_rng(seed)
        self.evaluations = 0
        self.best_fitness = float("inf")
        self.best_solution = None
        self.best_curve: list[tuple[int, float]] = []
        self.evaluations_to_success: int | None = None

    def evaluate(self, solution) -> float:
        if self.evaluations >= self.budget.max_evaluations:
            raise BudgetExhaustedError(
                f"budget of {self.budget.max_evaluations} evaluations exhausted"
            )
        value = self.problem.evaluate(solution)
        self.evaluations += 1
        if value < self.best_fitness:
            self.best_fitness = value
            self.best_solution = self.problem.freeze(solution)
            self.best_curve.append((self.evaluations, value))
        if (
            self.evaluations_to_success is None
            and self.budget.target_fitness is not None
            and self.best_fitness <= self.budget.target_fitness
        ):
            self.evaluations_to_success = self.evaluations
        return value

    @property
    def out_of_budget(self) -> bool:
        return self.evaluations >= self.budget.max_evaluations

    @property
    def target_reached(self) -> bool:
        return self.evaluations_to_success is not None

    @property
    def finished(self) -> bool:
        return self.out_of_budget or self.target_reached

    def record(self, status: str | None = None, extras: dict | None = None) -> RunRecord:
        if status is None:
            status = "target_reached" if self.target_reached else "budget_exhausted"
        return RunRecord(
            algorithm=self.algorithm,
            seed=self.seed,
            status=status,
            evaluations=self.evaluations,
            best_fitness=self.best_fitness,
            best_solution=self.best_solution,
            best_curve=tuple(self.best_curve),
            evaluations_to_success=self.evaluations_to_success,
            extras=extras or {},
        )


class Problem:
    """Minimization problem contract.

    Concrete problems implement cost evaluation, validation, uniform
    random construction and neighborhood sampling.  `neighbors` (full
    enumeration) exists only where the neighborhood is finite; continuous
    landscapes raise UnsupportedOperationError there.
    """

    kind: str = "abstract"

    def evaluate(self, solution) -> float:
        raise NotImplementedError

    def validate(self, solution):
        """Return the solution in canonical form, or raise."""
        raise NotImplementedError

    def random_solution(self, rng: np.random.Generator):
        raise NotImplementedError

    def sample_neighbor(self, solution, rng: np.random.Generator):
        """Return (neighbor, Move) drawn uniformly from the neighborhood."""
        raise NotImplementedError

    def neighbors(self, solution) -> list:
        """Full neighborhood as [(neighbor, Move), ...] in a fixed order."""
        raise UnsupportedOperationError(
            f"{self.kind} problems do not enumerate neighborhoods"
        )

    def solution_attributes(self, solution) -> frozenset:
        """Atoms a solution is made of, for overlap-based memories."""
        return frozenset()

    def freeze(self, solution):
        """Immutable, JSON-friendly copy of a solution."""
        if isinstance(solution, np.ndarray):
            return tuple(solution.tolist())
        if isinstance(solution, (list, tuple)):
            return tuple(solution)
        if isinstance(solution, (np.integer,)):
            return int(solution)
        if isinstance(solution, (np.floating,)):
            return float(solution)
        return solution
