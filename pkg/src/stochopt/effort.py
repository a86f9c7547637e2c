"""Success statistics over run ensembles, and complexity projections.

For an ensemble of independent runs, the cumulative success probability
P(n) is the fraction of runs whose best cost reached the target within n
evaluations.  The effort to hit the target with confidence z by
restarting length-n runs is

    I(n, z) = n * ceil(ln(1 - z) / ln(1 - P(n)))      for 0 < P(n) < 1
    I(n, z) = n                                        when P(n) = 1

and the reported effort is the minimum of I over n, together with the
minimizing n.  The ceil ratio is rounded to 12 decimals first so that a
value that is an integer up to float noise does not get bumped a whole
run upward.

`runtime_projection` turns a complexity class and a problem size into
seconds at a given instruction rate, with factorial counts computed in
exact integer arithmetic before the division.  `nfl_comparison` lays
algorithm ensembles side by side against a random-search baseline at
equal budgets; it presents curves and distributions and draws no verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import OptimizationError, ValidationError, success_time


class EffortUndefinedError(OptimizationError):
    """No run in the ensemble ever reached the target."""


@dataclass(frozen=True)
class EnsembleStats:
    """Runs of one algorithm on one instance under one budget.

    `threshold` re-derives success times from the best-so-far curves;
    when None the success bookkeeping recorded during the runs is used
    as-is.
    """

    records: tuple
    budget: int
    threshold: float | None = None
    label: str = ""

    def __post_init__(self):
        if not self.records:
            raise ValidationError("an ensemble needs at least one run")
        if self.budget < 1:
            raise ValidationError("budget must be at least one evaluation")
        names = {r.algorithm for r in self.records}
        if len(names) > 1:
            raise ValidationError(f"mixed algorithms in one ensemble: {sorted(names)}")

    @property
    def algorithm(self) -> str:
        return self.records[0].algorithm

    def success_times(self) -> list:
        """Evaluation counts at success, one entry per succeeding run."""
        times = []
        for r in self.records:
            t = (
                success_time(r, self.threshold)
                if self.threshold is not None
                else r.evaluations_to_success
            )
            if t is not None:
                times.append(int(t))
        return sorted(times)

    def best_values(self) -> np.ndarray:
        return np.array([r.best_fitness for r in self.records], dtype=float)


def cumulative_success(e: EnsembleStats, n: int) -> float:
    if n < 1:
        raise ValidationError("evaluation count must be at least 1")
    times = e.success_times()
    hits = np.searchsorted(times, n, side="right")
    return float(hits) / len(e.records)


def _runs_needed(p: float, z: float) -> int:
    if p >= 1.0:
        return 1
    ratio = math.log(1.0 - z) / math.log(1.0 - p)
    return max(1, math.ceil(round(ratio, 12)))


def effort_curve(e: EnsembleStats, z: float) -> list:
    """[(n, I(n, z))] for every n in 1..budget with P(n) > 0."""
    if not 0 < z < 1:
        raise ValidationError("confidence must lie strictly between 0 and 1")
    times = np.array(e.success_times(), dtype=np.int64)
    if times.size == 0:
        raise EffortUndefinedError("no run reached the target")
    total = len(e.records)
    ns = np.arange(1, e.budget + 1, dtype=np.int64)
    hits = np.searchsorted(times, ns, side="right")
    curve = []
    for n, h in zip(ns, hits):
        if h == 0:
            continue
        curve.append((int(n), int(n) * _runs_needed(h / total, z)))
    return curve


def computational_effort(e: EnsembleStats, z: float) -> tuple:
    """(n*, I): restart length minimizing the effort, and that effort."""
    curve = effort_curve(e, z)
    best_n, best_i = curve[0]
    for n, i in curve[1:]:
        if i < best_i:
            best_n, best_i = n, i
    return best_n, best_i


@dataclass(frozen=True)
class ComplexityClass:
    """Operation-count growth law: poly(k), exp(base), tsp_factorial, factorial."""

    kind: str
    parameter: float | None = None

    def __post_init__(self):
        if self.kind == "poly":
            if self.parameter is None or self.parameter < 1:
                raise ValidationError("polynomial degree must be >= 1")
        elif self.kind == "exp":
            if self.parameter is None or self.parameter <= 1:
                raise ValidationError("exponential base must exceed 1")
        elif self.kind in ("tsp_factorial", "factorial"):
            if self.parameter is not None:
                raise ValidationError(f"{self.kind} takes no parameter")
        else:
            raise ValidationError(f"unknown complexity kind {self.kind!r}")

    def operations(self, n: int):
        if n < 1:
            raise ValidationError("problem size must be at least 1")
        if self.kind == "poly":
            k = self.parameter
            return n ** int(k) if float(k).is_integer() else float(n) ** k
        if self.kind == "exp":
            b = self.parameter
            return int(b) ** n if float(b).is_integer() else b**n
        if self.kind == "tsp_factorial":
            # distinct closed tours over n cities: fix the start, halve direction
            return math.factorial(n - 1) // 2 if n > 2 else 1
        return math.factorial(n)


def runtime_projection(c: ComplexityClass, n: int, ops_per_second: float) -> float:
    if ops_per_second <= 0:
        raise ValidationError("instruction rate must be positive")
    count = c.operations(n)
    try:
        return count / ops_per_second
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class ComparisonReport:
    budget: int
    confidence: float
    entries: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "budget": self.budget,
            "confidence": self.confidence,
            "entries": [dict(e) for e in self.entries],
        }


def _pn_steps(e: EnsembleStats) -> list:
    times = e.success_times()
    total = len(e.records)
    steps = []
    for i, t in enumerate(times):
        if i + 1 < len(times) and times[i + 1] == t:
            continue  # collapse ties to the final height at t
        steps.append((t, (i + 1) / total))
    if not steps or steps[-1][0] != e.budget:
        steps.append((e.budget, len(times) / total))
    return steps


def nfl_comparison(ensembles: dict, baseline: EnsembleStats, z: float = 0.99) -> ComparisonReport:
    """Side-by-side presentation of algorithm ensembles vs random search.

    Pure presentation: success curves, efforts where defined, and
    best-cost distributions.  Budgets must agree or the comparison is
    meaningless and refused.
    """
    all_entries = dict(ensembles)
    all_entries["random_baseline"] = baseline
    budgets = {e.budget for e in all_entries.values()}
    if len(budgets) > 1:
        raise ValidationError(f"ensembles use different budgets: {sorted(budgets)}")
    entries = []
    for name, ens in all_entries.items():
        try:
            n_star, i_min = computational_effort(ens, z)
            effort = {"n_star": n_star, "i_min": i_min}
        except EffortUndefinedError:
            effort = None
        best = ens.best_values()
        entries.append(
            {
                "name": name,
                "algorithm": ens.algorithm,
                "runs": len(ens.records),
                "success_curve": [[int(n), p] for n, p in _pn_steps(ens)],
                "effort": effort,
                "best_median": float(np.median(best)),
                "best_mean": float(best.mean()),
                "best_min": float(best.min()),
                "best_max": float(best.max()),
            }
        )
    return ComparisonReport(budget=baseline.budget, confidence=z, entries=tuple(entries))
