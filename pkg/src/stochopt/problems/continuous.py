"""Box-bounded continuous test landscapes.

Two objectives ship with the toolkit:

* ``abs_linear``: f(x) = |x[0] + 1|, minimum 0 at x[0] = -1.  The extra
  dimensions are ignored, which makes the optimum a known line and the
  landscape unimodal; default box [-5, 5] per dimension.
* ``multimodal_test``: the Rastrigin function,
  f(x) = 10 d + sum(x_i^2 - 10 cos(2 pi x_i)), minimum 0 at the origin,
  with a regular grid of local minima; default box [-5.12, 5.12].

Points outside the box are clamped to it before evaluation and the clamp
is logged, so objective values are always defined.  Neighborhood moves
perturb every coordinate by a uniform draw within a radius that defaults
to 5% of each dimension's width.
"""

from __future__ import annotations

import logging

import numpy as np

from ..core import EncodingMismatchError, Move, Problem, ValidationError

log = logging.getLogger(__name__)

OBJECTIVES = ("abs_linear", "multimodal_test")

_DEFAULT_BOUNDS = {
    "abs_linear": (-5.0, 5.0),
    "multimodal_test": (-5.12, 5.12),
}


class ContinuousLandscape(Problem):
    kind = "continuous"

    def __init__(self, objective: str = "abs_linear", dim: int = 1, bounds=None,
                 neighbor_radius=None, name: str | None = None):
        if objective not in OBJECTIVES:
            raise ValidationError(
                f"unknown objective {objective!r}, expected one of {OBJECTIVES}"
            )
        if dim < 1:
            raise ValidationError("dimension must be at least 1")
        self.objective = objective
        self.dim = dim
        if bounds is None:
            bounds = _DEFAULT_BOUNDS[objective]
        lo, hi = bounds
        self.lower = np.broadcast_to(np.asarray(lo, dtype=float), (dim,)).copy()
        self.upper = np.broadcast_to(np.asarray(hi, dtype=float), (dim,)).copy()
        if np.any(self.lower >= self.upper):
            raise ValidationError("each lower bound must be below its upper bound")
        width = self.upper - self.lower
        if neighbor_radius is None:
            self.neighbor_radius = 0.05 * width
        else:
            self.neighbor_radius = np.broadcast_to(
                np.asarray(neighbor_radius, dtype=float), (dim,)
            ).copy()
            if np.any(self.neighbor_radius <= 0):
                raise ValidationError("neighbor radius must be positive")
        self.name = name or objective

    def validate(self, solution) -> np.ndarray:
        x = np.asarray(solution, dtype=float)
        if x.ndim != 1 or x.size != self.dim:
            raise EncodingMismatchError(
                f"point must be a vector of length {self.dim}, got shape {x.shape}"
            )
        return x

    def clamp(self, x: np.ndarray) -> tuple[np.ndarray, bool]:
        clipped = np.clip(x, self.lower, self.upper)
        return clipped, bool(np.any(clipped != x))

    def evaluate(self, solution) -> float:
        x = self.validate(solution)
        x, clamped = self.clamp(x)
        if clamped:
            log.debug("point outside bounds clamped before evaluation")
        return landscape_value(self, x)

    def random_solution(self, rng) -> np.ndarray:
        return self.lower + rng.random(self.dim) * (self.upper - self.lower)

    def sample_neighbor(self, solution, rng):
        x = self.validate(solution)
        step = rng.uniform(-self.neighbor_radius, self.neighbor_radius)
        moved, _ = self.clamp(x + step)
        return moved, Move(attributes=(), reverse_attributes=(), label=None)

    def freeze(self, solution):
        return tuple(float(v) for v in np.asarray(solution).tolist())


def landscape_value(landscape: ContinuousLandscape, x) -> float:
    x = np.asarray(x, dtype=float)
    if landscape.objective == "abs_linear":
        return float(abs(x[0] + 1.0))
    # multimodal_test
    return float(10.0 * x.size + np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x)))
