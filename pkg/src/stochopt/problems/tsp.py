"""Symmetric traveling-salesman instances over permutation encodings.

A tour is a permutation of range(n) read cyclically.  The neighborhood
is 2-opt: reverse the closed slice i..j of the permutation.  Reversals
spanning the whole tour or all but one city reproduce the same cyclic
tour, so they are excluded from neighborhood enumeration and sampling;
`two_opt` itself still accepts any 0 <= i <= j < n.

Move attributes are the unordered city pairs whose adjacency a reversal
breaks; the reverse attributes are the pairs it creates.  Short-term
memories match on these atoms.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from ..core import (
    EncodingMismatchError,
    Move,
    Problem,
    ValidationError,
)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class TspInstance(Problem):
    kind = "tsp"

    def __init__(self, distances, coords=None, name: str = "tsp"):
        d = np.asarray(distances, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValidationError("distance matrix must be square")
        if d.shape[0] < 1:
            raise ValidationError("instance needs at least one city")
        if not np.allclose(d, d.T):
            raise ValidationError("distance matrix must be symmetric")
        if np.any(np.diag(d) != 0):
            raise ValidationError("distance matrix needs a zero diagonal")
        if np.any(d < 0):
            raise ValidationError("distances must be nonnegative")
        self.d = d
        self.n = d.shape[0]
        self.coords = None if coords is None else np.asarray(coords, dtype=float)
        self.name = name
        self._pairs = [
            (i, j)
            for i in range(self.n - 1)
            for j in range(i + 1, self.n)
            if not self._trivial(i, j)
        ]

    @classmethod
    def from_coords(cls, coords, name: str = "tsp") -> "TspInstance":
        """Plain Euclidean distances from planar points (no rounding)."""
        pts = np.asarray(coords, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValidationError("coords must be an (n, 2) array")
        diff = pts[:, None, :] - pts[None, :, :]
        d = np.sqrt((diff**2).sum(axis=-1))
        np.fill_diagonal(d, 0.0)
        return cls(d, coords=pts, name=name)

    def validate(self, solution) -> np.ndarray:
        tour = np.asarray(solution)
        if tour.ndim != 1 or tour.size != self.n:
            raise EncodingMismatchError(
                f"tour must be a permutation of {self.n} cities, got shape {tour.shape}"
            )
        if not np.issubdtype(tour.dtype, np.integer):
            raise EncodingMismatchError("tour entries must be integers")
        counts = np.bincount(tour.astype(np.intp), minlength=self.n)
        if counts.size != self.n or np.any(counts != 1):
            raise ValidationError("tour must visit every city exactly once")
        return tour.astype(np.intp)

    def evaluate(self, solution) -> float:
        tour = self.validate(solution)
        if self.n == 1:
            return 0.0
        return float(self.d[tour[:-1], tour[1:]].sum() + self.d[tour[-1], tour[0]])

    def random_solution(self, rng) -> np.ndarray:
        return rng.permutation(self.n)

    # Pairs (0, n-1), (0, n-2) and (1, n-1) reverse the whole cycle or all
    # but one city, which leaves the cyclic tour unchanged.
    def _trivial(self, i: int, j: int) -> bool:
        n = self.n
        return (i, j) in ((0, n - 1), (0, n - 2), (1, n - 1))

    def _move(self, tour: np.ndarray, i: int, j: int) -> Move:
        n = self.n
        before = _edge(int(tour[(i - 1) % n]), int(tour[i]))
        after = _edge(int(tour[j]), int(tour[(j + 1) % n]))
        made_1 = _edge(int(tour[(i - 1) % n]), int(tour[j]))
        made_2 = _edge(int(tour[i]), int(tour[(j + 1) % n]))
        broken = tuple(dict.fromkeys((before, after)))
        made = tuple(dict.fromkeys((made_1, made_2)))
        return Move(attributes=broken, reverse_attributes=made, label=(i, j))

    def neighbors(self, solution) -> list:
        tour = self.validate(solution)
        return [
            (two_opt(tour, i, j), self._move(tour, i, j)) for i, j in self._pairs
        ]

    def sample_neighbor(self, solution, rng):
        tour = self.validate(solution)
        if not self._pairs:
            # 1-3 cities: every reversal is the same cyclic tour
            return tour.copy(), Move(attributes=(), reverse_attributes=(), label=None)
        i, j = self._pairs[int(rng.integers(len(self._pairs)))]
        return two_opt(tour, i, j), self._move(tour, i, j)

    def solution_attributes(self, solution) -> frozenset:
        tour = self.validate(solution)
        if self.n < 2:
            return frozenset()
        pairs = [_edge(int(tour[k]), int(tour[(k + 1) % self.n])) for k in range(self.n)]
        return frozenset(pairs)

    def freeze(self, solution):
        return tuple(int(c) for c in np.asarray(solution).tolist())


def tour_length(inst: TspInstance, tour) -> float:
    return inst.evaluate(tour)


def two_opt(tour, i: int, j: int) -> np.ndarray:
    """Reverse the closed slice i..j of the permutation (i == j is identity)."""
    t = np.asarray(tour)
    n = t.size
    if not (0 <= i <= j < n):
        raise ValidationError(f"need 0 <= i <= j < {n}, got i={i}, j={j}")
    out = t.copy()
    out[i : j + 1] = out[i : j + 1][::-1]
    return out


def brute_force_tour(inst: TspInstance, limit: int = 10):
    """Exhaustive optimum over (n-1)!/2 distinct tours; n <= limit.

    Ties resolve to the lexicographically first canonical tour, where
    canonical means city 0 first and the second city smaller than the
    last.
    """
    n = inst.n
    if n > limit:
        raise ValidationError(f"exhaustive search capped at {limit} cities, got {n}")
    if n == 1:
        return (0,), 0.0
    if n == 2:
        return (0, 1), inst.evaluate([0, 1])
    best_tour = None
    best_len = float("inf")
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue  # other orientation of the same cycle
        tour = (0,) + rest
        length = inst.evaluate(tour)
        if length < best_len:
            best_len = length
            best_tour = tour
    return best_tour, best_len


def two_route_instance() -> TspInstance:
    """Four cities with one short cycle (length 4) and two long ones (8).

    The cycle 0-1-2-3 uses unit edges only; both alternatives must use two
    of the length-3 diagonals.  Pheromone experiments compare trail mass
    on the short cycle's edges against a long cycle's.
    """
    d = np.array(
        [
            [0.0, 1.0, 3.0, 1.0],
            [1.0, 0.0, 1.0, 3.0],
            [3.0, 1.0, 0.0, 1.0],
            [1.0, 3.0, 1.0, 0.0],
        ]
    )
    return TspInstance(d, name="two-route")
