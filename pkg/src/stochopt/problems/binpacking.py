"""One-dimensional bin packing with capacity-normalized item sizes.

Sizes are stored relative to capacity, so every bin holds 1.0 exactly.
A solution assigns each item a bin id in 0..n-1 (n bins always suffice).
Overfull bins are legal during search; the cost adds a penalty per unit
of overflow large enough that any overfull packing costs more than any
feasible one, which keeps local moves on a connected landscape.

Fit checks use a 1e-9 relative slack so decimal size literals that sum
to the capacity exactly in base ten still count as fitting.
"""

from __future__ import annotations

import numpy as np

from ..core import (
    EncodingMismatchError,
    Move,
    Problem,
    ValidationError,
)

FIT_SLACK = 1e-9


class BinPackingInstance(Problem):
    kind = "binpacking"

    def __init__(self, sizes, capacity: float = 1.0, penalty: float | None = None,
                 name: str = "binpacking"):
        if capacity <= 0:
            raise ValidationError("capacity must be positive")
        raw = np.asarray(sizes, dtype=float)
        if raw.ndim != 1 or raw.size == 0:
            raise ValidationError("sizes must be a nonempty 1-d sequence")
        if np.any(raw <= 0):
            raise ValidationError("item sizes must be positive")
        self.sizes = raw / capacity
        if np.any(self.sizes > 1.0 + FIT_SLACK):
            raise ValidationError("an item larger than the capacity can never be packed")
        self.n = raw.size
        self.penalty = 10.0 * self.n if penalty is None else float(penalty)
        self.name = name

    def validate(self, solution) -> np.ndarray:
        a = np.asarray(solution)
        if a.ndim != 1 or a.size != self.n:
            raise EncodingMismatchError(
                f"assignment must map {self.n} items to bins, got shape {a.shape}"
            )
        if not np.issubdtype(a.dtype, np.integer):
            raise EncodingMismatchError("bin ids must be integers")
        if np.any(a < 0) or np.any(a >= self.n):
            raise ValidationError(f"bin ids must lie in 0..{self.n - 1}")
        return a.astype(np.intp)

    def evaluate(self, solution) -> float:
        return packing_cost(self, solution)

    def loads(self, assignment) -> np.ndarray:
        a = self.validate(assignment)
        return np.bincount(a, weights=self.sizes, minlength=self.n)

    def random_solution(self, rng) -> np.ndarray:
        return rng.integers(0, self.n, size=self.n)

    def _targets(self, a: np.ndarray) -> list[int]:
        used = sorted(set(int(b) for b in a))
        for b in range(self.n):
            if b not in used:
                return used + [b]  # one fresh bin is always enough
        return used

    def neighbors(self, solution) -> list:
        a = self.validate(solution)
        targets = self._targets(a)
        out = []
        for item in range(self.n):
            src = int(a[item])
            for dst in targets:
                if dst == src:
                    continue
                nxt = a.copy()
                nxt[item] = dst
                out.append((nxt, _relocate_move(item, src, dst)))
        for i in range(self.n - 1):
            for j in range(i + 1, self.n):
                if a[i] == a[j]:
                    continue
                nxt = a.copy()
                nxt[i], nxt[j] = a[j], a[i]
                out.append((nxt, _swap_move(i, int(a[i]), j, int(a[j]))))
        return out

    def sample_neighbor(self, solution, rng):
        a = self.validate(solution)
        swappable = np.unique(a).size > 1
        use_swap = swappable and rng.random() < 0.5
        if use_swap:
            while True:
                i, j = rng.integers(0, self.n, size=2)
                if a[i] != a[j]:
                    break
            i, j = (int(i), int(j)) if i < j else (int(j), int(i))
            nxt = a.copy()
            nxt[i], nxt[j] = a[j], a[i]
            return nxt, _swap_move(i, int(a[i]), j, int(a[j]))
        item = int(rng.integers(self.n))
        targets = [b for b in self._targets(a) if b != a[item]]
        dst = targets[int(rng.integers(len(targets)))]
        nxt = a.copy()
        nxt[item] = dst
        return nxt, _relocate_move(item, int(a[item]), dst)

    def solution_attributes(self, solution) -> frozenset:
        a = self.validate(solution)
        return frozenset((item, int(a[item])) for item in range(self.n))

    def freeze(self, solution):
        return tuple(int(b) for b in np.asarray(solution).tolist())


def _relocate_move(item: int, src: int, dst: int) -> Move:
    return Move(
        attributes=((item, src),),
        reverse_attributes=((item, dst),),
        label=("relocate", item, src, dst),
    )


def _swap_move(i: int, bin_i: int, j: int, bin_j: int) -> Move:
    return Move(
        attributes=((i, bin_i), (j, bin_j)),
        reverse_attributes=((i, bin_j), (j, bin_i)),
        label=("swap", i, j),
    )


def packing_cost(inst: BinPackingInstance, assignment) -> float:
    """Open-bin count plus penalty times total overflow."""
    loads = inst.loads(assignment)
    open_bins = int(np.count_nonzero(loads > 0))
    overflow = float(np.maximum(loads - 1.0, 0.0).sum())
    if overflow < FIT_SLACK * inst.n:
        overflow = 0.0
    return open_bins + inst.penalty * overflow


def first_fit_decreasing(inst: BinPackingInstance) -> np.ndarray:
    """Classic FFD: items by falling size into the first bin that fits."""
    order = sorted(range(inst.n), key=lambda i: (-inst.sizes[i], i))
    loads: list[float] = []
    assignment = np.zeros(inst.n, dtype=np.intp)
    for item in order:
        size = inst.sizes[item]
        for b, load in enumerate(loads):
            if load + size <= 1.0 + FIT_SLACK:
                loads[b] += size
                assignment[item] = b
                break
        else:
            loads.append(size)
            assignment[item] = len(loads) - 1
    return assignment


def brute_force_packing(inst: BinPackingInstance, limit: int = 12):
    """Exact minimum bin count by branch and bound; n <= limit items.

    Items are placed largest first into each open bin that fits or one
    fresh bin, pruning branches that cannot beat the incumbent.
    """
    if inst.n > limit:
        raise ValidationError(f"exact search capped at {limit} items, got {inst.n}")
    order = sorted(range(inst.n), key=lambda i: (-inst.sizes[i], i))
    best_count = len(first_fit_decreasing_loads(inst))
    best_assign = first_fit_decreasing(inst)
    lower = int(np.ceil(inst.sizes.sum() - FIT_SLACK))
    assign = np.zeros(inst.n, dtype=np.intp)
    loads: list[float] = []

    def place(pos: int):
        nonlocal best_count, best_assign
        if best_count == lower or len(loads) >= best_count:
            return
        if pos == len(order):
            best_count = len(loads)
            best_assign = assign.copy()
            return
        item = order[pos]
        size = inst.sizes[item]
        seen = set()  # bins with equal load are interchangeable
        for b in range(len(loads)):
            key = round(loads[b], 12)
            if key in seen or loads[b] + size > 1.0 + FIT_SLACK:
                continue
            seen.add(key)
            loads[b] += size
            assign[item] = b
            place(pos + 1)
            loads[b] -= size
        if len(loads) + 1 < best_count:
            loads.append(size)
            assign[item] = len(loads) - 1
            place(pos + 1)
            loads.pop()

    place(0)
    return int(best_count), best_assign


def first_fit_decreasing_loads(inst: BinPackingInstance) -> list[float]:
    a = first_fit_decreasing(inst)
    loads = inst.loads(a)
    return [float(x) for x in loads[loads > 0]]
