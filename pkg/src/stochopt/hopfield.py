"""Binary Hopfield network and its map onto the TSP.

A tour of n cities is encoded as an n x n binary matrix V with V[x][i]=1
when city x sits at tour position i (positions wrap modulo n).  Neuron
(x, i) is flat index x*n + i.

Penalty energy (zero exactly on permutation matrices):

    A/2 sum_x sum_{i != j} V[x][i] V[x][j]      one position per city
  + B/2 sum_i sum_{x != y} V[x][i] V[y][i]      one city per position
  + C/2 (sum V - n)^2                           n entries in total

Tour-length energy:

    D/2 sum_{x != y} sum_i d[x][y] V[x][i] (V[y][i+1] + V[y][i-1])

which counts every tour edge twice, so it equals D times the decoded
tour length on any permutation matrix.

Connection weights between distinct neurons (x,i) and (y,j):

    w = -A [x==y][i!=j] - B [i==j][x!=y] - C - D d[x][y]([j==i+1] + [j==i-1])

with a zero diagonal.  Dynamics are asynchronous: one uniformly drawn
neuron updates to 1 when its input reaches its firing threshold
(w[:,i] @ s - theta_i >= 0, ties fire), else to 0.  The matching
Lyapunov energy is the threshold form

    E(s) = -1/2 s W s + theta . s

which never increases under the update when W is symmetric with a zero
diagonal: flipping neuron i changes E by -(w[:,i] @ s - theta_i) times
the flip direction.

Thresholds come from expanding the C-term with s^2 = s for binary
states: C/2 (S-n)^2 = C/2 sum_{a!=b} s_a s_b + (C/2 - Cn) S + C n^2/2,
so the uniform threshold theta = -(C(2n-1)/2), a constant positive
drive, makes E equal the penalty plus tour-length energy minus the
constant C n^2/2 on every binary state.  Without that drive the
all-negative weights would switch every neuron off.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Budget, Run, RunRecord, ValidationError, split_streams


@dataclass(frozen=True)
class TankParams:
    a: float = 500.0
    b: float = 500.0
    c: float = 200.0
    d: float = 500.0

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValidationError("penalty coefficients must be non-negative")


@dataclass
class HopfieldNet:
    weights: np.ndarray
    thresholds: np.ndarray
    state: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValidationError("weight matrix must be square")
        if not np.allclose(w, w.T):
            raise ValidationError("weights must be symmetric")
        if np.any(np.diag(w) != 0):
            raise ValidationError("no self-connections: diagonal must be zero")
        self.weights = w
        self.thresholds = np.broadcast_to(
            np.asarray(self.thresholds, dtype=float), (w.shape[0],)
        ).copy()
        if self.state is None:
            self.state = np.zeros(w.shape[0])
        else:
            self.state = _validate_state(self.state, w.shape[0])

    @property
    def size(self) -> int:
        return self.weights.shape[0]


def _validate_state(state, m: int) -> np.ndarray:
    s = np.asarray(state, dtype=float)
    if s.shape != (m,):
        raise ValidationError(f"state must have {m} entries")
    if not np.all((s == 0.0) | (s == 1.0)):
        raise ValidationError("states are binary 0/1 vectors")
    return s


def _validate_matrix(v) -> np.ndarray:
    m = np.asarray(v, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError("tour matrix must be square")
    if not np.all((m == 0.0) | (m == 1.0)):
        raise ValidationError("tour matrix must be binary")
    return m


def constraint_energy(v, p: TankParams) -> float:
    m = _validate_matrix(v)
    n = m.shape[0]
    rows = m.sum(axis=1)
    cols = m.sum(axis=0)
    total = m.sum()
    row_term = 0.5 * p.a * float((rows**2 - rows).sum())
    col_term = 0.5 * p.b * float((cols**2 - cols).sum())
    count_term = 0.5 * p.c * float(total - n) ** 2
    return row_term + col_term + count_term


def cost_energy(v, distances, d_coeff: float) -> float:
    m = _validate_matrix(v)
    dist = np.asarray(distances, dtype=float)
    if dist.shape != m.shape:
        raise ValidationError("distance matrix must match the tour matrix size")
    if not np.allclose(dist, dist.T):
        raise ValidationError("distance matrix must be symmetric")
    forward = np.roll(m, -1, axis=1)
    backward = np.roll(m, 1, axis=1)
    pairing = m @ (forward + backward).T  # [x,y] = sum_i V[x][i](V[y][i+1]+V[y][i-1])
    off_diag = dist * pairing
    np.fill_diagonal(off_diag, 0.0)  # the x == y terms are excluded
    return 0.5 * d_coeff * float(off_diag.sum())


def build_weights(inst, p: TankParams) -> HopfieldNet:
    n = inst.n
    if n < 2:
        raise ValidationError("the tour encoding needs at least two cities")
    m = n * n
    city = np.arange(m) // n
    pos = np.arange(m) % n
    same_city = city[:, None] == city[None, :]
    same_pos = pos[:, None] == pos[None, :]
    gap = (pos[None, :] - pos[:, None]) % n
    adjacent = (gap == 1).astype(float) + (gap == n - 1).astype(float)
    w = (
        -p.a * (same_city & ~same_pos)
        - p.b * (same_pos & ~same_city)
        - p.c
        - p.d * inst.d[city[:, None], city[None, :]] * adjacent
    )
    np.fill_diagonal(w, 0.0)
    theta = -p.c * (2 * n - 1) / 2.0
    return HopfieldNet(weights=w, thresholds=np.full(m, theta))


def network_energy(net: HopfieldNet) -> float:
    s = net.state
    return float(-0.5 * s @ net.weights @ s + net.thresholds @ s)


def async_step(net: HopfieldNet, rng) -> HopfieldNet:
    i = int(rng.integers(net.size))
    h = float(net.weights[:, i] @ net.state) - float(net.thresholds[i])
    net.state[i] = 1.0 if h >= 0 else 0.0
    return net


def is_fixed_point(net: HopfieldNet) -> bool:
    h = net.weights @ net.state - net.thresholds
    desired = (h >= 0).astype(float)
    return bool(np.array_equal(desired, net.state))


def decode_tour(v):
    """City order by position if v is a permutation matrix, else None."""
    m = _validate_matrix(v)
    if not (np.all(m.sum(axis=0) == 1.0) and np.all(m.sum(axis=1) == 1.0)):
        return None
    return np.argmax(m, axis=0).astype(np.intp)


def hopfield_solve(
    inst,
    p: TankParams | None = None,
    max_steps: int | None = None,
    restarts: int = 100,
    seed: int = 0,
) -> RunRecord:
    """Best valid decoded tour over random-state restarts.

    Each restart runs the asynchronous dynamics until a full sweep would
    change nothing, or until `max_steps` single-neuron updates (default
    100 sweeps).  Evaluations count decoded valid tours, one per valid
    restart; the valid fraction lands in the record extras.
    """
    p = p or TankParams()
    if restarts < 1:
        raise ValidationError("need at least one restart")
    net = build_weights(inst, p)
    m = net.size
    if max_steps is None:
        max_steps = 100 * m
    run = Run(inst, Budget(max_evaluations=restarts), seed, "hopfield_tank")
    streams = split_streams(run.rng, restarts)
    valid = 0
    for stream in streams:
        net.state = (stream.random(m) < 0.5).astype(float)
        steps = 0
        converged = is_fixed_point(net)
        while not converged and steps < max_steps:
            sweep = min(m, max_steps - steps)
            for _ in range(sweep):
                async_step(net, stream)
            steps += sweep
            converged = is_fixed_point(net)
        tour = decode_tour(net.state.reshape(inst.n, inst.n))
        if tour is not None:
            valid += 1
            run.evaluate(tour)
    status = "ok" if valid > 0 else "no_valid_tour"
    extras = {
        "restarts": restarts,
        "valid_tours": valid,
        "valid_fraction": valid / restarts,
        "max_steps": max_steps,
    }
    return run.record(status, extras=extras)
