"""Numerical Bach flow on diagonal metrics, dg/dt = B(g).

Integration runs in log variables u_i = ln g_ii, where the flow reads
du_i/dt = b_i(g) with b_i = B_ii/g_ii; positivity of the metric is then
automatic. Two integrators are provided: an adaptive Dormand-Prince 4(5)
pair and a fixed-step classical Runge-Kutta scheme for convergence
studies.

Soliton metrics evolve self-similarly: every slot is multiplied by a
power of (1 - 4ct), the square of the conformal factor attached to a
weight -2 tensor. ``self_similarity_check`` integrates numerically and
compares against that closed prediction.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .bach import bach_tensor
from .curvature import DiagonalMetric
from .geometry import entry


def tau(w: float, c: float, t: float) -> float:
    """Scale factor carried by a weight-w geometric flow soliton at time t.

    Weight w means the flow tensor rescales as lambda^(w/2 - 1) under
    g -> lambda g; w = 2 is the exponential borderline. The Bach flow
    sits at w = -2, giving tau = (1 - 4ct)^(1/2).
    """
    if w == 2:
        return math.exp(-2 * c * t)
    a = 1 - w / 2
    base = 1 - 2 * c * a * t
    if base <= 0:
        raise ValueError(f"scale factor undefined at t={t}: base {base} <= 0")
    return base ** (1 / a)


@dataclass(frozen=True)
class ScaleLaw:
    """Per-slot power law g_ii(t) = g_ii(0) * (1 - 4ct)^kappa_i."""

    geometry: str
    c: float
    exponents: Tuple[float, float, float, float]

    def base(self, t: float) -> float:
        b = 1 - 4 * self.c * t
        if b <= 0:
            raise ValueError(f"scale law undefined at t={t}")
        return b

    def factors(self, t: float) -> Tuple[float, ...]:
        b = self.base(t)
        return tuple(b ** k for k in self.exponents)

    def predict(self, g0: DiagonalMetric, t: float) -> Tuple[float, ...]:
        f = self.factors(t)
        return tuple(float(g) * f[i] for i, g in enumerate(g0.components))


def scale_law(geometry: str, c) -> ScaleLaw:
    """Self-similar law for a certified soliton constant c on a geometry.

    Curved slots carry kappa = 1/2. Flat slots compensate through the
    vanishing trace: kappa = -3/2 on the 1x3 splits, -1/2 on the 2x2.
    """
    split = entry(geometry).split
    if split == "1x3":
        exps = (-1.5, 0.5, 0.5, 0.5)
    elif split == "2x2":
        exps = (-0.5, -0.5, 0.5, 0.5)
    else:
        exps = (0.0, 0.0, 0.0, 0.0)
    return ScaleLaw(geometry, float(c), exps)


def flow_rhs(geometry: str) -> Callable[[np.ndarray], np.ndarray]:
    """Right-hand side u -> b(exp(u)) of the log-variable flow."""
    entry(geometry)  # fail early on unknown tags

    def rhs(u: np.ndarray) -> np.ndarray:
        g = DiagonalMetric(*(float(v) for v in np.exp(u)))
        b = bach_tensor(geometry, g, "curvature").ratios(g)
        return np.array(b, dtype=float)

    return rhs


@dataclass(frozen=True)
class FlowTrajectory:
    geometry: str
    method: str
    t: np.ndarray               # accepted nodes, shape (n,)
    g: np.ndarray               # metric components, shape (n, 4)
    trace_residual: np.ndarray  # sum of b_i at each node, shape (n,)
    status: str                 # completed | singular | step_underflow
    n_accepted: int
    n_rejected: int

    def final_metric(self) -> DiagonalMetric:
        return DiagonalMetric(*(float(v) for v in self.g[-1]))

    def write_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "g00", "g11", "g22", "g33", "trace_residual"])
            for i in range(len(self.t)):
                w.writerow([repr(float(self.t[i])),
                            *(repr(float(v)) for v in self.g[i]),
                            repr(float(self.trace_residual[i]))])

    def to_json_dict(self) -> dict:
        return {
            "geometry": self.geometry,
            "method": self.method,
            "status": self.status,
            "n_accepted": self.n_accepted,
            "n_rejected": self.n_rejected,
            "t": [float(v) for v in self.t],
            "g": [[float(v) for v in row] for row in self.g],
            "trace_residual": [float(v) for v in self.trace_residual],
        }


# Dormand-Prince 4(5) tableau; the last b5 row doubles as the stage-7
# weights, so k7 of an accepted step is k1 of the next (FSAL).
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200,
          187 / 2100, 1 / 40)

#: metric floor relative to the initial metric before the run stops
SINGULAR_FLOOR = 1e-8


def _dp45(rhs, u0: np.ndarray, t_max: float, rtol: float, atol: float,
          max_step: float, g_floor: float):
    t, u = 0.0, u0.copy()
    k1 = rhs(u)
    dt = min(max_step, t_max / 1024) or t_max / 1024
    ts, us, traces = [t], [u.copy()], [float(k1.sum())]
    status = "completed"
    accepted = rejected = 0
    while t < t_max:
        dt = min(dt, t_max - t)
        if dt < 1e-14 * t_max:
            status = "step_underflow"
            break
        k = [k1]
        for row in _DP_A[1:]:
            stage = u + dt * sum(c * ki for c, ki in zip(row, k))
            k.append(rhs(stage))
        u5 = u + dt * sum(b * ki for b, ki in zip(_DP_B5, k))
        u4 = u + dt * sum(b * ki for b, ki in zip(_DP_B4, k))
        scale_vec = atol + rtol * np.maximum(np.abs(u), np.abs(u5))
        err = math.sqrt(float(np.mean(((u5 - u4) / scale_vec) ** 2)))
        if err <= 1.0:
            t += dt
            u = u5
            k1 = k[6]  # FSAL: stage 7 is rhs(u5)
            accepted += 1
            ts.append(t)
            us.append(u.copy())
            traces.append(float(k1.sum()))
            if float(np.exp(u).min()) < g_floor:
                status = "singular"
                break
        else:
            rejected += 1
        factor = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
        dt = min(dt * factor, max_step)
    return ts, us, traces, status, accepted, rejected


def _rk4(rhs, u0: np.ndarray, t_max: float, n_steps: int, g_floor: float):
    dt = t_max / n_steps
    t, u = 0.0, u0.copy()
    k1 = rhs(u)
    ts, us, traces = [t], [u.copy()], [float(k1.sum())]
    status = "completed"
    for _ in range(n_steps):
        k2 = rhs(u + 0.5 * dt * k1)
        k3 = rhs(u + 0.5 * dt * k2)
        k4 = rhs(u + dt * k3)
        u = u + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        t += dt
        k1 = rhs(u)
        ts.append(t)
        us.append(u.copy())
        traces.append(float(k1.sum()))
        if float(np.exp(u).min()) < g_floor:
            status = "singular"
            break
    return ts, us, traces, status, len(ts) - 1, 0


def run_flow(geometry: str, g0: DiagonalMetric, t_max: float,
             method: str = "dp45", rtol: float = 1e-10, atol: float = 1e-13,
             max_step: float | None = None, n_steps: int = 256) -> FlowTrajectory:
    """Integrate the Bach flow from g0 over [0, t_max].

    A run ends early with status "singular" once some component falls
    below SINGULAR_FLOOR times its initial size (collapse detection), or
    "step_underflow" when the adaptive controller stalls; the trajectory
    keeps every accepted node either way.
    """
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    rhs = flow_rhs(geometry)
    u0 = np.log(np.array([float(v) for v in g0.components]))
    g_floor = SINGULAR_FLOOR * min(float(v) for v in g0.components)
    if method == "dp45":
        out = _dp45(rhs, u0, t_max, rtol, atol, max_step or t_max / 64, g_floor)
    elif method == "rk4":
        out = _rk4(rhs, u0, t_max, n_steps, g_floor)
    else:
        raise ValueError("method must be 'dp45' or 'rk4'")
    ts, us, traces, status, acc, rej = out
    return FlowTrajectory(
        geometry=geometry,
        method=method,
        t=np.array(ts),
        g=np.exp(np.array(us)),
        trace_residual=np.array(traces),
        status=status,
        n_accepted=acc,
        n_rejected=rej,
    )


@dataclass(frozen=True)
class SelfSimilarityResult:
    trajectory: FlowTrajectory
    law: ScaleLaw
    max_rel_error: float

    @property
    def ok(self) -> bool:
        return self.trajectory.status == "completed"


def self_similarity_check(geometry: str, g0: DiagonalMetric, c,
                          t_max: float, method: str = "dp45",
                          **kwargs) -> SelfSimilarityResult:
    """Integrate from a soliton metric and compare with the scale law.

    max_rel_error is the worst relative deviation of any metric slot at
    any accepted node from g_ii(0) * (1 - 4ct)^kappa_i.
    """
    traj = run_flow(geometry, g0, t_max, method=method, **kwargs)
    law = scale_law(geometry, c)
    g0f = np.array([float(v) for v in g0.components])
    worst = 0.0
    for i, t in enumerate(traj.t):
        base = law.base(float(t))
        pred = g0f * base ** np.array(law.exponents)
        worst = max(worst, float(np.max(np.abs(traj.g[i] / pred - 1.0))))
    return SelfSimilarityResult(traj, law, worst)


def collapse_time(trajectory: FlowTrajectory) -> float | None:
    """Time of the detected collapse, None for a completed run."""
    if trajectory.status == "completed":
        return None
    return float(trajectory.t[-1])
