"""Discrete projection-free iterations: vanilla and LMO-averaged.

Both variants share the loop
    s_k    = LMO(grad f(x_k))
    sbar_k = sbar_{k-1} + beta_k (s_k - sbar_{k-1})     (averaged variant)
    x_{k+1} = x_k + gamma_k (d_k - x_k)
with d_k = s_k for the vanilla method and d_k = sbar_k for the averaged
one. Iterations count from k = 0; beta_0 = 1, so sbar_0 = s_0 and the
running average is a true convex combination of atoms from the first
step. Everything is deterministic given the problem and config, and a
run can be checkpointed and resumed with bitwise-identical results.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .domains import Atom, DomainSet, lmo
from .errors import ConfigError, NumericalBlowup
from .objectives import Objective
from .schedules import DEFAULT_SCHEDULE, Schedule, beta, gamma


class Variant(enum.Enum):
    FW = "fw"
    AVGFW = "avgfw"


@dataclass(frozen=True)
class SolverConfig:
    """What to run and what to record.

    x0 = None starts from the vertex LMO(grad f(0)), the standard
    projection-free initializer; pass an explicit vector to override.
    keep_atoms retains the dense atom history (needed only for
    convex-combination audits; integer vertex ids are always kept on
    polyhedral domains).
    """

    variant: Variant = Variant.AVGFW
    schedule: Schedule = DEFAULT_SCHEDULE
    max_iters: int = 1000
    x0: Optional[np.ndarray] = None
    trace_every: int = 1
    keep_atoms: bool = False

    def __post_init__(self):
        if self.max_iters < 1:
            raise ConfigError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.trace_every < 1:
            raise ConfigError(f"trace_every must be >= 1, got {self.trace_every}")


@dataclass
class SolverState:
    """Checkpoint of a run: everything needed to continue it exactly."""

    k: int
    x: np.ndarray
    s_last: Optional[Atom]
    s_bar: np.ndarray


@dataclass
class IterateTrace:
    """Per-iteration record of a run.

    Row arrays hold the metrics at the recorded iterations (every
    ``trace_every`` steps plus the final one), all evaluated at x_k
    before the step: objective value, duality gap, discretization error
    ||d_k - x_k||, and the schedule values used. ``vertex_ids`` is the
    full per-iteration atom-id history on polyhedral domains (None on
    the l2 ball); ``atoms`` is the dense atom history when requested.
    """

    ks: np.ndarray
    f: np.ndarray
    gap: np.ndarray
    disc_err: np.ndarray
    gamma: np.ndarray
    beta: np.ndarray
    atom_ids: Optional[np.ndarray]
    vertex_ids: Optional[np.ndarray]
    atoms: Optional[np.ndarray]
    variant: Variant
    schedule: Schedule
    state: SolverState
    k_start: int = 0
    f_ref: Optional[float] = None


def _default_x0(obj: Objective, domain: DomainSet) -> np.ndarray:
    g0 = obj.gradient(np.zeros(domain.n))
    return lmo(domain, g0).vector.copy()


def solve(obj: Objective, domain: DomainSet, cfg: SolverConfig) -> IterateTrace:
    """Run exactly ``cfg.max_iters`` iterations from the configured start."""
    if obj.n != domain.n:
        raise ConfigError(f"objective dimension {obj.n} != domain dimension {domain.n}")
    if cfg.x0 is None:
        x0 = _default_x0(obj, domain)
    else:
        x0 = np.asarray(cfg.x0, dtype=float).copy()
        if x0.shape != (domain.n,):
            raise ConfigError(f"x0 has shape {x0.shape}, expected ({domain.n},)")
    state = SolverState(k=0, x=x0, s_last=None, s_bar=np.zeros(domain.n))
    return _run(obj, domain, cfg, state)


def resume(state: SolverState, obj: Objective, domain: DomainSet, cfg: SolverConfig) -> IterateTrace:
    """Continue from a checkpoint for ``cfg.max_iters`` further iterations.

    Bitwise-identical to the uninterrupted run split at the same point.
    """
    if state.x.shape != (domain.n,) or state.s_bar.shape != (domain.n,):
        raise ConfigError("state dimension does not match the domain")
    if obj.n != domain.n:
        raise ConfigError(f"objective dimension {obj.n} != domain dimension {domain.n}")
    if state.k < 0:
        raise ConfigError(f"state iteration must be >= 0, got {state.k}")
    fresh = SolverState(k=state.k, x=state.x.copy(), s_last=state.s_last, s_bar=state.s_bar.copy())
    return _run(obj, domain, cfg, fresh)


def _run(obj: Objective, domain: DomainSet, cfg: SolverConfig, state: SolverState) -> IterateTrace:
    sched = cfg.schedule
    averaged = cfg.variant is Variant.AVGFW
    polyhedral = domain.is_polyhedral

    x = state.x
    s_bar = state.s_bar
    k_start = state.k
    k_end = k_start + cfg.max_iters

    rows_k: List[int] = []
    rows_f: List[float] = []
    rows_gap: List[float] = []
    rows_disc: List[float] = []
    rows_gamma: List[float] = []
    rows_beta: List[float] = []
    rows_id: List[int] = []
    vids: List[int] = []
    atom_hist: List[np.ndarray] = []

    last_atom = state.s_last
    for k in range(k_start, k_end):
        f_k, g = obj.value_and_gradient(x)
        if not (np.isfinite(f_k) and np.all(np.isfinite(g))):
            raise NumericalBlowup(k)
        atom = lmo(domain, g)
        last_atom = atom
        b_k = beta(sched, k)
        g_k = gamma(sched, k)
        if averaged:
            s_bar = s_bar + b_k * (atom.vector - s_bar)
            direction = s_bar
        else:
            direction = atom.vector

        if polyhedral:
            vids.append(atom.vertex_id)
        if cfg.keep_atoms:
            atom_hist.append(atom.vector.copy())

        if k % cfg.trace_every == 0 or k == k_end - 1:
            gap_k = float(np.dot(g, x - atom.vector))
            rows_k.append(k)
            rows_f.append(f_k)
            rows_gap.append(max(gap_k, 0.0))
            rows_disc.append(float(np.linalg.norm(direction - x)))
            rows_gamma.append(g_k)
            rows_beta.append(b_k)
            rows_id.append(atom.vertex_id if polyhedral else 0)

        x = x + g_k * (direction - x)

    final = SolverState(k=k_end, x=x, s_last=last_atom, s_bar=s_bar)
    return IterateTrace(
        ks=np.array(rows_k, dtype=int),
        f=np.array(rows_f),
        gap=np.array(rows_gap),
        disc_err=np.array(rows_disc),
        gamma=np.array(rows_gamma),
        beta=np.array(rows_beta),
        atom_ids=np.array(rows_id, dtype=int) if polyhedral else None,
        vertex_ids=np.array(vids, dtype=int) if polyhedral else None,
        atoms=np.array(atom_hist) if cfg.keep_atoms else None,
        variant=cfg.variant,
        schedule=sched,
        state=final,
        k_start=k_start,
    )
