"""Post-hoc trace analysis.

Four instruments: empirical decay-rate fitting (least-squares slope of
log metric vs log iteration), the working-set trajectory (distinct atoms
from each iteration to the end), the degeneracy margin of a candidate
optimum on the l1 ball, and the identification index after which every
emitted atom belongs to the optimal support set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from .domains import DomainSet, Kind, enumerate_vertices
from .errors import ConfigError, InsufficientData, NoZeroSet, UnsupportedKind
from .objectives import Objective
from .solvers import IterateTrace

GEOMETRIC_SUBSAMPLE_RATIO = 1.1
SUPPORT_REL_TOL = 1e-6
ZERO_COORD_FACTOR = 1e-8
MIN_FIT_POINTS = 10


class Series(enum.Enum):
    GAP = "gap"
    DISC_ERR = "disc_err"
    F_MINUS_REF = "f_minus_ref"


@dataclass(frozen=True)
class RateFit:
    """OLS fit of log(series) on log(k): series ~ exp(intercept) * k^slope."""

    slope: float
    intercept: float
    window: Tuple[int, int]
    r_squared: float
    n_points: int


@dataclass(frozen=True)
class ManifoldReport:
    support_star: FrozenSet[int]
    k_bar: Optional[int]
    delta: Optional[float]


def _series_values(trace: IterateTrace, series: Series, f_ref: Optional[float]) -> np.ndarray:
    if series is Series.GAP:
        return trace.gap
    if series is Series.DISC_ERR:
        return trace.disc_err
    ref = f_ref if f_ref is not None else trace.f_ref
    if ref is None:
        raise ConfigError("F_MINUS_REF fit needs a reference value; none on the trace or call")
    return trace.f - ref


def _geometric_subsample(ks: np.ndarray) -> np.ndarray:
    keep = []
    threshold = -np.inf
    for idx, k in enumerate(ks):
        if k >= threshold:
            keep.append(idx)
            threshold = max(k * GEOMETRIC_SUBSAMPLE_RATIO, k + 1)
    return np.array(keep, dtype=int)


def fit_rate(
    trace: IterateTrace,
    series: Series,
    window: Tuple[int, int],
    f_ref: Optional[float] = None,
) -> RateFit:
    """Fit the empirical decay exponent of a trace metric over a window.

    Points are geometrically subsampled (ratio 1.1) before the fit so
    uniform recording does not overweight the tail in log space;
    nonpositive or non-finite entries are dropped, and if subsampling
    would leave fewer than 10 points the fit falls back to all positive
    points in the window. Raises InsufficientData below 10 usable points.
    """
    k_lo, k_hi = window
    if not k_lo < k_hi:
        raise ConfigError(f"window must satisfy k_lo < k_hi, got {window}")
    vals = _series_values(trace, series, f_ref)
    ks = trace.ks
    mask = (ks >= max(k_lo, 1)) & (ks <= k_hi) & np.isfinite(vals) & (vals > 0)
    ks_w = ks[mask]
    vals_w = vals[mask]
    if ks_w.size < MIN_FIT_POINTS:
        raise InsufficientData(
            f"{ks_w.size} positive points in window {window}; need >= {MIN_FIT_POINTS}"
        )
    idx = _geometric_subsample(ks_w)
    if idx.size >= MIN_FIT_POINTS:
        ks_w = ks_w[idx]
        vals_w = vals_w[idx]

    logk = np.log(ks_w.astype(float))
    logv = np.log(vals_w)
    slope, intercept = np.polyfit(logk, logv, 1)
    pred = slope * logk + intercept
    ss_res = float(np.sum((logv - pred) ** 2))
    ss_tot = float(np.sum((logv - np.mean(logv)) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RateFit(float(slope), float(intercept), (k_lo, k_hi), r2, int(ks_w.size))


def support_trajectory(trace: IterateTrace) -> np.ndarray:
    """Distinct atom count from each iteration to the end of the run.

    Entry j counts the unique vertex ids among s_j, s_{j+1}, ..., so the
    sequence is non-increasing and starts at the total distinct count.
    """
    if trace.vertex_ids is None:
        raise UnsupportedKind("support trajectory needs polyhedral vertex ids")
    vids = trace.vertex_ids
    out = np.empty(vids.size, dtype=int)
    seen = set()
    for j in range(vids.size - 1, -1, -1):
        seen.add(int(vids[j]))
        out[j] = len(seen)
    return out


def degeneracy_delta(obj: Objective, domain: DomainSet, x_star: np.ndarray) -> float:
    """Gradient-magnitude margin of the zero coordinates of x_star.

    delta = min over zero coordinates j of  ||g||_inf - |g_j|  with
    g = grad f(x_star); zero iff some zero coordinate ties the maximum,
    i.e. the problem is degenerate. Coordinates below 1e-8 * alpha count
    as zero.
    """
    if domain.kind is not Kind.L1_BALL:
        raise UnsupportedKind("degeneracy margin is defined on the l1 ball")
    x_star = np.asarray(x_star, dtype=float)
    zero_mask = np.abs(x_star) <= ZERO_COORD_FACTOR * domain.alpha
    if not np.any(zero_mask):
        raise NoZeroSet("candidate optimum has no zero coordinates")
    g = np.abs(obj.gradient(x_star))
    return float(np.max(g) - np.max(g[zero_mask]))


def support_set(obj: Objective, domain: DomainSet, x_star: np.ndarray) -> FrozenSet[int]:
    """Vertex ids whose LMO objective at grad f(x_star) is within
    relative tolerance 1e-6 of the best vertex value."""
    if not domain.is_polyhedral:
        raise UnsupportedKind("support sets need a polyhedral domain")
    g = obj.gradient(np.asarray(x_star, dtype=float))
    atoms = list(enumerate_vertices(domain))
    vals = np.array([float(np.dot(g, a.vector)) for a in atoms])
    best = float(np.min(vals))
    tol = SUPPORT_REL_TOL * abs(best)
    return frozenset(atoms[i].vertex_id for i in np.nonzero(vals <= best + tol)[0])


def identify_manifold(
    trace: IterateTrace,
    obj: Objective,
    domain: DomainSet,
    x_star: np.ndarray,
) -> ManifoldReport:
    """Locate the iteration after which all emitted atoms live on the
    optimal support.

    k_bar is the smallest iteration index such that every atom from it
    onward has a vertex id inside the support set of x_star; None when
    the final atom is already outside it. delta is the degeneracy margin
    when defined (l1 ball with a nonempty zero set), else None.
    """
    if trace.vertex_ids is None:
        raise UnsupportedKind("manifold identification needs polyhedral vertex ids")
    star = support_set(obj, domain, x_star)
    vids = trace.vertex_ids
    k_bar: Optional[int] = trace.k_start
    for j in range(vids.size - 1, -1, -1):
        if int(vids[j]) not in star:
            k_bar = None if j == vids.size - 1 else trace.k_start + j + 1
            break
    try:
        delta = degeneracy_delta(obj, domain, np.asarray(x_star, dtype=float))
    except (UnsupportedKind, NoZeroSet):
        delta = None
    return ManifoldReport(support_star=star, k_bar=k_bar, delta=delta)


def render_report(entries: Dict[str, object]) -> str:
    """Flat ``key = value`` text block, one entry per line."""
    lines = []
    for key, val in entries.items():
        if isinstance(val, float):
            lines.append(f"{key} = {float(val)!r}")
        else:
            lines.append(f"{key} = {val}")
    return "\n".join(lines) + "\n"
