"""Projection-free convex optimization with LMO averaging.

Public surface: constraint sets and their oracles (``domains``),
objectives (``objectives``), step/averaging schedules (``schedules``),
the discrete solvers (``solvers``), continuous-time flows (``flows``),
trace diagnostics (``diagnostics``), and benchmark generators
(``experiments``). The ``avgfw`` command line drives end-to-end runs.
"""

from .domains import Atom, DomainSet, Kind, contains, diameter, lmo, lmo_bruteforce
from .objectives import Logistic, QuadraticLS, Scalar1D, gap, gradient, lipschitz_bound, value
from .schedules import Schedule, WeightVector, accumulation, alpha_t, beta, gamma, unrolled_weights
from .solvers import IterateTrace, SolverConfig, SolverState, Variant, resume, solve
from .flows import FlowConfig, FlowTrace, FlowVariant, force_signal, integrate
from .diagnostics import (
    ManifoldReport,
    RateFit,
    Series,
    degeneracy_delta,
    fit_rate,
    identify_manifold,
    support_trajectory,
)

__all__ = [
    "Atom",
    "DomainSet",
    "Kind",
    "contains",
    "diameter",
    "lmo",
    "lmo_bruteforce",
    "Logistic",
    "QuadraticLS",
    "Scalar1D",
    "gap",
    "gradient",
    "lipschitz_bound",
    "value",
    "Schedule",
    "WeightVector",
    "accumulation",
    "alpha_t",
    "beta",
    "gamma",
    "unrolled_weights",
    "IterateTrace",
    "SolverConfig",
    "SolverState",
    "Variant",
    "resume",
    "solve",
    "FlowConfig",
    "FlowTrace",
    "FlowVariant",
    "force_signal",
    "integrate",
    "ManifoldReport",
    "RateFit",
    "Series",
    "degeneracy_delta",
    "fit_rate",
    "identify_manifold",
    "support_trajectory",
]

__version__ = "0.1.0"
