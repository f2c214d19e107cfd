"""Constraint sets and their linear minimization oracles.

Four compact convex sets are supported: the l1-norm ball, the scaled
probability simplex, the centered box [-alpha, alpha]^n, and the l2-norm
ball. The first three are polyhedral: their LMO returns an extremal
vertex identified by a compact integer ``vertex_id``, which downstream
diagnostics use for support-set bookkeeping. The l2 ball is strongly
convex, returns boundary points with no vertex identity, and exists to
reproduce the boundary/interior dichotomy experiment.

Tie-breaking is deterministic everywhere: the lowest coordinate index
wins, and a sign tie at a zero gradient component resolves to the
positive vertex. ``lmo_bruteforce`` enumerates vertices in an order that
reproduces exactly this rule, so the two oracles agree atom-for-atom.

vertex_id encoding:
  L1Ball   +alpha*e_i -> +(i+1),  -alpha*e_i -> -(i+1)
  Simplex  alpha*e_i  -> i
  Box      corner code: bit i set iff coordinate i equals -alpha
           (code 0 is the all-positive corner)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import ConfigError, DegenerateGradient, UnsupportedKind

BOX_BRUTEFORCE_MAX_DIM = 20


class Kind(enum.Enum):
    L1_BALL = "l1_ball"
    SIMPLEX = "simplex"
    BOX = "box"
    L2_BALL = "l2_ball"


POLYHEDRAL_KINDS = (Kind.L1_BALL, Kind.SIMPLEX, Kind.BOX)


@dataclass(frozen=True)
class DomainSet:
    """A compact convex constraint set of scale ``alpha`` in R^n.

    Immutable after construction; all operations on it are pure.
    """

    kind: Kind
    alpha: float
    n: int

    def __post_init__(self):
        if not (self.alpha > 0):
            raise ConfigError(f"alpha must be positive, got {self.alpha}")
        if self.n < 1:
            raise ConfigError(f"dimension must be >= 1, got {self.n}")

    @property
    def is_polyhedral(self) -> bool:
        return self.kind in POLYHEDRAL_KINDS


@dataclass(frozen=True)
class Atom:
    """An extremal point returned by an LMO.

    ``vertex_id`` is present for polyhedral kinds only and uniquely
    determines ``vector``.
    """

    vector: np.ndarray
    vertex_id: Optional[int] = None


def _check_gradient(domain: DomainSet, gradient: np.ndarray) -> np.ndarray:
    g = np.asarray(gradient, dtype=float)
    if g.shape != (domain.n,):
        raise ConfigError(f"gradient has shape {g.shape}, expected ({domain.n},)")
    if not np.all(np.isfinite(g)):
        raise ConfigError("gradient has non-finite entries")
    return g


def lmo(domain: DomainSet, gradient: np.ndarray) -> Atom:
    """Minimize ``gradient . s`` over the domain and return the minimizer.

    Deterministic tie-breaking: lowest index wins; a zero gradient
    component on a signed vertex resolves to the positive sign.

    Raises
    ------
    DegenerateGradient
        For an exactly zero gradient on the l2 ball, where the
        minimizing direction is undefined.
    """
    g = _check_gradient(domain, gradient)
    a = domain.alpha
    n = domain.n

    if domain.kind is Kind.L1_BALL:
        i = int(np.argmax(np.abs(g)))
        v = np.zeros(n)
        if g[i] > 0:
            v[i] = -a
            return Atom(v, -(i + 1))
        v[i] = a
        return Atom(v, i + 1)

    if domain.kind is Kind.SIMPLEX:
        i = int(np.argmin(g))
        v = np.zeros(n)
        v[i] = a
        return Atom(v, i)

    if domain.kind is Kind.BOX:
        neg = g > 0  # -alpha exactly where the gradient is positive; ties go positive
        v = np.where(neg, -a, a)
        code = int(np.sum(np.left_shift(1, np.nonzero(neg)[0])))
        return Atom(v.astype(float), code)

    # l2 ball
    norm = float(np.linalg.norm(g))
    if norm == 0.0:
        raise DegenerateGradient("zero gradient on the l2 ball")
    direction = -g / norm
    return Atom(a * direction, None)


def enumerate_vertices(domain: DomainSet) -> Iterator[Atom]:
    """Yield every extremal vertex of a polyhedral domain.

    The order matches the lmo tie-break: for each index the positive
    vertex precedes the negative one, indices ascending; box corners
    ascend by corner code.
    """
    a = domain.alpha
    n = domain.n
    if domain.kind is Kind.L1_BALL:
        for i in range(n):
            v = np.zeros(n)
            v[i] = a
            yield Atom(v, i + 1)
            w = np.zeros(n)
            w[i] = -a
            yield Atom(w, -(i + 1))
    elif domain.kind is Kind.SIMPLEX:
        for i in range(n):
            v = np.zeros(n)
            v[i] = a
            yield Atom(v, i)
    elif domain.kind is Kind.BOX:
        if n > BOX_BRUTEFORCE_MAX_DIM:
            raise UnsupportedKind(f"box vertex enumeration limited to n <= {BOX_BRUTEFORCE_MAX_DIM}")
        for code in range(1 << n):
            v = np.where([(code >> i) & 1 for i in range(n)], -a, a)
            yield Atom(v.astype(float), code)
    else:
        raise UnsupportedKind("the l2 ball has no vertex enumeration")


def _vertex_blocks(domain: DomainSet, block: int = 8192):
    """Yield (ids, matrix) chunks covering every vertex, in the same order
    as :func:`enumerate_vertices`."""
    a = domain.alpha
    n = domain.n
    if domain.kind is Kind.L1_BALL:
        ids = np.empty(2 * n, dtype=int)
        V = np.zeros((2 * n, n))
        for i in range(n):
            ids[2 * i] = i + 1
            V[2 * i, i] = a
            ids[2 * i + 1] = -(i + 1)
            V[2 * i + 1, i] = -a
        yield ids, V
    elif domain.kind is Kind.SIMPLEX:
        yield np.arange(n), a * np.eye(n)
    elif domain.kind is Kind.BOX:
        if n > BOX_BRUTEFORCE_MAX_DIM:
            raise UnsupportedKind(f"box vertex enumeration limited to n <= {BOX_BRUTEFORCE_MAX_DIM}")
        bits = np.left_shift(1, np.arange(n))
        for lo in range(0, 1 << n, block):
            codes = np.arange(lo, min(lo + block, 1 << n))
            neg = (codes[:, None] & bits) != 0
            yield codes, np.where(neg, -a, a).astype(float)
    else:
        raise UnsupportedKind("the l2 ball has no vertex enumeration")


def lmo_bruteforce(domain: DomainSet, gradient: np.ndarray) -> Atom:
    """Exact LMO by scanning every vertex; test oracle for ``lmo``.

    Keeps the first vertex attaining the strict minimum, which under the
    enumeration order of :func:`enumerate_vertices` reproduces lmo's
    documented tie-break.
    """
    if not domain.is_polyhedral:
        raise UnsupportedKind("brute-force LMO requires a polyhedral domain")
    g = _check_gradient(domain, gradient)
    best: Optional[Atom] = None
    best_val = np.inf
    for ids, V in _vertex_blocks(domain):
        vals = V @ g
        i = int(np.argmin(vals))  # first occurrence wins ties
        if vals[i] < best_val:
            best_val = float(vals[i])
            best = Atom(V[i].copy(), int(ids[i]))
    assert best is not None
    return best


def contains(domain: DomainSet, x: np.ndarray, tol: float) -> bool:
    """Membership of ``x`` in the domain within additive tolerance ``tol``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (domain.n,):
        raise ConfigError(f"point has shape {x.shape}, expected ({domain.n},)")
    a = domain.alpha
    if domain.kind is Kind.L1_BALL:
        return float(np.sum(np.abs(x))) <= a + tol
    if domain.kind is Kind.SIMPLEX:
        return bool(np.all(x >= -tol)) and abs(float(np.sum(x)) - a) <= tol
    if domain.kind is Kind.BOX:
        return float(np.max(np.abs(x))) <= a + tol
    return float(np.linalg.norm(x)) <= a + tol


def diameter(domain: DomainSet) -> float:
    """Tight upper bound on ||u - v||_2 over the domain."""
    a = domain.alpha
    if domain.kind in (Kind.L1_BALL, Kind.L2_BALL):
        return 2.0 * a
    if domain.kind is Kind.SIMPLEX:
        return a * np.sqrt(2.0)
    return 2.0 * a * np.sqrt(domain.n)


def l1_vertex(alpha: float, n: int, index: int, sign: int) -> Atom:
    """Convenience constructor for a signed l1-ball vertex with its id."""
    if sign not in (-1, 1):
        raise ConfigError("sign must be -1 or +1")
    if not (0 <= index < n):
        raise ConfigError(f"index {index} out of range for dimension {n}")
    v = np.zeros(n)
    v[index] = sign * alpha
    return Atom(v, sign * (index + 1))
