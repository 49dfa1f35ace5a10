"""Seeded random subsets of the k-th powers.

A model assigns every k-th power n a membership probability alpha_n and
carries a 64-bit seed.  Whether n lands in the sampled set is a pure
function of (seed, n) through a counter-based hash, so draws are
independent at the quality of the hash, reproducible, and stable under
extension of the sampling range.  Exact expectations of the counting
function A(x) and of representation counts are computed alongside.

Model kinds, named by the density they target on the k-th powers:

* ``density-k``: alpha_n = n**(-eps); expected A(x) grows like
  x**(1/k - eps) / (1 - k*eps).
* ``density-h``: alpha_n = n**(-(1/k - 1/h + eps)) for h > k; expected
  A(x) grows like x**(1/h - eps) / (k/h - k*eps).
* ``table``: explicit (n, alpha_n) pairs on k-th powers, zero elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import UndefinedFitError
from .powersums import FullPowers, PowerSet, enumerate_representations, integer_kth_root

DENSITY_K = "density-k"
DENSITY_H = "density-h"
TABLE = "table"
KINDS = (DENSITY_K, DENSITY_H, TABLE)

_M64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    # splitmix64 finalizer; the per-integer randomness source
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def _unit_interval(seed: int, n: int) -> float:
    """Deterministic uniform draw in [0, 1) for the pair (seed, n)."""
    return (_mix64(_mix64(seed & _M64) ^ _mix64(n & _M64)) >> 11) / float(1 << 53)


@dataclass(frozen=True)
class RandomModel:
    """Membership-probability law on the k-th powers plus a sampling seed."""

    kind: str
    k: int
    seed: int
    h: int | None = None
    epsilon: float | None = None
    table: tuple[tuple[int, float], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError("exponent k must be a positive integer")
        if not isinstance(self.seed, int):
            raise ValueError("seed must be an integer")
        if self.kind == DENSITY_K:
            if self.h is not None:
                raise ValueError("density-k models take no part count h")
            if self.epsilon is None or not 0 < self.epsilon < 1 / self.k:
                raise ValueError(f"density-k requires 0 < epsilon < 1/k, got {self.epsilon!r}")
        elif self.kind == DENSITY_H:
            if self.h is None or not isinstance(self.h, int) or self.h <= self.k:
                raise ValueError(f"density-h requires an integer h > k, got h={self.h!r}")
            if self.epsilon is None or not 0 < self.epsilon < 1 / self.h:
                raise ValueError(f"density-h requires 0 < epsilon < 1/h, got {self.epsilon!r}")
        else:
            if self.epsilon is not None or self.h is not None:
                raise ValueError("table models take only k, seed and the table")
            if self.table is None:
                raise ValueError("table models need a table of (n, alpha) pairs")
            prev = 0
            for n, alpha in self.table:
                if n <= prev:
                    raise ValueError("table entries must have strictly increasing n")
                r = integer_kth_root(n, self.k)
                if r**self.k != n:
                    raise ValueError(f"table entry {n} is not a {self.k}-th power")
                if not 0.0 <= alpha <= 1.0:
                    raise ValueError(f"probability {alpha} for {n} outside [0, 1]")
                prev = n

    @classmethod
    def density_k(cls, k: int, epsilon: float, seed: int) -> "RandomModel":
        return cls(kind=DENSITY_K, k=k, seed=seed, epsilon=epsilon)

    @classmethod
    def density_h(cls, k: int, h: int, epsilon: float, seed: int) -> "RandomModel":
        return cls(kind=DENSITY_H, k=k, seed=seed, h=h, epsilon=epsilon)

    @classmethod
    def from_table(cls, k: int, entries: Sequence[tuple[int, float]], seed: int) -> "RandomModel":
        table = tuple((int(n), float(a)) for n, a in entries)
        return cls(kind=TABLE, k=k, seed=seed, table=table)

    @cached_property
    def _table_map(self) -> dict[int, float]:
        return dict(self.table or ())

    @property
    def exponent(self) -> float | None:
        """Decay exponent theta of alpha_n = n**(-theta), when one exists."""
        if self.kind == DENSITY_K:
            return self.epsilon
        if self.kind == DENSITY_H:
            return 1 / self.k - 1 / self.h + self.epsilon
        return None


def membership_probability(model: RandomModel, n: int) -> float:
    """alpha_n of the model; zero when n is not a k-th power."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    r = integer_kth_root(n, model.k)
    if r**model.k != n:
        return 0.0
    if model.kind == TABLE:
        return model._table_map.get(n, 0.0)
    return float(n) ** (-model.exponent)


def sample_set(model: RandomModel, x_max: int) -> PowerSet:
    """One draw of the random set restricted to values <= x_max.

    Each k-th power n <= x_max enters independently with probability
    alpha_n; the decision for n depends only on (seed, n), so repeated or
    extended draws agree wherever they overlap.
    """
    if not isinstance(x_max, int) or x_max < 1:
        raise ValueError(f"x_max must be a positive integer, got {x_max!r}")
    k = model.k
    roots = []
    for m in range(1, integer_kth_root(x_max, k) + 1):
        v = m**k
        alpha = membership_probability(model, v)
        if alpha > 0.0 and _unit_interval(model.seed, v) < alpha:
            roots.append(m)
    return PowerSet(roots, k)


@dataclass(frozen=True)
class ExpectedCount:
    """Exact expectation of A(x) plus the matching leading-order term."""

    exact: float
    closed_form: float | None


def expected_count(model: RandomModel, x: int) -> ExpectedCount:
    """E[A(x)] summed exactly over the k-th powers up to x, and the
    closed-form leading term when the model has one (table models do not).
    """
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"x must be a positive integer, got {x!r}")
    k = model.k
    exact = math.fsum(
        membership_probability(model, m**k) for m in range(1, integer_kth_root(x, k) + 1)
    )
    if model.kind == DENSITY_K:
        closed = x ** (1 / k - model.epsilon) / (1 - k * model.epsilon)
    elif model.kind == DENSITY_H:
        closed = x ** (1 / model.h - model.epsilon) / (k / model.h - k * model.epsilon)
    else:
        closed = None
    return ExpectedCount(exact=exact, closed_form=closed)


def expected_representation_count(model: RandomModel, n: int, l: int) -> float:
    """Exact E[R(n)] for l strict parts: the sum over all strict
    representations of n by k-th powers of the product of the parts'
    membership probabilities."""
    if not isinstance(l, int) or l < 2:
        raise ValueError(f"part count must be an integer >= 2, got {l!r}")
    reps = enumerate_representations(n, l, FullPowers(model.k), "strict")
    return math.fsum(
        math.prod(membership_probability(model, v) for v in rep.values) for rep in reps
    )


@dataclass(frozen=True)
class DecayFit:
    """Log-log slope of E[R(n)] over a grid, with the per-point values."""

    slope: float
    intercept: float
    points: tuple[tuple[int, float], ...]
    dropped: tuple[int, ...]


def expectation_decay_fit(model: RandomModel, l: int, n_grid: Sequence[int]) -> DecayFit:
    """Least-squares slope of log E[R(n)] against log n over the grid.

    Grid points with zero expectation are dropped and recorded, never
    smoothed; fewer than two surviving points is an undefined fit.
    """
    grid = [int(n) for n in n_grid]
    if len(grid) < 3:
        raise ValueError("decay fit needs a grid of at least 3 points")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid points must be strictly increasing")
    points = [(n, expected_representation_count(model, n, l)) for n in grid]
    used = [(n, e) for n, e in points if e > 0.0]
    dropped = tuple(n for n, e in points if e == 0.0)
    if len(used) < 2:
        raise UndefinedFitError("all grid expectations vanish; no slope to fit")
    logs_n = np.log([n for n, _ in used])
    logs_e = np.log([e for _, e in used])
    slope, intercept = np.polyfit(logs_n, logs_e, 1)
    return DecayFit(
        slope=float(slope), intercept=float(intercept), points=tuple(used), dropped=dropped
    )
