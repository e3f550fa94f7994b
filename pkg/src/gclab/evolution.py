"""Dissipative evolution of covariance matrices in uncorrelated Gaussian baths.

The exact channel map is entrywise linear in k = exp(-Gamma t):

    sigma(t) = sigma_inf (1 - k) + sigma(0) k

A fixed-step classical RK4 integrator of the equivalent covariance flow
d sigma/dt = -Gamma (sigma - sigma_inf) is provided as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import ChannelSpec, asymptotic_covariance
from .errors import DomainError
from .states import (
    CovarianceMatrix,
    StandardForm,
    log_negativity,
    mutual_information,
    purity,
    require_bona_fide,
    symplectic_spectrum,
    von_neumann_entropy,
)


def evolve(sigma0: CovarianceMatrix, sigma_inf: CovarianceMatrix,
           gamma: float, t: float) -> CovarianceMatrix:
    """Closed-form channel map at time t."""
    require_bona_fide(sigma0)
    require_bona_fide(sigma_inf)
    if gamma <= 0.0:
        raise DomainError(f"gamma must be > 0, got {gamma:.6g}")
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t:.6g}")
    k = math.exp(-gamma * t)
    return CovarianceMatrix(sigma_inf.entries * (1.0 - k) + sigma0.entries * k)


def evolve_ode_oracle(sigma0: CovarianceMatrix, sigma_inf: CovarianceMatrix,
                      gamma: float, t: float, steps: int = 1000) -> CovarianceMatrix:
    """RK4 integration of d sigma/dt = -Gamma (sigma - sigma_inf)."""
    if steps < 1:
        raise DomainError("steps must be >= 1")
    s = sigma0.entries.copy()
    target = sigma_inf.entries
    h = t / steps
    rhs = lambda m: -gamma * (m - target)
    for _ in range(steps):
        k1 = rhs(s)
        k2 = rhs(s + 0.5 * h * k1)
        k3 = rhs(s + 0.5 * h * k2)
        k4 = rhs(s + h * k3)
        s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return CovarianceMatrix(s)


@dataclass(frozen=True)
class EvolutionProblem:
    """Initial standard form, channel, and the sampling grid in t."""

    initial: StandardForm
    channel: ChannelSpec
    time_grid: tuple[float, ...]

    def __post_init__(self):
        grid = tuple(float(t) for t in self.time_grid)
        if not grid:
            raise DomainError("time grid must be nonempty")
        if any(t2 <= t1 for t1, t2 in zip(grid, grid[1:])):
            raise DomainError("time grid must be strictly increasing")
        if grid[0] < 0.0:
            raise DomainError("times must be >= 0")
        object.__setattr__(self, "time_grid", grid)
        require_bona_fide(self.initial.to_matrix())


@dataclass(frozen=True)
class MetricsRow:
    """All sampled scalar diagnostics of the evolved state at one time."""

    t: float
    purity: float
    von_neumann_entropy: float
    mutual_information: float
    log_negativity: float
    nt_minus: float
    n_minus: float
    n_plus: float
    separable: bool


def metrics_at(sigma: CovarianceMatrix, t: float) -> MetricsRow:
    spec = symplectic_spectrum(sigma)
    neg = log_negativity(sigma)
    return MetricsRow(
        t=t,
        purity=purity(sigma),
        von_neumann_entropy=von_neumann_entropy(sigma),
        mutual_information=mutual_information(sigma),
        log_negativity=neg.log_negativity,
        nt_minus=neg.nt_minus,
        n_minus=spec.n_minus,
        n_plus=spec.n_plus,
        separable=neg.separable,
    )


def time_series(problem: EvolutionProblem) -> list[MetricsRow]:
    """One MetricsRow per grid point, via the closed-form map."""
    sigma0 = problem.initial.to_matrix()
    sigma_inf = asymptotic_covariance(problem.channel)
    rows = []
    for t in problem.time_grid:
        sigma = evolve(sigma0, sigma_inf, problem.channel.gamma, t)
        rows.append(metrics_at(sigma, t))
    return rows
