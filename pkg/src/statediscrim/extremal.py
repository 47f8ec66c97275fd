"""Extremal symmetric coefficient families.

Over all symmetric ensembles with a fixed unambiguous-discrimination
probability p_usd, the hypothesis-testing maximum is extremized by
coefficient vectors with exactly two distinct values: n0 coefficients
tied at the minimum c0 = sqrt(p_usd/n) and the remaining n - n0 raised
to the common level fixed by normalization.  The resulting envelope

    p_hyp = (n0*sqrt(p_usd) + sqrt((n-n0)*(n - n0*p_usd)))^2 / n^2

is nonincreasing in n0, so n0=1 gives the tight upper bound and
n0=n-1 the tight lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensembles import SymmetricEnsemble, make_symmetric
from .exceptions import InfeasibleConfig, OutOfRange

__all__ = [
    "ExtremalConfig",
    "extremal_coefficients",
    "extremum_profile",
    "local_extremum_p_hyp",
    "p_hyp_lower_bound",
    "p_hyp_upper_bound",
    "spot_check_three_state_maximum",
    "verify_n0_monotonicity",
]


@dataclass(frozen=True)
class ExtremalConfig:
    """A two-level coefficient family: n states, n0 of them at the minimum."""

    n: int
    n0: int
    p_usd: float

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InfeasibleConfig(f"n must be >= 2, got {self.n}")
        if not 1 <= self.n0 <= self.n - 1:
            raise InfeasibleConfig(f"n0 must lie in 1..{self.n - 1}, got {self.n0}")
        if not 0.0 < self.p_usd <= 1.0:
            raise InfeasibleConfig(f"p_usd must lie in (0, 1], got {self.p_usd}")
        # p_usd <= 1 already guarantees n0 * p_usd / n <= 1 and that the
        # raised coefficients stay >= c0, so the family is normalizable.


def _extremum_value(n, n0, p_usd):
    """Envelope value; the squared sum is expanded so the endpoint values
    p_usd=0 and p_usd=1 come out exact in floating point."""
    cross = 2.0 * n0 * np.sqrt(p_usd * (n - n0) * (n - n0 * p_usd))
    return (n0 * n0 * p_usd + (n - n0) * (n - n0 * p_usd) + cross) / (n * n)


def extremal_coefficients(cfg: ExtremalConfig) -> SymmetricEnsemble:
    """Coefficient vector of the extremal family member.

    The n0 minimal coefficients sqrt(p_usd/n) occupy indices 0..n0-1; the
    remaining n - n0 carry the level required by normalization.  All
    measures are invariant under coefficient permutation, so the placement
    is just a canonical choice.
    """
    n, n0, p = cfg.n, cfg.n0, cfg.p_usd
    c0 = np.sqrt(p / n)
    raised = np.sqrt((1.0 - n0 * p / n) / (n - n0))
    if raised < c0 - 1e-15:
        raise InfeasibleConfig(
            f"minimum coefficient {c0} would exceed the raised level {raised}"
        )
    coeffs = np.concatenate([np.full(n0, c0), np.full(n - n0, raised)])
    return make_symmetric(n, coeffs)


def local_extremum_p_hyp(cfg: ExtremalConfig) -> float:
    """Hypothesis-testing probability of the extremal family member."""
    return float(_extremum_value(cfg.n, cfg.n0, cfg.p_usd))


def _check_bound_args(n: int, p_usd) -> np.ndarray:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
        raise OutOfRange(f"n must be an integer >= 2, got {n!r}")
    p = np.asarray(p_usd, dtype=float)
    if np.any(p < 0.0) or np.any(p > 1.0) or not np.all(np.isfinite(p)):
        raise OutOfRange("p_usd must lie in [0, 1]")
    return p


def p_hyp_upper_bound(n: int, p_usd):
    """Tight upper bound on p_hyp at fixed p_usd (the n0=1 envelope).

    Accepts a scalar or an array of p_usd values.
    """
    p = _check_bound_args(n, p_usd)
    value = _extremum_value(n, 1, p)
    return float(value) if np.isscalar(p_usd) else value


def p_hyp_lower_bound(n: int, p_usd):
    """Tight lower bound on p_hyp at fixed p_usd (the n0=n-1 envelope).

    Accepts a scalar or an array of p_usd values.
    """
    p = _check_bound_args(n, p_usd)
    value = _extremum_value(n, n - 1, p)
    return float(value) if np.isscalar(p_usd) else value


def extremum_profile(n: int, p_usd: float) -> np.ndarray:
    """Envelope values over integer n0 = 1..n-1 at one p_usd."""
    p = float(_check_bound_args(n, p_usd))
    return np.array([_extremum_value(n, n0, p) for n0 in range(1, n)])


def verify_n0_monotonicity(n: int, p_usd_grid, slack: float = 1e-12) -> bool:
    """Whether the envelope is nonincreasing over integer n0 for every
    grid value of p_usd."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 3:
        raise OutOfRange(f"n must be an integer >= 3, got {n!r}")
    for p in np.asarray(p_usd_grid, dtype=float):
        profile = extremum_profile(n, float(p))
        if np.any(np.diff(profile) > slack):
            return False
    return True


def spot_check_three_state_maximum(
    p_usd: float, restarts: int = 8, rounds: int = 48, seed: int = 0
) -> tuple[float, float]:
    """Diagnostic: maximize the three-state success formula directly.

    Holds the minimum coefficient at sqrt(p_usd/3) and hill-climbs the
    remaining two coefficients over the normalization circle from random
    starting angles.  Returns (best found, closed-form upper bound); the
    two agree when the two-level family really is where the maximum lives.
    """
    cfg = ExtremalConfig(n=3, n0=1, p_usd=p_usd)
    c0 = np.sqrt(cfg.p_usd / 3.0)
    radius = np.sqrt(1.0 - c0 * c0)
    # Feasible arc: both free coefficients at least c0.
    theta_min = np.arcsin(min(1.0, c0 / radius))
    theta_max = np.pi / 2.0 - theta_min

    def objective(theta: float) -> float:
        a = radius * np.cos(theta)
        b = radius * np.sin(theta)
        return (c0 + a + b) ** 2 / 3.0

    rng = np.random.default_rng(seed)
    best = -np.inf
    for _ in range(restarts):
        theta = rng.uniform(theta_min, theta_max)
        value = objective(theta)
        step = (theta_max - theta_min) / 4.0
        for _ in range(rounds):
            moved = True
            while moved:
                moved = False
                for cand in (theta + step, theta - step):
                    cand = min(max(cand, theta_min), theta_max)
                    cand_value = objective(cand)
                    if cand_value > value:
                        theta, value = cand, cand_value
                        moved = True
            step /= 2.0
        best = max(best, value)
    return best, local_extremum_p_hyp(cfg)
