"""Ordering comparisons between the two distinguishability measures.

A reversal witness is a pair of same-size symmetric ensembles that the two
measures rank in opposite orders: strictly lower p_usd yet strictly higher
p_hyp.  The ratio grid sweeps the extremal-envelope ratio
p_hyp_upper(p_usd_1 - epsilon) / p_hyp_lower(p_usd_1) over the plane, which
is exactly the quantity the saturating ensemble pairs realize.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .ensembles import SymmetricEnsemble
from .exceptions import DimensionMismatch, InfeasibleConfig, InvariantViolation, OutOfRange
from .extremal import (
    ExtremalConfig,
    extremal_coefficients,
    p_hyp_lower_bound,
    p_hyp_upper_bound,
)
from .measures import p_hyp_symmetric, p_usd_symmetric

__all__ = [
    "STRICTNESS_MARGIN",
    "RatioGrid",
    "ReversalWitness",
    "build_candidate_pair",
    "check_reversal",
    "grid_summary",
    "grid_to_csv",
    "grid_to_json",
    "ratio_grid",
    "two_state_relation",
    "verify_no_two_state_reversal",
]

# Margin distinguishing genuine strict inequalities from round-off.
STRICTNESS_MARGIN = 1e-12


@dataclass(frozen=True, eq=False)
class ReversalWitness:
    """Evidence that two ensembles are ranked oppositely by the measures."""

    e1: SymmetricEnsemble
    e2: SymmetricEnsemble
    p_usd_1: float
    p_usd_2: float
    p_hyp_1: float
    p_hyp_2: float
    epsilon: float

    def __post_init__(self) -> None:
        if not self.p_usd_2 < self.p_usd_1:
            raise InvariantViolation("witness requires p_usd_2 < p_usd_1")
        if not self.p_hyp_2 > self.p_hyp_1:
            raise InvariantViolation("witness requires p_hyp_2 > p_hyp_1")
        if abs(self.epsilon - (self.p_usd_1 - self.p_usd_2)) > 1e-12:
            raise InvariantViolation("epsilon must equal p_usd_1 - p_usd_2")


@dataclass(frozen=True, eq=False)
class RatioGrid:
    """p_hyp ratio over the (p_usd_1, epsilon) plane.

    ratios[i, j] corresponds to (p_usd_axis[i], epsilon_axis[j]); cells
    with epsilon > p_usd_1 are invalid (mask False, ratio NaN).
    """

    n: int
    p_usd_axis: np.ndarray
    epsilon_axis: np.ndarray
    ratios: np.ndarray
    mask: np.ndarray


def build_candidate_pair(
    n: int, p_usd_1: float, epsilon: float
) -> tuple[SymmetricEnsemble, SymmetricEnsemble]:
    """The canonical reversal candidates: E1 saturates the lower envelope at
    p_usd_1, E2 the upper envelope at p_usd_1 - epsilon."""
    if n < 3:
        raise InfeasibleConfig(f"candidate pairs need n >= 3, got {n}")
    if not 0.0 < epsilon <= p_usd_1 <= 1.0:
        raise InfeasibleConfig(
            f"need 0 < epsilon <= p_usd_1 <= 1, got epsilon={epsilon}, p_usd_1={p_usd_1}"
        )
    e1 = extremal_coefficients(ExtremalConfig(n=n, n0=n - 1, p_usd=p_usd_1))
    e2 = extremal_coefficients(ExtremalConfig(n=n, n0=1, p_usd=p_usd_1 - epsilon))
    return e1, e2


def check_reversal(
    e1: SymmetricEnsemble, e2: SymmetricEnsemble
) -> ReversalWitness | None:
    """Witness when both strict orderings hold, None otherwise."""
    if e1.n != e2.n:
        raise DimensionMismatch(f"ensembles have different sizes {e1.n} and {e2.n}")
    p_usd_1, p_usd_2 = p_usd_symmetric(e1), p_usd_symmetric(e2)
    p_hyp_1, p_hyp_2 = p_hyp_symmetric(e1), p_hyp_symmetric(e2)
    if p_usd_2 < p_usd_1 - STRICTNESS_MARGIN and p_hyp_2 > p_hyp_1 + STRICTNESS_MARGIN:
        return ReversalWitness(
            e1=e1,
            e2=e2,
            p_usd_1=p_usd_1,
            p_usd_2=p_usd_2,
            p_hyp_1=p_hyp_1,
            p_hyp_2=p_hyp_2,
            epsilon=p_usd_1 - p_usd_2,
        )
    return None


def ratio_grid(n: int, p_usd_steps: int, epsilon_steps: int) -> RatioGrid:
    """Envelope-ratio grid over p_usd_1 in (0, 1] and epsilon in [0, 1).

    The p_usd_1 axis starts at 1/p_usd_steps: the zero limit is linearly
    dependent and excluded.  Ratios come from the closed-form envelopes
    directly, which the saturating ensembles attain exactly.
    """
    if n < 3:
        raise OutOfRange(f"grid needs n >= 3, got {n}")
    if p_usd_steps < 2 or epsilon_steps < 2:
        raise OutOfRange("both step counts must be >= 2")
    p_axis = np.arange(1, p_usd_steps + 1) / p_usd_steps
    e_axis = np.arange(epsilon_steps) / epsilon_steps
    p = p_axis[:, None]
    eps = e_axis[None, :]
    mask = eps <= p
    reduced = np.where(mask, p - eps, 0.0)
    ratios = p_hyp_upper_bound(n, reduced) / p_hyp_lower_bound(n, p)
    ratios = np.where(mask, ratios, np.nan)
    return RatioGrid(
        n=n, p_usd_axis=p_axis, epsilon_axis=e_axis, ratios=ratios, mask=mask
    )


def _sig12(value: float) -> str:
    return format(float(value), ".12g")


def grid_to_csv(grid: RatioGrid) -> str:
    """CSV with one row per valid cell, row-major in p_usd then epsilon,
    12 significant digits."""
    lines = ["p_usd_1,epsilon,ratio"]
    for i, p in enumerate(grid.p_usd_axis):
        for j, eps in enumerate(grid.epsilon_axis):
            if grid.mask[i, j]:
                lines.append(f"{_sig12(p)},{_sig12(eps)},{_sig12(grid.ratios[i, j])}")
    return "\n".join(lines) + "\n"


def grid_to_json(grid: RatioGrid) -> str:
    """JSON form embedding the axes and the masked ratio matrix
    (invalid cells are null)."""
    payload = {
        "n": grid.n,
        "p_usd_axis": [float(_sig12(p)) for p in grid.p_usd_axis],
        "epsilon_axis": [float(_sig12(e)) for e in grid.epsilon_axis],
        "ratios": [
            [
                float(_sig12(grid.ratios[i, j])) if grid.mask[i, j] else None
                for j in range(grid.epsilon_axis.size)
            ]
            for i in range(grid.p_usd_axis.size)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def grid_summary(grid: RatioGrid) -> dict:
    """Headline numbers for a grid: valid-cell count, fraction of cells in
    the reversal regime, and the location of the largest ratio."""
    valid = int(np.sum(grid.mask))
    above = int(np.sum(grid.ratios[grid.mask] > 1.0))
    flat_index = np.nanargmax(np.where(grid.mask, grid.ratios, -np.inf))
    i, j = np.unravel_index(flat_index, grid.ratios.shape)
    return {
        "total_cells": int(grid.mask.size),
        "valid_cells": valid,
        "ratio_gt_1_fraction": above / valid,
        "max_ratio": float(grid.ratios[i, j]),
        "max_ratio_p_usd_1": float(grid.p_usd_axis[i]),
        "max_ratio_epsilon": float(grid.epsilon_axis[j]),
    }


def two_state_relation(p_usd: float) -> float:
    """Two-state hypothesis-testing maximum as a function of the
    unambiguous-discrimination maximum at equal priors:

        (1/2) * (1 + sqrt(1 - (1 - p_usd)^2))

    i.e. overlap = 1 - p_usd substituted into the two-state closed form.
    """
    p = float(p_usd)
    if not 0.0 <= p <= 1.0 or np.isnan(p):
        raise OutOfRange(f"p_usd must lie in [0, 1], got {p_usd!r}")
    return 0.5 * (1.0 + np.sqrt(p * (2.0 - p)))


def verify_no_two_state_reversal(grid_points: int) -> bool:
    """Whether the two-state relation is strictly increasing on a uniform
    grid over [0, 1]; strictness means the two orderings can never disagree
    for two equal-prior states."""
    if grid_points < 2:
        raise OutOfRange(f"need at least 2 grid points, got {grid_points}")
    values = [two_state_relation(k / (grid_points - 1)) for k in range(grid_points)]
    return all(b > a for a, b in zip(values, values[1:]))
