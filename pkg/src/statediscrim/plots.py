"""Render ratio grids as contour figures."""

from __future__ import annotations

import numpy as np

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .ordering import RatioGrid

__all__ = ["render_ratio_contour"]


def render_ratio_contour(grid: RatioGrid, path: str) -> None:
    """Filled contours of the p_hyp ratio over the (p_usd_1, epsilon) plane,
    with the break-even ratio = 1 contour drawn on top.  Cells above that
    contour are the ordering-reversal region."""
    z = np.ma.masked_array(grid.ratios, mask=~grid.mask)
    fig, ax = plt.subplots(figsize=(7.0, 5.2))
    filled = ax.contourf(grid.p_usd_axis, grid.epsilon_axis, z.T, levels=24, cmap="viridis")
    ax.contour(
        grid.p_usd_axis, grid.epsilon_axis, z.T,
        levels=[1.0], colors="white", linewidths=1.5,
    )
    fig.colorbar(filled, ax=ax, label="p_hyp(E2) / p_hyp(E1)")
    ax.set_xlabel("p_usd(E1)")
    ax.set_ylabel("epsilon = p_usd(E1) - p_usd(E2)")
    ax.set_title(f"opposite-ordering region for n = {grid.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
