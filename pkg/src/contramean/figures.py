"""
Margin figures rendered alongside campaign reports.

When a fuzz run writes a delimited report, a companion PNG is rendered
next to it: per-property margin distributions on a symmetric log scale
with the failure threshold marked, plus the minimum margin per property.
The figure uses the object-oriented matplotlib API (no pyplot state) and
strips volatile PNG metadata so repeated runs produce identical files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

from .campaign import PropertyReport


def figure_path_for(report_path) -> Path:
    """Companion figure path: ``out.csv`` -> ``out_margins.png``."""
    p = Path(report_path)
    return p.with_name(p.stem + "_margins.png")


def render_margin_figure(
    reports: list[PropertyReport], tol: float, path
) -> Path | None:
    """Render per-property margin distributions; returns the written path,
    or None when there is nothing to plot."""
    if not reports:
        return None
    path = Path(path)

    by_property: dict[str, list[float]] = {}
    for r in reports:
        by_property.setdefault(str(r.property), []).append(r.margin)
    names = list(by_property)
    margins = [np.asarray(by_property[name]) for name in names]

    fig = Figure(figsize=(12, 0.6 + 0.45 * len(names)))
    ax_box, ax_min = fig.subplots(1, 2, sharey=True)

    positions = np.arange(len(names))
    ax_box.boxplot(
        margins,
        positions=positions,
        orientation="horizontal",
        widths=0.6,
        whis=(0, 100),
        flierprops={"markersize": 2},
    )
    ax_box.set_yticks(positions)
    ax_box.set_yticklabels(names, fontsize=8)
    ax_box.axvline(-tol, color="tab:red", linewidth=1, label=f"fail below -{tol:g}")
    ax_box.set_xscale("symlog", linthresh=1e-15)
    ax_box.set_xlabel("normalized margin")
    ax_box.set_title("margin distribution")
    ax_box.legend(fontsize=7, loc="upper left")
    ax_box.invert_yaxis()

    minima = np.array([m.min() for m in margins])
    colors = ["tab:red" if v < -tol else "tab:blue" for v in minima]
    ax_min.barh(positions, minima, color=colors, height=0.6)
    ax_min.axvline(-tol, color="tab:red", linewidth=1)
    ax_min.set_xscale("symlog", linthresh=1e-15)
    ax_min.set_xlabel("minimum margin")
    ax_min.set_title("worst case per property")

    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})
    return path
