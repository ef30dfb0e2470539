"""PNG rendering of verification reports and sweep tables.

The command line calls into this module when --plot is passed.  The
delimited output remains the normative artifact; figures are a quick
visual check on the same data, written next to it.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  - backend pinned above

from .harness import PropertyReport

__all__ = ["render_reports", "render_table"]

# Violations at or below this are "no violation" on the log axis.
_FLOOR = 1e-18
_CEIL = 1e6


def _clip(value: float) -> float:
    if not math.isfinite(value):
        return _CEIL
    return min(max(value, _FLOOR), _CEIL)


def render_reports(reports: Sequence[PropertyReport], path: str) -> str:
    """Horizontal bars of worst violation per suite, tolerance ticks overlaid."""
    names = [r.suite for r in reports]
    values = [_clip(r.max_violation) for r in reports]
    tols = [r.tol for r in reports]
    colors = ["#2da44e" if r.verdict == "pass" else "#cf222e" for r in reports]
    height = max(2.5, 0.38 * len(reports) + 1.2)
    fig, ax = plt.subplots(figsize=(8.0, height), dpi=130)
    pos = range(len(reports))
    ax.barh(pos, values, color=colors, height=0.6)
    ax.scatter(tols, pos, marker="|", s=180, color="black", zorder=3, label="tolerance")
    ax.set_yticks(pos, names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlim(_FLOOR / 10, _CEIL * 10)
    ax.set_xlabel("worst normalized violation")
    ax.grid(axis="x", alpha=0.3)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def _series(header: list[str], rows: list[tuple]) -> dict[str, list]:
    return {key: [row[i] for row in rows] for i, key in enumerate(header)}


def render_table(name: str, header: Sequence[str], rows: Sequence[tuple], path: str) -> str:
    """Line plot of a scan or tabulation table.

    The last column is the value; the abscissa is the first of t, lambda,
    trial present in the header (falling back to the first column), and
    rows sharing a p value become one curve each.
    """
    header = list(header)
    rows = [tuple(row) for row in rows]
    fig, ax = plt.subplots(figsize=(7.5, 4.5), dpi=130)
    if rows:
        cols = _series(header, rows)
        y_key = header[-1]
        x_key = next(
            (k for k in ("t", "lambda", "trial") if k in header and k != y_key),
            header[0],
        )
        group_key = "p" if "p" in header and "p" not in (x_key, y_key) else None
        if group_key:
            seen: list[float] = []
            for value in cols[group_key]:
                if value not in seen:
                    seen.append(value)
            for value in seen:
                picked = [
                    (x, y)
                    for x, y, g in zip(cols[x_key], cols[y_key], cols[group_key])
                    if g == value
                ]
                ax.plot(*zip(*picked), linewidth=1.4, label=f"p={value:g}")
            ax.legend(fontsize=8)
        else:
            ax.plot(cols[x_key], cols[y_key], linewidth=1.4, color="#1f6feb")
        if x_key == "lambda":
            ax.set_xscale("log")
        ys = [y for y in cols[y_key] if isinstance(y, (int, float))]
        if ys and all(y > 0 for y in ys) and (max(ys) < 1e-2 or max(ys) > 1e3 * min(ys)):
            ax.set_yscale("log")
        ax.set_xlabel(x_key)
        ax.set_ylabel(y_key)
    ax.set_title(name)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
