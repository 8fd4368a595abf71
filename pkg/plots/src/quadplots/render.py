"""Render hermquad CSV output: the three-panel |x|^p comparison and rate bars.

Consumes only the documented CSV schemas
(`rule,integrand,n,alpha,epsilon,T,abs_error` for sweeps and
`rule,integrand,slope,intercept,r_squared,n_min,n_max` for fits).
Rendering is deterministic: a fixed SVG hashsalt and no embedded timestamps.
"""

from __future__ import annotations

import csv
import math
import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RULE_STYLE = {
    "gh": {"color": "#c44e52", "marker": "o", "label": "Gauss-Hermite"},
    "trap": {"color": "#4c72b0", "marker": "s", "label": "trapezoid"},
}


def _configure():
    plt.rcParams.update(
        {
            "svg.hashsalt": "quadplots",
            "figure.dpi": 100,
            "font.size": 9,
            "axes.grid": True,
            "grid.alpha": 0.3,
        }
    )


def read_sweep_csv(path) -> dict[str, list[tuple[int, float]]]:
    """Rows grouped by rule as (n, abs_error), n ascending."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"missing sweep CSV: {path}")
    series: dict[str, list[tuple[int, float]]] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"rule", "integrand", "n", "abs_error"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ValueError(f"{path}: not a sweep CSV (header {reader.fieldnames})")
        for row in reader:
            try:
                series.setdefault(row["rule"], []).append(
                    (int(row["n"]), float(row["abs_error"]))
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}: malformed row {row!r}") from exc
    for rows in series.values():
        rows.sort()
    if not series:
        raise ValueError(f"{path}: no data rows")
    return series


def read_fit_csv(path) -> list[dict]:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"missing fit CSV: {path}")
    fits = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"rule", "integrand", "slope"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ValueError(f"{path}: not a fit CSV (header {reader.fieldnames})")
        for row in reader:
            try:
                fits.append(
                    {
                        "rule": row["rule"],
                        "integrand": row["integrand"],
                        "slope": float(row["slope"]),
                    }
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"{path}: malformed row {row!r}") from exc
    if not fits:
        raise ValueError(f"{path}: no fit rows")
    return fits


def _guide_line(ax, points, slope, label):
    """Dashed reference line of the given log-log slope through the data."""
    xs = [n for n, e in points if e > 0]
    ys = [e for _, e in points if e > 0]
    if len(xs) < 2:
        return
    # anchor: median vertical offset of the data from the slope line
    offsets = sorted(math.log10(y) - slope * math.log10(x) for x, y in zip(xs, ys))
    c = offsets[len(offsets) // 2]
    grid = [min(xs), max(xs)]
    ax.plot(
        grid,
        [10.0 ** (c + slope * math.log10(g)) for g in grid],
        "--",
        color="0.4",
        linewidth=0.9,
        label=label,
    )


def _positive(points):
    return [(n, e) for n, e in points if e > 0.0]


def render_fig1(in_dir, out_path, image_format: str = "svg") -> Path:
    """Three log-log panels (p = 1, 3, 5), two series each, with dashed
    guide lines at slopes -(p/2+0.5) and -(p+0.8)."""
    _configure()
    in_dir = Path(in_dir)
    out_path = Path(out_path)
    panels = []
    for p in (1, 3, 5):
        panels.append((p, read_sweep_csv(in_dir / f"fig1_p{p}.csv")))

    fig, axes = plt.subplots(1, 3, figsize=(10.5, 3.4), sharey=False)
    for ax, (p, series) in zip(axes, panels):
        for rule in ("gh", "trap"):
            pts = _positive(series.get(rule, []))
            if not pts:
                continue
            style = RULE_STYLE[rule]
            ax.loglog(
                [n for n, _ in pts],
                [e for _, e in pts],
                marker=style["marker"],
                markersize=3,
                linewidth=1.0,
                color=style["color"],
                label=style["label"],
            )
        _guide_line(ax, _positive(series.get("gh", [])), -(p / 2 + 0.5),
                    f"slope {-(p / 2 + 0.5):g}")
        _guide_line(ax, _positive(series.get("trap", [])), -(p + 0.8),
                    f"slope {-(p + 0.8):g}")
        ax.set_title(f"f(x) = |x|^{p}")
        ax.set_xlabel("n")
        if p == 1:
            ax.set_ylabel("absolute error")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out_path, format=image_format, metadata=_metadata(image_format))
    plt.close(fig)
    return out_path


_ALPHA_PATTERNS = (re.compile(r"alpha\s*=?\s*(\d+)"), re.compile(r"\|x\|\^(\d+)"))


def _alpha_of(label: str) -> int | None:
    for pat in _ALPHA_PATTERNS:
        m = pat.search(label)
        if m:
            return int(m.group(1))
    return None


def render_rates(fit_csv, out_path, image_format: str = "svg") -> Path:
    """Bar chart of fitted slopes with per-bar theory markers at -alpha/2
    (half-rate) and -alpha (optimal rate) where alpha is parseable."""
    _configure()
    fits = read_fit_csv(fit_csv)
    out_path = Path(out_path)

    fig, ax = plt.subplots(figsize=(1.2 + 1.05 * len(fits), 3.4))
    labels = [f"{f['rule']}:{f['integrand']}" for f in fits]
    xs = range(len(fits))
    colors = [RULE_STYLE.get(f["rule"], {"color": "0.5"})["color"] for f in fits]
    ax.bar(xs, [f["slope"] for f in fits], width=0.62, color=colors)
    drew_half = drew_full = False
    for i, f in enumerate(fits):
        alpha = _alpha_of(f["integrand"])
        if alpha is None:
            continue
        ax.hlines(-alpha / 2.0, i - 0.38, i + 0.38, colors="0.2", linestyles="--",
                  linewidth=1.0, label=None if drew_half else "slope -a/2")
        drew_half = True
        ax.hlines(-float(alpha), i - 0.38, i + 0.38, colors="0.2", linestyles=":",
                  linewidth=1.0, label=None if drew_full else "slope -a")
        drew_full = True
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=7)
    ax.set_ylabel("fitted log-log slope")
    if drew_half or drew_full:
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out_path, format=image_format, metadata=_metadata(image_format))
    plt.close(fig)
    return out_path


def _metadata(image_format: str):
    return {"Date": None} if image_format == "svg" else None
