"""Figure rendering for hermquad convergence CSVs."""

from quadplots.render import read_fit_csv, read_sweep_csv, render_fig1, render_rates

__version__ = "0.1.0"

__all__ = ["read_fit_csv", "read_sweep_csv", "render_fig1", "render_rates"]
