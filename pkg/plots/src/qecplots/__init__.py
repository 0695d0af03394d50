"""Batch figure generation for the planar-code simulator's data files.

Consumes the simulator's rate CSVs and threshold/plateau JSONs purely as
files; nothing here recomputes statistics, the figures render exactly the
numbers the simulator emitted.
"""

from .figures import PlotSpec, main, plot_rate_curves, plot_threshold_vs_dim

__all__ = ["PlotSpec", "main", "plot_rate_curves", "plot_threshold_vs_dim"]

__version__ = "0.1.0"
