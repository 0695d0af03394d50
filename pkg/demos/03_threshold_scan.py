"""Small end-to-end threshold scan: Monte Carlo rates, crossing estimate,
and (if qecplots is installed) a figure.

This is a scaled-down version of what the acceptance suite runs; expect a
minute or two.

Run:  python demos/03_threshold_scan.py
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from planarqec import build_color_code_666, estimate_rate, find_threshold
from planarqec.cli import write_rate_csv

TRIALS = 800
points = []
for d in (7, 9, 11):
    code = build_color_code_666(d)
    for p in np.linspace(0.055, 0.115, 7):
        pt = estimate_rate(code, "gcc", float(p), dim=3, trials=TRIALS, seed=11)
        points.append(pt)
        print(f"d={d} p={pt.p:.3f}: rate {pt.rate:.4f} "
              f"[{pt.ci_low:.4f}, {pt.ci_high:.4f}]")

est = find_threshold(points, (9, 11))
print(f"\ncrossing of d=9 and d=11: p_thresh = {est.p_thresh:.4f} "
      f"+- {est.stderr:.4f} (window {est.fit_window[0]:.3f}..{est.fit_window[1]:.3f})")

out = Path(tempfile.mkdtemp(prefix="planarqec-demo-"))
csv_path = out / "rates.csv"
with open(csv_path, "w", newline="") as fh:
    write_rate_csv(points, fh)
json_path = out / "threshold.json"
json_path.write_text(json.dumps({
    "p_thresh": est.p_thresh, "stderr": est.stderr,
    "d_pair": list(est.d_pair), "fit_window": list(est.fit_window),
}, indent=2))
print(f"\nwrote {csv_path} and {json_path}")

try:
    from qecplots import PlotSpec, plot_rate_curves
except ImportError:
    print("qecplots not installed; skipping the figure")
else:
    fig = plot_rate_curves(PlotSpec(str(csv_path), str(out / "rates.png"), str(json_path)))
    print(f"figure written to {fig}")
