"""Render logical-rate curves and threshold-vs-dimension figures.

File formats (from the simulator's CLI):

rate CSV      header: code,decoder,dim,distance,p,trials,failures,rate,
              ci_low,ci_high,seed
threshold CSV header: dim,p_thresh
threshold JSON keys: p_thresh, stderr, d_pair, fit_window
plateau JSON   keys: T_plateau, alpha, beta, residual
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RATE_COLUMNS = [
    "code", "decoder", "dim", "distance", "p",
    "trials", "failures", "rate", "ci_low", "ci_high", "seed",
]


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    output_path: str
    threshold_json: str | None = None
    title: str = ""


def _read_csv(path: str, required: list[str]) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for col in required:
            if col not in cols:
                raise ValueError(f"input CSV is missing column {col!r}")
        rows = list(reader)
    if not rows:
        raise ValueError(f"input CSV {path} has no data rows")
    return rows


def plot_rate_curves(spec: PlotSpec) -> str:
    """One logical-rate curve per code distance, with binomial error bars and
    an optional vertical marker at the estimated threshold."""
    rows = _read_csv(spec.input_csv, RATE_COLUMNS)
    by_distance: dict[int, list[dict]] = {}
    for row in rows:
        by_distance.setdefault(int(row["distance"]), []).append(row)

    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    for d in sorted(by_distance):
        pts = sorted(by_distance[d], key=lambda r: float(r["p"]))
        p = [float(r["p"]) for r in pts]
        rate = [float(r["rate"]) for r in pts]
        lo = [float(r["rate"]) - float(r["ci_low"]) for r in pts]
        hi = [float(r["ci_high"]) - float(r["rate"]) for r in pts]
        ax.errorbar(p, rate, yerr=[lo, hi], marker="o", markersize=3.5,
                    capsize=2, linewidth=1.2, label=f"d = {d}")

    if spec.threshold_json:
        with open(spec.threshold_json) as fh:
            thr = json.load(fh)
        p_thresh = float(thr["p_thresh"])
        ax.axvline(p_thresh, color="0.35", linestyle="--", linewidth=1.0)
        ax.annotate(f"$p_{{thresh}} = {p_thresh:.4g}$",
                    xy=(p_thresh, ax.get_ylim()[1]),
                    xytext=(4, -12), textcoords="offset points", fontsize=9)

    first = rows[0]
    default_title = f"{first['code']} / {first['decoder']} (D = {first['dim']})"
    ax.set_title(spec.title or default_title)
    ax.set_xlabel("physical error rate p")
    ax.set_ylabel("logical error rate")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_path, dpi=160)
    plt.close(fig)
    return spec.output_path


def plot_threshold_vs_dim(spec: PlotSpec) -> str:
    """Scatter of thresholds against qudit dimension with the saturation fit
    T(D) = T_plateau - alpha / (beta - D) overlaid when a fit JSON is given."""
    rows = _read_csv(spec.input_csv, ["dim", "p_thresh"])
    dims = [float(r["dim"]) for r in rows]
    thresholds = [float(r["p_thresh"]) for r in rows]

    fig, ax = plt.subplots(figsize=(6.4, 4.6))
    ax.scatter(dims, thresholds, zorder=3, label="measured thresholds")

    if spec.threshold_json and len(dims) > 1:
        with open(spec.threshold_json) as fh:
            fit = json.load(fh)
        t_plat, alpha, beta = fit["T_plateau"], fit["alpha"], fit["beta"]
        xs = [min(dims) + i * (max(dims) - min(dims)) / 400 for i in range(401)]
        xs = [x for x in xs if abs(beta - x) > 1e-9]
        ys = [t_plat - alpha / (beta - x) for x in xs]
        ax.plot(xs, ys, color="C1", linewidth=1.2,
                label=r"$T(D) = T_{plateau} - \alpha/(\beta - D)$")
        ax.axhline(t_plat, color="0.35", linestyle=":", linewidth=1.0,
                   label=f"plateau = {t_plat:.4g}")

    ax.set_xscale("log")
    ax.set_xlabel("qudit dimension D")
    ax.set_ylabel("threshold $p_{thresh}$")
    ax.set_title(spec.title or "threshold vs qudit dimension")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_path, dpi=160)
    plt.close(fig)
    return spec.output_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qecplots",
                                     description="render simulator outputs")
    sub = parser.add_subparsers(dest="command", required=True)
    rc = sub.add_parser("rates", help="logical-rate curves per distance")
    rc.add_argument("csv")
    rc.add_argument("--threshold-json")
    rc.add_argument("--title", default="")
    rc.add_argument("--out", required=True)
    tv = sub.add_parser("threshold-vs-dim", help="threshold saturation figure")
    tv.add_argument("csv")
    tv.add_argument("--fit-json")
    tv.add_argument("--title", default="")
    tv.add_argument("--out", required=True)
    args = parser.parse_args(argv)
    try:
        if args.command == "rates":
            plot_rate_curves(PlotSpec(args.csv, args.out, args.threshold_json, args.title))
        else:
            plot_threshold_vs_dim(PlotSpec(args.csv, args.out, args.fit_json, args.title))
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
