"""Command-line entry point and CSV/JSON interchange formats.

Subcommands:
    simulate     run Monte Carlo trials over a (distance, p) grid -> CSV
    threshold    crossing analysis of a rate CSV -> JSON
    fit-plateau  saturation fit of a (dim, p_thresh) CSV -> JSON

Exit codes: 0 success, 2 usage/validation error, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .analysis import find_threshold, fit_plateau
from .codegraph import COLOR666, SURFACE, build_color_code_666, build_surface_code
from .decoders import DECODERS
from .montecarlo import RatePoint, estimate_rate

CSV_HEADER = [
    "code", "decoder", "dim", "distance", "p",
    "trials", "failures", "rate", "ci_low", "ci_high", "seed",
]


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def write_rate_csv(points: list[RatePoint], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(points, key=lambda r: (r.distance, r.p)):
        w.writerow([
            r.code, r.decoder, r.dim, r.distance, _fmt(r.p),
            r.trials, r.failures, _fmt(r.rate), _fmt(r.ci_low), _fmt(r.ci_high), r.seed,
        ])


def read_rate_csv(path: str) -> list[RatePoint]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for col in CSV_HEADER:
            if col not in cols:
                raise ValueError(f"rate CSV is missing column {col!r}")
        points = []
        for row in reader:
            points.append(RatePoint(
                code=row["code"],
                decoder=row["decoder"],
                dim=int(row["dim"]),
                distance=int(row["distance"]),
                p=float(row["p"]),
                trials=int(row["trials"]),
                failures=int(row["failures"]),
                rate=float(row["rate"]),
                ci_low=float(row["ci_low"]),
                ci_high=float(row["ci_high"]),
                seed=int(row["seed"]),
            ))
    return points


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarqec",
        description="Monte Carlo thresholds for planar qudit codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="simulate logical error rates over a grid")
    sim.add_argument("--config", help="JSON config file; flags override its values")
    sim.add_argument("--code", choices=[SURFACE, COLOR666])
    sim.add_argument("--decoder", choices=sorted(DECODERS))
    sim.add_argument("--dim", type=int, help="qudit dimension D")
    sim.add_argument("--distances", help="comma-separated odd distances, e.g. 7,9,11")
    sim.add_argument("--p-start", type=float)
    sim.add_argument("--p-end", type=float)
    sim.add_argument("--p-steps", type=int)
    sim.add_argument("--trials", type=int)
    sim.add_argument("--seed", type=int)
    sim.add_argument("--workers", type=int, help="worker processes (default: all cores)")
    sim.add_argument("--out", help="output CSV path (default: stdout)")

    thr = sub.add_parser("threshold", help="crossing of two distances' rate curves")
    thr.add_argument("csv", help="rate CSV from `simulate`")
    thr.add_argument("--pair", required=True, help="distance pair, e.g. 11,13")
    thr.add_argument("--out", help="output JSON path (default: stdout)")

    plat = sub.add_parser("fit-plateau", help="fit T(D) = T_plateau - alpha/(beta - D)")
    plat.add_argument("csv", help="CSV with columns dim,p_thresh")
    plat.add_argument("--out", help="output JSON path (default: stdout)")
    return parser


_SIM_KEYS = (
    "code", "decoder", "dim", "distances", "p_start", "p_end",
    "p_steps", "trials", "seed", "workers",
)
_SIM_DEFAULTS = {"trials": 5000, "seed": 2024, "workers": None}


def _merge_config(args, parser) -> dict:
    cfg = dict(_SIM_DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config file: {exc}")
        unknown = set(file_cfg) - set(_SIM_KEYS)
        if unknown:
            parser.error(f"unknown config keys: {sorted(unknown)}")
        cfg.update(file_cfg)
    for key in _SIM_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    for key in ("code", "decoder", "dim", "distances", "p_start", "p_end", "p_steps"):
        if cfg.get(key) is None:
            parser.error(f"missing required option --{key.replace('_', '-')}")
    return cfg


def _validate_sim(cfg, parser):
    if isinstance(cfg["distances"], str):
        try:
            distances = [int(x) for x in cfg["distances"].split(",") if x]
        except ValueError:
            parser.error(f"bad distance list {cfg['distances']!r}")
    else:
        distances = [int(x) for x in cfg["distances"]]
    for d in distances:
        if d < 3 or d % 2 == 0:
            parser.error(f"distance {d} must be odd and >= 3")
    dim = int(cfg["dim"])
    if dim < 2:
        parser.error("dimension must be >= 2")
    name = cfg["decoder"]
    spec = DECODERS[name]
    if spec.code_kind != cfg["code"] or (spec.qubit_only and dim != 2):
        parser.error(
            f"decoder {name!r} is incompatible with code {cfg['code']!r} at D={dim}"
        )
    if not (0 <= cfg["p_start"] <= cfg["p_end"] <= 1):
        parser.error("need 0 <= p-start <= p-end <= 1")
    if cfg["p_steps"] < 1:
        parser.error("p-steps must be >= 1")
    if cfg["trials"] < 1:
        parser.error("trials must be >= 1")
    return distances, dim, name


def cmd_simulate(args, parser) -> int:
    cfg = _merge_config(args, parser)
    distances, dim, decoder = _validate_sim(cfg, parser)
    grid = np.linspace(cfg["p_start"], cfg["p_end"], cfg["p_steps"])
    points = []
    for d in distances:
        code = build_surface_code(d) if cfg["code"] == SURFACE else build_color_code_666(d)
        for p in grid:
            points.append(estimate_rate(
                code, decoder, float(p), dim,
                trials=int(cfg["trials"]), seed=int(cfg["seed"]),
                workers=cfg["workers"],
            ))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_rate_csv(points, fh)
    else:
        write_rate_csv(points, sys.stdout)
    return 0


def cmd_threshold(args, parser) -> int:
    try:
        d1, d2 = (int(x) for x in args.pair.split(","))
    except ValueError:
        parser.error(f"bad distance pair {args.pair!r}")
    points = read_rate_csv(args.csv)
    have = {r.distance for r in points}
    for d in (d1, d2):
        if d not in have:
            raise ValueError(f"CSV has no rows for distance {d}")
    est = find_threshold(points, (d1, d2))
    payload = {
        "p_thresh": est.p_thresh,
        "stderr": est.stderr,
        "d_pair": list(est.d_pair),
        "fit_window": list(est.fit_window),
    }
    _emit_json(payload, args.out)
    return 0


def cmd_fit_plateau(args, parser) -> int:
    with open(args.csv, newline="") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for col in ("dim", "p_thresh"):
            if col not in cols:
                raise ValueError(f"threshold CSV is missing column {col!r}")
        rows = [(float(r["dim"]), float(r["p_thresh"])) for r in reader]
    fit = fit_plateau(rows)
    payload = {
        "T_plateau": fit.t_plateau,
        "alpha": fit.alpha,
        "beta": fit.beta,
        "residual": fit.residual,
    }
    _emit_json(payload, args.out)
    return 0


def _emit_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": cmd_simulate,
        "threshold": cmd_threshold,
        "fit-plateau": cmd_fit_plateau,
    }
    try:
        return handlers[args.command](args, parser)
    except Exception as exc:  # runtime failures -> exit code 1
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
