import json

import numpy as np
import pytest

from planarqec import RatePoint
from planarqec.analysis import plateau_model
from planarqec.cli import main, read_rate_csv, write_rate_csv


def run_cli(args):
    return main(args)


def simulate_args(out, trials=10, workers=1, seed=7):
    return [
        "simulate", "--code", "surface", "--decoder", "hdrg", "--dim", "3",
        "--distances", "3,5", "--p-start", "0.05", "--p-end", "0.15",
        "--p-steps", "3", "--trials", str(trials), "--seed", str(seed),
        "--workers", str(workers), "--out", str(out),
    ]


def test_simulate_row_count_and_roundtrip(tmp_path):
    out = tmp_path / "rates.csv"
    assert run_cli(simulate_args(out)) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1 + 2 * 3
    points = read_rate_csv(str(out))
    assert len(points) == 6
    assert all(isinstance(r, RatePoint) for r in points)
    # round-trip: writing the parsed points reproduces the file
    import io
    buf = io.StringIO()
    write_rate_csv(points, buf)
    assert buf.getvalue() == out.read_text()


def test_simulate_deterministic_reruns_and_workers(tmp_path):
    outs = []
    for name, workers in [("a.csv", 1), ("b.csv", 1), ("c.csv", 2)]:
        out = tmp_path / name
        assert run_cli(simulate_args(out, workers=workers)) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_incompatible_decoder_rejected(tmp_path):
    args = simulate_args(tmp_path / "x.csv")
    args[args.index("--code") + 1] = "surface"
    args[args.index("--decoder") + 1] = "gcc"
    with pytest.raises(SystemExit) as exc:
        run_cli(args)
    assert exc.value.code == 2


def test_qudit_matching_rejected(tmp_path):
    args = simulate_args(tmp_path / "x.csv")
    args[args.index("--decoder") + 1] = "mwpm"
    # dim stays 3: usage error before any simulation
    with pytest.raises(SystemExit) as exc:
        run_cli(args)
    assert exc.value.code == 2


def test_config_file_with_flag_override(tmp_path):
    cfg = {
        "code": "color666", "decoder": "gcc", "dim": 3,
        "distances": "3", "p_start": 0.05, "p_end": 0.05, "p_steps": 1,
        "trials": 5, "seed": 1,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "out.csv"
    assert run_cli(["simulate", "--config", str(cfg_path), "--trials", "8",
                    "--out", str(out)]) == 0
    points = read_rate_csv(str(out))
    assert points[0].trials == 8  # flag overrides file
    assert points[0].decoder == "gcc"


def synthetic_crossing_csv(path):
    ps = np.round(np.linspace(0.095, 0.125, 7), 6)
    pts = []
    for d, slope in [(11, 10), (13, 20)]:
        for p in ps:
            rate = slope * (p - 0.1) + 0.3
            f = round(rate * 10000)
            pts.append(RatePoint("color666", "gcc", 2, d, float(p), 10000, f,
                                 f / 10000, 0.0, 1.0, 0))
    with open(path, "w", newline="") as fh:
        write_rate_csv(pts, fh)


def test_threshold_json_from_synthetic_csv(tmp_path):
    csv_path = tmp_path / "rates.csv"
    synthetic_crossing_csv(csv_path)
    out = tmp_path / "thr.json"
    assert run_cli(["threshold", str(csv_path), "--pair", "11,13",
                    "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert abs(payload["p_thresh"] - 0.100) < 1e-9
    assert payload["d_pair"] == [11, 13]
    assert set(payload) == {"p_thresh", "stderr", "d_pair", "fit_window"}


def test_threshold_missing_distance_fails(tmp_path):
    csv_path = tmp_path / "rates.csv"
    synthetic_crossing_csv(csv_path)
    assert run_cli(["threshold", str(csv_path), "--pair", "11,15"]) == 1


def test_malformed_header_names_column(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("code,decoder,dim,distance,p\nsurface,hdrg,2,3,0.1\n")
    assert run_cli(["threshold", str(bad), "--pair", "11,13"]) == 1
    assert "trials" in capsys.readouterr().err


def test_fit_plateau_cli(tmp_path):
    params = (0.155, -0.12, 0.5)
    rows = ["dim,p_thresh"]
    for d in (2, 3, 5, 10, 25, 100):
        rows.append(f"{d},{float(plateau_model(d, *params)):.10f}")
    csv_path = tmp_path / "thr.csv"
    csv_path.write_text("\n".join(rows) + "\n")
    out = tmp_path / "fit.json"
    assert run_cli(["fit-plateau", str(csv_path), "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert abs(payload["T_plateau"] - 0.155) < 1e-5
    assert set(payload) == {"T_plateau", "alpha", "beta", "residual"}


def test_fit_plateau_missing_column(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("dim,value\n2,0.05\n")
    assert run_cli(["fit-plateau", str(bad)]) == 1
