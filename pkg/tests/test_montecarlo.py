import math

import pytest

from planarqec import (
    DecoderContractError,
    estimate_rate,
    run_trial,
    wilson_interval,
)
from conftest import color_code, surface_code


def test_p_zero_never_fails():
    code = surface_code(5)
    assert all(not run_trial(code, "mwpm", 0.0, 2, 1, t) for t in range(100))


def test_trial_determinism():
    code = color_code(7)
    a = [run_trial(code, "gcc", 0.12, 3, 77, t) for t in range(50)]
    b = [run_trial(code, "gcc", 0.12, 3, 77, t) for t in range(50)]
    assert a == b
    c = [run_trial(code, "gcc", 0.12, 3, 78, t) for t in range(50)]
    assert a != c


def test_estimate_rate_counts():
    code = surface_code(5)
    r = estimate_rate(code, "hdrg", 0.0, 2, trials=100, seed=5, workers=1)
    assert r.failures == 0 and r.rate == 0.0 and r.ci_low == 0.0
    assert r.code == "surface" and r.distance == 5 and r.dim == 2


def test_wilson_interval_textbook_value():
    # closed form for failures=10, n=100 at z for 95%
    z = 1.959963984540054
    f, n = 10, 100
    phat = f / n
    denom = 1 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = (z / denom) * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n))
    lo, hi = wilson_interval(f, n)
    assert abs(lo - (centre - half)) < 1e-12
    assert abs(hi - (centre + half)) < 1e-12


def test_wilson_interval_bounds_rate():
    lo, hi = wilson_interval(100, 100)
    assert hi == 1.0 and lo < 1.0
    lo, hi = wilson_interval(0, 50)
    assert lo == 0.0 and hi > 0.0


def test_schedule_independence():
    code = color_code(5)
    serial = estimate_rate(code, "gcc", 0.1, 3, trials=120, seed=9, workers=1)
    pooled = estimate_rate(code, "gcc", 0.1, 3, trials=120, seed=9, workers=2)
    assert (serial.failures, serial.trials) == (pooled.failures, pooled.trials)


def test_contract_violation_aborts():
    code = surface_code(5)
    with pytest.raises((DecoderContractError, ValueError)):
        run_trial(code, "gcc", 0.1, 2, 1, 0)  # wrong code kind -> ValueError


def test_gcc_subthreshold_scaling():
    # d=11 beats d=7 at p=0.05 (small-size effects penalize d=7)
    r7 = estimate_rate(color_code(7), "gcc", 0.05, 3, trials=3000, seed=2, workers=1)
    r11 = estimate_rate(color_code(11), "gcc", 0.05, 3, trials=3000, seed=2, workers=1)
    assert r11.rate < 0.5
    assert r11.rate < r7.rate


def test_gcc_monotone_in_p():
    code = color_code(7)
    lo = estimate_rate(code, "gcc", 0.02, 3, trials=2000, seed=11, workers=1)
    hi = estimate_rate(code, "gcc", 0.20, 3, trials=2000, seed=11, workers=1)
    assert lo.rate < hi.rate
    assert lo.ci_high < hi.ci_low
