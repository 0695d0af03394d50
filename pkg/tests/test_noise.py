import numpy as np
import pytest
from scipy import stats

from planarqec import compose, inverse, sample_error, trial_rng
from conftest import color_code, surface_code


def test_p_zero_is_empty():
    code = surface_code(5)
    assert sample_error(code, 0.0, 3, trial_rng(1, 0)) == {}


def test_p_one_qubit_flips_everything():
    code = surface_code(5)
    err = sample_error(code, 1.0, 2, trial_rng(1, 0))
    assert err == {q: 1 for q in range(code.n_data)}


def test_p_outside_unit_interval_rejected():
    code = surface_code(3)
    for bad in (-0.1, 1.1):
        with pytest.raises(ValueError):
            sample_error(code, bad, 2, trial_rng(1, 0))


def test_charge_frequencies_within_3_sigma():
    # ~1e5 qudit draws at p=0.3, D=3: each nonzero charge lands near 0.15
    code = color_code(13)
    n_draws = 100_000 // code.n_data + 1
    counts = {1: 0, 2: 0}
    total = 0
    for t in range(n_draws):
        err = sample_error(code, 0.3, 3, trial_rng(42, t))
        total += code.n_data
        for c in err.values():
            counts[c] += 1
    for c in (1, 2):
        expected = 0.15 * total
        sigma = np.sqrt(total * 0.15 * 0.85)
        assert abs(counts[c] - expected) < 3 * sigma


def test_marginal_rate_chi_square():
    code = color_code(13)
    dim, p = 4, 0.2
    n_draws = 100_000 // code.n_data + 1
    observed = np.zeros(dim)
    for t in range(n_draws):
        err = sample_error(code, p, dim, trial_rng(7, t))
        for c in err.values():
            observed[c] += 1
    total = n_draws * code.n_data
    observed[0] = total - observed[1:].sum()
    expected = np.array([1 - p] + [p / (dim - 1)] * (dim - 1)) * total
    assert stats.chisquare(observed, expected).pvalue > 1e-3


def test_sampling_deterministic_per_seed_and_trial():
    code = surface_code(7)
    a = sample_error(code, 0.25, 5, trial_rng(123, 9))
    b = sample_error(code, 0.25, 5, trial_rng(123, 9))
    c = sample_error(code, 0.25, 5, trial_rng(123, 10))
    d = sample_error(code, 0.25, 5, trial_rng(124, 9))
    assert a == b
    assert a != c or a != d


def test_compose_group_laws():
    e = {0: 1, 3: 2, 7: 4}
    dim = 5
    assert compose(e, inverse(e, dim), dim) == {}
    assert compose({}, e, dim) == e
    assert compose({4: 1}, {4: 2}, 3) == {}
