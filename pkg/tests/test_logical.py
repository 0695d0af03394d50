import itertools

import numpy as np
import pytest

from planarqec import (
    brute_force_class_oracle,
    classify_residual,
    extract,
    is_logical_failure,
    is_trivial,
)
from conftest import color_code, surface_code


def kernel_sample(code, dim, rng):
    """Random trivial-syndrome residual: generator combination + logical power."""
    res = {}
    for gen in code.x_generators:
        c = int(rng.integers(0, dim))
        for q, e in gen:
            res[q] = (res.get(q, 0) + c * e) % dim
    k = int(rng.integers(0, dim))
    for q, e in code.logical_x:
        res[q] = (res.get(q, 0) + k * e) % dim
    return {q: v for q, v in res.items() if v}, k


def test_empty_residual_is_no_failure():
    code = color_code(5)
    assert not is_logical_failure(code, {}, 3)


def test_stabilizer_pattern_is_no_failure():
    code = color_code(5)
    dim = 4
    for s in range(code.n_stab):
        pattern = {q: 1 for q, _ in code.stab_support[s]}
        assert not is_logical_failure(code, pattern, dim)


def test_logical_chain_is_failure():
    code = surface_code(5)
    chain = {q: 1 for q, _ in code.logical_x}
    assert is_logical_failure(code, chain, 2)
    col = color_code(5)
    chain = {q: 1 for q, _ in col.logical_x}
    assert is_logical_failure(col, chain, 2)


def test_nontrivial_residual_rejected():
    code = color_code(5)
    with pytest.raises(ValueError):
        is_logical_failure(code, {0: 1}, 3)
    with pytest.raises(ValueError):
        brute_force_class_oracle(code, {0: 1}, 3)


def test_oracle_zero_vector():
    assert not brute_force_class_oracle(color_code(3), {}, 5)


def test_oracle_exhaustive_d3_qubit():
    # every one of the 2^7 vectors, filtered to trivial syndrome, must agree
    code = color_code(3)
    checked = 0
    for bits in itertools.product((0, 1), repeat=code.n_data):
        res = {q: b for q, b in enumerate(bits) if b}
        if not is_trivial(extract(code, res, 2)):
            continue
        assert is_logical_failure(code, res, 2) == brute_force_class_oracle(code, res, 2)
        checked += 1
    assert checked == 2 ** (code.n_data - code.n_stab)


@pytest.mark.parametrize("dim", [3, 4, 5])
def test_oracle_agreement_random(dim):
    rng = np.random.default_rng(100 + dim)
    for code in (color_code(3), color_code(5), surface_code(3), surface_code(5)):
        for _ in range(300):
            res, _ = kernel_sample(code, dim, rng)
            assert is_trivial(extract(code, res, dim))
            assert is_logical_failure(code, res, dim) == brute_force_class_oracle(code, res, dim)


def test_pairing_identifies_logical_power():
    # the single-logical check sees exactly the logical component
    code = color_code(5)
    dim = 4
    rng = np.random.default_rng(55)
    for _ in range(200):
        res, k = kernel_sample(code, dim, rng)
        assert is_logical_failure(code, res, dim) == (k % dim != 0)


def test_stabilizer_invariance_of_verdict():
    code = color_code(5)
    dim = 5
    rng = np.random.default_rng(77)
    for _ in range(1000):
        res, _ = kernel_sample(code, dim, rng)
        verdict = is_logical_failure(code, res, dim)
        s = int(rng.integers(0, code.n_stab))
        c = int(rng.integers(0, dim))
        bumped = dict(res)
        for q, e in code.x_generators[s]:
            bumped[q] = (bumped.get(q, 0) + c * e) % dim
        bumped = {q: v for q, v in bumped.items() if v}
        assert is_logical_failure(code, bumped, dim) == verdict


def test_classify_residual_reports_weight():
    code = surface_code(3)
    v = classify_residual(code, {}, 2)
    assert not v.failure and v.residual_weight == 0
