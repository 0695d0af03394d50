import numpy as np
import pytest

from planarqec import PRIVILEGED_COLOR, compose, extract, is_trivial, sample_error, trial_rng
from conftest import color_code, surface_code


def test_empty_error_empty_syndrome():
    code = color_code(5)
    assert extract(code, {}, 3) == {}
    assert is_trivial(extract(code, {}, 3))


def test_single_internal_error_flags_three_colors():
    code = color_code(7)
    k, dim = 2, 5
    q = code.internal_data[len(code.internal_data) // 2]
    syn = extract(code, {q: k}, dim)
    assert len(syn) == 3
    colors = {int(code.stab_color[f]) for f in syn}
    assert len(colors) == 3
    for f, charge in syn.items():
        sg = dict(code.data_checks[q])[f]
        assert charge == (sg * k) % dim
    # an odd-parity qudit: the two non-privileged neighbours register -k
    odd = next(
        qq for qq in code.internal_data
        if all(
            sg == (1 if int(code.stab_color[f]) == PRIVILEGED_COLOR else -1)
            for f, sg in code.data_checks[qq]
        )
    )
    syn_odd = extract(code, {odd: k}, dim)
    for f, charge in syn_odd.items():
        if int(code.stab_color[f]) != PRIVILEGED_COLOR:
            assert charge == (-k) % dim


def test_charge_two_reads_as_one_mod_three():
    # D=3: a charge-2 error registers charge 1 where the sign is negative
    code = color_code(7)
    q = code.internal_data[0]
    syn = extract(code, {q: 2}, 3)
    for f, charge in syn.items():
        sg = dict(code.data_checks[q])[f]
        assert charge == (1 if sg < 0 else 2)


def test_extraction_linearity():
    code = color_code(9)
    dim = 4
    rng = np.random.default_rng(11)
    for t in range(1000):
        a = sample_error(code, 0.1, dim, trial_rng(50, 2 * t))
        b = sample_error(code, 0.1, dim, trial_rng(50, 2 * t + 1))
        lhs = extract(code, compose(a, b, dim), dim)
        sa, sb = extract(code, a, dim), extract(code, b, dim)
        rhs = {}
        for s in sa.keys() | sb.keys():
            v = (sa.get(s, 0) + sb.get(s, 0)) % dim
            if v:
                rhs[s] = v
        assert lhs == rhs


def test_surface_bulk_charges_pair_up():
    # errors away from the rough boundaries create paired +-k excitations
    code = surface_code(9)
    dim = 7
    rng = np.random.default_rng(3)
    bulk = [q for q in range(code.n_data) if len(code.data_checks[q]) == 2]
    for _ in range(50):
        qs = rng.choice(bulk, size=6, replace=False)
        err = {int(q): int(rng.integers(1, dim)) for q in qs}
        syn = extract(code, err, dim)
        assert sum(syn.values()) % dim == 0


def test_stabilizer_pattern_is_trivial():
    # a uniform charge on one face's qudits is an X stabilizer: no syndrome
    code = color_code(7)
    dim = 5
    for s in range(code.n_stab):
        for k in (1, dim - 1):
            pattern = {q: k for q, _ in code.stab_support[s]}
            assert is_trivial(extract(code, pattern, dim))


def test_single_error_not_trivial():
    code = color_code(5)
    assert not is_trivial(extract(code, {0: 1}, 3))


def test_unknown_data_id_rejected():
    code = color_code(3)
    with pytest.raises(ValueError):
        extract(code, {code.n_data + 5: 1}, 2)
