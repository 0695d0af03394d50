import copy

import numpy as np
import pytest

from planarqec import (
    COLOR666,
    SURFACE,
    build_color_code_666,
    build_surface_code,
    dual_distance,
    validate,
)
from conftest import color_code, surface_code

DISTANCES = [3, 5, 7, 9, 11, 13]


def bfs_hops(adj, src):
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def test_surface_d3_counts():
    code = surface_code(3)
    assert code.n_data == 13
    assert code.n_detectors == 6          # plaquettes
    assert code.n_stab - code.n_detectors == 6  # stars


def test_surface_d9_bulk_plaquettes_weight4():
    code = surface_code(9)
    size = 2 * 9 - 1
    plaq_at = code.node_key["plaq_at"]
    for (x, y), s in plaq_at.items():
        if 0 < x < size - 1 and 0 < y < size - 1:
            assert len(code.stab_support[s]) == 4


@pytest.mark.parametrize("builder", [build_surface_code, build_color_code_666])
@pytest.mark.parametrize("bad", [2, 4, 1, 0, -3])
def test_even_or_small_distance_rejected(builder, bad):
    with pytest.raises(ValueError):
        builder(bad)


def test_color_d3_is_steane():
    code = color_code(3)
    assert code.n_data == 7
    assert code.n_stab == 3
    # all three faces pairwise share two qudits; one qudit is in all three
    supports = [set(q for q, _ in s) for s in code.stab_support]
    for i in range(3):
        for j in range(i + 1, 3):
            assert len(supports[i] & supports[j]) == 2
    assert len(supports[0] & supports[1] & supports[2]) == 1


def test_color_d11_layout():
    code = color_code(11)
    assert code.n_data == (3 * 121 + 1) // 4
    assert code.n_stab == (3 * 121 - 3) // 8
    # three colored boundary nodes with distinct colors
    assert len(code.boundaries) == 3
    assert sorted(b.color for b in code.boundaries) == [0, 1, 2]
    # internal stabilizers measure 6 qudits, boundary ones fewer
    weights = {len(s) for s in code.stab_support}
    assert weights == {4, 6}


@pytest.mark.parametrize("d", DISTANCES)
def test_node_count_formulas(d):
    surf = surface_code(d)
    assert surf.n_data == d * d + (d - 1) * (d - 1)
    col = color_code(d)
    assert col.n_data == (3 * d * d + 1) // 4
    assert col.n_stab == (3 * d * d - 3) // 8


@pytest.mark.parametrize("d", [3, 7])
def test_internal_data_touch_three_distinct_colors(d):
    code = color_code(d)
    for q in code.internal_data:
        colors = {int(code.stab_color[f]) for f, _ in code.data_checks[q]}
        assert len(colors) == 3


def test_dual_distance_identity_and_adjacency():
    code = color_code(7)
    assert dual_distance(code, 4, 4) == 0
    u = 4
    v = code.dual_adj[u][0]
    assert dual_distance(code, u, v) == 1


def test_dual_distance_matches_bfs_oracle():
    code = color_code(11)
    adj = {i: list(code.dual_adj[i]) for i in range(code.n_dual)}
    rng = np.random.default_rng(5)
    for _ in range(100):
        a, b = rng.integers(0, code.n_dual, size=2)
        expected = bfs_hops(adj, int(a)).get(int(b))
        assert dual_distance(code, int(a), int(b)) == expected


def test_dual_distance_surface_oracle():
    code = surface_code(9)
    adj = {i: list(code.dual_adj[i]) for i in range(code.n_dual)}
    rng = np.random.default_rng(6)
    checked = 0
    while checked < 100:
        a, b = (int(x) for x in rng.integers(0, code.n_dual, size=2))
        hops = bfs_hops(adj, a)
        if b not in hops:
            with pytest.raises(ValueError):
                dual_distance(code, a, b)
        else:
            assert dual_distance(code, a, b) == hops[b]
        checked += 1


@pytest.mark.parametrize("d", [5, 7])
def test_builders_validate_clean(d):
    assert validate(surface_code(d)) == []
    assert validate(color_code(d)) == []


def test_validate_reports_flipped_sign():
    code = copy.deepcopy(color_code(5))
    # flip one sign on a qudit shared between two faces
    s = next(i for i in range(code.n_stab) if len(code.stab_support[i]) == 6)
    q, sg = code.stab_support[s][0]
    row = list(code.stab_support[s])
    row[0] = (q, -sg)
    code.stab_support[s] = tuple(row)
    violations = validate(code)
    assert any("commutativity" in v for v in violations)


@pytest.mark.parametrize("d", DISTANCES)
@pytest.mark.parametrize("dim", [2, 3, 5, 25])
def test_commutativity_invariant_all_dims(d, dim):
    """The CSS sums vanish exactly, hence modulo every simulated dimension."""
    for code in (surface_code(d), color_code(d)):
        gens = [dict(g) for g in code.x_generators]
        for det in code.detectors:
            row = dict(code.stab_support[det])
            for gen in gens:
                shared = row.keys() & gen.keys()
                assert sum(row[q] * gen[q] for q in shared) % dim == 0


def test_kind_constants():
    assert surface_code(3).kind == SURFACE
    assert color_code(3).kind == COLOR666
