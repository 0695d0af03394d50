"""Greedy and minimum-weight perfect matching decoders (qubit surface code)."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..codegraph import SURFACE, CodeGraph
from ..noise import ErrorConfig
from ..syndrome import Syndrome
from ..transport import TransportLedger

BOUNDARY = "boundary"


@dataclass(frozen=True)
class Matching:
    """Disjoint pairing of excitations; partners are node ids or BOUNDARY."""

    pairs: tuple[tuple[int, object], ...]
    weight: int


def _require_qubit_surface(code: CodeGraph, dim: int) -> None:
    if code.kind != SURFACE:
        raise ValueError("matching decoders run on the surface code only")
    if dim != 2:
        raise ValueError("matching decoders are defined for qubit codes (D = 2)")


def _boundary_choice(code: CodeGraph, s: int) -> tuple[int, int]:
    """(distance, boundary node) of the nearer charge boundary."""
    best = None
    for b in code.boundaries:
        d = int(code.decode_dist[s, b.node])
        if d >= 0 and (best is None or (d, b.node) < best):
            best = (d, b.node)
    if best is None:
        raise ValueError("excitation cannot reach a boundary")
    return best


def greedy_matching(code: CodeGraph, excitations: list[int]) -> Matching:
    """Repeatedly take the closest pair or excitation-boundary option."""
    live = sorted(excitations)
    dist = code.decode_dist
    pairs = []
    weight = 0
    while live:
        best = None
        for i, u in enumerate(live):
            bd, bnode = _boundary_choice(code, u)
            cand = (bd, 1, u, bnode)
            if best is None or cand < best:
                best = cand
            for v in live[i + 1:]:
                cand = (int(dist[u, v]), 0, u, v)
                if best is None or cand < best:
                    best = cand
        w, kind, u, v = best
        weight += w
        if kind == 1:
            pairs.append((u, BOUNDARY))
            live.remove(u)
        else:
            pairs.append((u, v))
            live.remove(u)
            live.remove(v)
    return Matching(tuple(pairs), weight)


def minimum_weight_matching(code: CodeGraph, excitations: list[int]) -> Matching:
    """Exact MWPM over excitations with one virtual boundary partner each.

    Virtual-virtual edges carry weight 0; an excitation pair edge is dropped
    when routing both partners through the boundary is never worse, which
    keeps the blossom graph sparse without affecting the optimal weight.
    """
    exc = sorted(excitations)
    m = len(exc)
    if m == 0:
        return Matching((), 0)
    dist = code.decode_dist
    bnd = {u: _boundary_choice(code, u) for u in exc}
    g = nx.Graph()
    for i, u in enumerate(exc):
        g.add_edge(("e", u), ("v", u), weight=-bnd[u][0])
        for v in exc[i + 1:]:
            w = int(dist[u, v])
            if w <= bnd[u][0] + bnd[v][0]:
                g.add_edge(("e", u), ("e", v), weight=-w)
        for v in exc[:i]:
            g.add_edge(("v", u), ("v", v), weight=0)
    mate = nx.max_weight_matching(g, maxcardinality=True)
    pairs = []
    weight = 0
    for a, b in mate:
        ka, ua = a
        kb, ub = b
        if ka == "e" and kb == "e":
            pairs.append((min(ua, ub), max(ua, ub)))
            weight += int(dist[ua, ub])
        elif ka == "e" and kb == "v":
            pairs.append((ua, BOUNDARY))
            weight += bnd[ua][0]
        elif kb == "e" and ka == "v":
            pairs.append((ub, BOUNDARY))
            weight += bnd[ub][0]
    return Matching(tuple(sorted(pairs, key=str)), weight)


def _apply_matching(code: CodeGraph, syndrome: Syndrome, matching: Matching) -> ErrorConfig:
    ledger = TransportLedger(code, syndrome, 2)
    for u, v in matching.pairs:
        if v == BOUNDARY:
            ledger.transport_chain_surface(u, _boundary_choice(code, u)[1], ledger.charge(u))
        else:
            ledger.transport_chain_surface(u, v, ledger.charge(u))
    return ledger.correction


def decode_greedy(code: CodeGraph, syndrome: Syndrome, dim: int = 2) -> ErrorConfig:
    """Pair closest excitations first; corrections along connecting chains."""
    _require_qubit_surface(code, dim)
    return _apply_matching(code, syndrome, greedy_matching(code, sorted(syndrome)))


def decode_mwpm(code: CodeGraph, syndrome: Syndrome, dim: int = 2) -> ErrorConfig:
    """Exact blossom matching; corrections along connecting chains."""
    _require_qubit_surface(code, dim)
    return _apply_matching(code, syndrome, minimum_weight_matching(code, sorted(syndrome)))
