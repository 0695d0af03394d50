"""Surface-projection decoding of the qubit color code.

Following the projection construction this splits the color-code syndrome
onto restricted lattices containing the privileged color: vertices are the
faces of two colors (virtual faces just outside the patch stand in for the
boundaries), edges join dual-adjacent face pairs of the two colors.  MWPM
pairs the flagged faces on each restricted lattice; the matched paths are
then lifted back to data qudits by solving small GF(2) systems locally at
every privileged face and at the privileged boundary pseudo-face, so the
unified correction reproduces the full syndrome exactly.
"""

from __future__ import annotations

import networkx as nx

from ..codegraph import COLOR666, PRIVILEGED_COLOR, CodeGraph
from ..noise import ErrorConfig
from ..syndrome import Syndrome
from ..transport import TransportLedger


class _Restricted:
    """One restricted lattice: faces of colors {privileged, other}."""

    def __init__(self, code: CodeGraph, other: int):
        self.other = other
        colors = {PRIVILEGED_COLOR, other}
        real = [s for s in range(code.n_stab) if int(code.stab_color[s]) in colors]
        virt = [v for v in code.virtual_faces if v.color in colors]
        self.nodes = real + [("virt", v.index) for v in virt]
        self.is_virtual = {n: isinstance(n, tuple) for n in self.nodes}

        # shared kept data per node pair
        data_of: dict[object, set[int]] = {}
        for s in real:
            data_of[s] = {q for q, _ in code.stab_support[s]}
        for v in virt:
            data_of[("virt", v.index)] = {
                q for q in range(code.n_data) if v.index in code.data_virtuals[q]
            }
        color_of: dict[object, int] = {s: int(code.stab_color[s]) for s in real}
        for v in virt:
            color_of[("virt", v.index)] = v.color

        adj: dict[object, list[object]] = {n: [] for n in self.nodes}
        order = {n: i for i, n in enumerate(self.nodes)}
        for i, u in enumerate(self.nodes):
            for v in self.nodes[i + 1:]:
                if color_of[u] == color_of[v]:
                    continue
                if self.is_virtual[u] and self.is_virtual[v]:
                    continue  # boundaries only attach to real faces
                if data_of[u] & data_of[v]:
                    adj[u].append(v)
                    adj[v].append(u)
        for n in adj:
            adj[n].sort(key=lambda x: order[x])
        self.adj = adj
        self.order = order
        self.data_of = data_of

        # hop distances over the restricted lattice
        self.dist: dict[tuple, int] = {}
        self.parent: dict[tuple, object] = {}
        for src in self.nodes:
            self.dist[(src, src)] = 0
            frontier = [src]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if (src, v) not in self.dist:
                            self.dist[(src, v)] = self.dist[(src, u)] + 1
                            self.parent[(src, v)] = u
                            nxt.append(v)
                frontier = nxt
        self.virtuals = [n for n in self.nodes if self.is_virtual[n]]

    def path(self, u, v) -> list[object]:
        if (u, v) not in self.dist:
            raise RuntimeError("restricted lattice is disconnected")
        out = [v]
        while v != u:
            v = self.parent[(u, v)]
            out.append(v)
        return out[::-1]

    def boundary_route(self, u) -> list[object]:
        best = None
        for b in self.virtuals:
            d = self.dist.get((u, b))
            if d is not None and (best is None or (d, self.order[b]) < best):
                best = (d, self.order[b])
                bnode = b
        if best is None:
            raise RuntimeError("no boundary reachable on restricted lattice")
        return self.path(u, bnode)


def _restricted_lattices(code: CodeGraph) -> list[_Restricted]:
    cache = getattr(code, "_dsp_cache", None)
    if cache is None:
        cache = [
            _Restricted(code, other)
            for other in range(3)
            if other != PRIVILEGED_COLOR
        ]
        code._dsp_cache = cache
    return cache


def _mwpm_pairs(lat: _Restricted, flagged: list[object]) -> list[tuple]:
    """Matched (u, v) or (u, "boundary") pairs on one restricted lattice."""
    if not flagged:
        return []
    g = nx.Graph()
    bdist = {}
    for u in flagged:
        best = None
        for b in lat.virtuals:
            d = lat.dist.get((u, b))
            if d is not None and (best is None or d < best):
                best = d
        bdist[u] = best
    for i, u in enumerate(flagged):
        if bdist[u] is not None:
            g.add_edge(("e", lat.order[u]), ("v", lat.order[u]), weight=-bdist[u])
        for v in flagged[i + 1:]:
            d = lat.dist.get((u, v))
            if d is None:
                continue
            if bdist[u] is not None and bdist[v] is not None and d > bdist[u] + bdist[v]:
                continue
            g.add_edge(("e", lat.order[u]), ("e", lat.order[v]), weight=-d)
        for v in flagged[:i]:
            g.add_edge(("v", lat.order[u]), ("v", lat.order[v]), weight=0)
    mate = nx.max_weight_matching(g, maxcardinality=True)
    by_order = {lat.order[u]: u for u in flagged}
    pairs = []
    for a, b in sorted(mate, key=lambda e: sorted(map(str, e))):
        (ka, ia), (kb, ib) = a, b
        if ka == "e" and kb == "e":
            pairs.append((by_order[min(ia, ib)], by_order[max(ia, ib)]))
        elif ka == "e" and kb == "v" and ia == ib:
            pairs.append((by_order[ia], "boundary"))
        elif kb == "e" and ka == "v" and ia == ib:
            pairs.append((by_order[ib], "boundary"))
    return pairs


def _solve_gf2_min(rows: list[int], rhs: list[int], nvars: int) -> int:
    """Minimum-weight solution of a GF(2) system given as bitmask rows."""
    pivot_of: dict[int, int] = {}
    for row, b in zip(rows, rhs):
        cur = (row << 1) | b
        for col, prow in pivot_of.items():
            if cur & (1 << (col + 1)):
                cur ^= prow
        if cur >> 1:
            pivot_of[(cur >> 1).bit_length() - 1] = cur
        elif cur & 1:
            raise RuntimeError("inconsistent lift system")
    # particular solution: free vars zero, pivots from rhs after full reduction
    for col in sorted(pivot_of, reverse=True):
        row = pivot_of[col]
        for c2, r2 in list(pivot_of.items()):
            if c2 != col and r2 & (1 << (col + 1)):
                pivot_of[c2] = r2 ^ row
    particular = 0
    for col, row in pivot_of.items():
        if row & 1:
            particular |= 1 << col
    free = [c for c in range(nvars) if c not in pivot_of]
    basis = []
    for f in free:
        vec = 1 << f
        for col, row in pivot_of.items():
            if row & (1 << (f + 1)):
                vec |= 1 << col
        basis.append(vec)
    best = particular
    if len(basis) <= 12:
        for mask in range(1 << len(basis)):
            v = particular
            mm = mask
            i = 0
            while mm:
                if mm & 1:
                    v ^= basis[i]
                mm >>= 1
                i += 1
            if (v.bit_count(), v) < (best.bit_count(), best):
                best = v
    else:
        improved = True
        while improved:
            improved = False
            for vec in basis:
                cand = best ^ vec
                if (cand.bit_count(), cand) < (best.bit_count(), best):
                    best = cand
                    improved = True
    return best


def decode_dsp(code: CodeGraph, syndrome: Syndrome, dim: int = 2) -> ErrorConfig:
    """Projection decoding: restricted-lattice MWPM plus local lifting."""
    if code.kind != COLOR666:
        raise ValueError("DSP runs on the 6-6-6 color code")
    if dim != 2:
        raise ValueError("DSP is defined for qubit codes (D = 2)")
    if not syndrome:
        return {}

    lattices = _restricted_lattices(code)
    flagged_all = set(syndrome)

    # demands at privileged faces: {face: {neighbour node: parity}}
    face_demand: dict[int, dict[object, int]] = {}
    # demands at the privileged boundary pseudo-face: {real face: parity}
    bnd_demand: dict[int, int] = {}

    def add_face_demand(face: int, other: object):
        d = face_demand.setdefault(face, {})
        d[other] = d.get(other, 0) ^ 1

    # portal demands of single-edge boundary routes at privileged faces are
    # droppable: the face's own flag parity already forces the toggle and the
    # boundary absorbs freely, which lets the lift pick the exact inverse
    droppable: dict[int, list[object]] = {}

    for lat in lattices:
        flagged = [n for n in lat.nodes if not lat.is_virtual[n] and n in flagged_all]
        for u, v in _mwpm_pairs(lat, flagged):
            path = lat.boundary_route(u) if v == "boundary" else lat.path(u, v)
            for a, b in zip(path, path[1:]):
                for x, y in ((a, b), (b, a)):
                    if isinstance(x, int) and int(code.stab_color[x]) == PRIVILEGED_COLOR:
                        add_face_demand(x, y)
                        if v == "boundary" and len(path) == 2:
                            droppable.setdefault(x, []).append(y)
                        break
                else:
                    # edge between a non-privileged face and a virtual
                    # privileged face: handled at the boundary pseudo-face
                    real = a if isinstance(a, int) else b
                    bnd_demand[real] = bnd_demand.get(real, 0) ^ 1

    corr: dict[int, int] = {}

    def apply_bits(qubits: list[int], bits: int):
        for i, q in enumerate(qubits):
            if bits & (1 << i):
                corr[q] = corr.get(q, 0) ^ 1

    # local lift at each privileged face with demands (and flagged ones)
    lift_faces = set(face_demand)
    for s in flagged_all:
        if int(code.stab_color[s]) == PRIVILEGED_COLOR:
            lift_faces.add(s)
    for face in sorted(lift_faces):
        qubits = sorted(q for q, _ in code.stab_support[face])
        index = {q: i for i, q in enumerate(qubits)}
        demands = dict(face_demand.get(face, {}))
        dropped = {}
        for key in droppable.get(face, ()):
            if demands.get(key):
                dropped[key] = demands.pop(key)
        # neighbour slots: every real face and every demanded virtual face
        slots: dict[object, int] = {}
        for q in qubits:
            for f, _ in code.data_checks[q]:
                if f != face:
                    slots[f] = slots.get(f, 0) | (1 << index[q])
            for vi in code.data_virtuals[q]:
                key = ("virt", vi)
                slots[key] = slots.get(key, 0) | (1 << index[q])

        def _solve(dem):
            rows, rhs = [], []
            for key in sorted(slots, key=str):
                want = dem.get(key)
                if isinstance(key, tuple) and want is None:
                    continue  # undemanded virtual faces absorb freely
                rows.append(slots[key])
                rhs.append(want or 0)
            rows.append((1 << len(qubits)) - 1)
            rhs.append(1 if face in flagged_all else 0)
            return _solve_gf2_min(rows, rhs, len(qubits))

        try:
            bits = _solve(demands)
        except RuntimeError:
            demands.update(dropped)
            bits = _solve(demands)
        apply_bits(qubits, bits)

    # lift at the privileged boundary pseudo-face
    if bnd_demand:
        pvars = sorted({
            q
            for v in code.virtual_faces
            if v.color == PRIVILEGED_COLOR
            for q in range(code.n_data)
            if v.index in code.data_virtuals[q]
        })
        index = {q: i for i, q in enumerate(pvars)}
        touched: dict[int, int] = {}
        for q in pvars:
            for f, _ in code.data_checks[q]:
                touched[f] = touched.get(f, 0) | (1 << index[q])
        rows, rhs = [], []
        for f in sorted(touched):
            rows.append(touched[f])
            rhs.append(bnd_demand.get(f, 0))
        bits = _solve_gf2_min(rows, rhs, len(pvars))
        apply_bits(pvars, bits)

    corr = {q: 1 for q, v in corr.items() if v}

    # sanity: the lift must cancel the syndrome exactly
    ledger = TransportLedger(code, syndrome, 2)
    for q in corr:
        ledger.data_move(q, 1)
    if ledger.syndrome:
        raise RuntimeError("DSP lift left a nontrivial syndrome")
    return corr
