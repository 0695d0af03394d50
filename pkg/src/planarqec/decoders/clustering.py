"""Renormalization-style cluster decoders: HDRG (surface) and GCC (color).

Both iterate a growing scale and at each scale partition the flagged
stabilizers into maximal clusters pairwise chained by dual distance within
the scale; boundary nodes join a cluster when within the scale of a flagged
member.  HDRG annihilates sum-neutral or boundary-holding clusters by
charge transport to a representative, doubling the scale between rounds.
GCC steps the scale by one, collapses every cluster toward its centroid
(one central node per color), reduces the central charges through a charge
identity, then annihilates whatever the included boundaries can absorb.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..codegraph import COLOR666, PRIVILEGED_COLOR, SURFACE, CodeGraph
from ..noise import ErrorConfig
from ..syndrome import Syndrome
from ..transport import TransportLedger


@dataclass(frozen=True)
class Cluster:
    members: tuple[int, ...]      # flagged stabilizer ids
    boundaries: tuple[int, ...]   # boundary node ids within reach
    scale: int


def find_clusters(code: CodeGraph, flagged: list[int], scale: int) -> list[Cluster]:
    """Maximal sets of flagged stabilizers pairwise connected by hops <= scale."""
    flagged = sorted(flagged)
    dist = code.decode_dist
    parent = {u: u for u in flagged}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for i, u in enumerate(flagged):
        for v in flagged[i + 1:]:
            if 0 <= dist[u, v] <= scale:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for u in flagged:
        groups.setdefault(find(u), []).append(u)

    clusters = []
    for root in sorted(groups):
        members = tuple(sorted(groups[root]))
        near = tuple(
            b.node
            for b in code.boundaries
            if any(0 <= dist[m, b.node] <= scale for m in members)
        )
        clusters.append(Cluster(members, near, scale))
    return clusters


def _centroid_member(code: CodeGraph, members: tuple[int, ...]) -> int:
    """Member nearest the Euclidean centroid of the flagged members."""
    pts = code.stab_pos[list(members)]
    centre = pts.mean(axis=0)
    d2 = ((pts - centre) ** 2).sum(axis=1)
    order = np.lexsort((list(members), d2))
    return int(members[order[0]])


# ---------------------------------------------------------------------------
# HDRG (surface code, any D)
# ---------------------------------------------------------------------------

def decode_hdrg(code: CodeGraph, syndrome: Syndrome, dim: int) -> ErrorConfig:
    """Hard-decision renormalization group decoding on the surface code.

    The clustering scale doubles between rounds (1, 2, 4, ...), capped at the
    dual-graph diameter; geometric growth lets split chains rejoin before a
    boundary captures one of their halves.
    """
    if code.kind != SURFACE:
        raise ValueError("HDRG runs on the surface code")
    ledger = TransportLedger(code, syndrome, dim)
    cap = code.diameter() + 1
    scale = 1
    while scale <= 2 * cap:
        if not ledger.syndrome:
            break
        for cluster in find_clusters(code, ledger.flagged, min(scale, cap)):
            total = sum(ledger.charge(m) for m in cluster.members) % dim
            if total != 0 and not cluster.boundaries:
                continue
            rep = _centroid_member(code, cluster.members)
            for m in cluster.members:
                if m != rep:
                    ledger.transport_chain_surface(m, rep, ledger.charge(m))
            excess = ledger.charge(rep)
            if excess:
                dist = code.decode_dist
                b = min(cluster.boundaries, key=lambda n: (int(dist[rep, n]), n))
                ledger.transport_chain_surface(rep, b, excess)
        scale *= 2
    if ledger.syndrome:
        raise RuntimeError("HDRG failed to empty the syndrome")
    return ledger.correction


# ---------------------------------------------------------------------------
# GCC (color code, any D)
# ---------------------------------------------------------------------------

def _collapse_to_centroid(code: CodeGraph, ledger: TransportLedger, cluster: Cluster) -> dict[int, int]:
    """Move each color's charge to the stabilizer of that color nearest the
    centroid of the flagged members; returns {color: central node}."""
    centres: dict[int, int] = {}
    colors = code.stab_color
    centre_pos = code.stab_pos[list(cluster.members)].mean(axis=0)
    for c in range(3):
        of_color = tuple(m for m in cluster.members if colors[m] == c)
        if not of_color:
            continue
        pool = np.nonzero(colors == c)[0]
        d2 = ((code.stab_pos[pool] - centre_pos) ** 2).sum(axis=1)
        central = int(pool[np.lexsort((pool, d2))[0]])
        centres[c] = central
        for m in of_color:
            if m != central:
                ledger.transport_same_color(m, central, ledger.charge(m))
    return centres


def _identity_at(code: CodeGraph, ledger: TransportLedger, q: int, target_color: int,
                 holders: dict[int, int]) -> None:
    """Gather the live central charges onto the faces around data qudit q and
    cancel the target color there."""
    faces = {int(code.stab_color[f]): f for f, _ in code.data_checks[q]}
    for c, node in list(holders.items()):
        k = ledger.charge(node)
        if k and node != faces[c]:
            ledger.transport_same_color(node, faces[c], k)
            holders[c] = faces[c]
    triple = tuple(faces[c] for c in sorted(faces))
    ledger.charge_identity(triple, faces[target_color])


def _identity_target(ledger: TransportLedger, holders: dict[int, int], dim: int) -> int:
    """Color to cancel: the choice minimizing the total residual magnitude of
    the two shifted colors, ties broken toward the farthest-from-zero charge
    and then the privileged color."""
    charges = {c: ledger.charge(holders[c]) for c in holders}

    def magnitude(v):
        v %= dim
        return min(v, dim - v)

    def key(c):
        # zeroing color c shifts the others by the signed identity move
        t = charges[c] * _rho(c)
        total = sum(magnitude(charges[o] - _rho(o) * t) for o in holders if o != c)
        return (total, -magnitude(charges[c]), c)

    return min(holders, key=key)


def decode_gcc(code: CodeGraph, syndrome: Syndrome, dim: int) -> ErrorConfig:
    """General color clustering on the 6-6-6 code."""
    if code.kind != COLOR666:
        raise ValueError("GCC runs on the 6-6-6 color code")
    ledger = TransportLedger(code, syndrome, dim)
    colors = code.stab_color
    cap = code.diameter()
    for scale in range(1, cap + 2):
        if not ledger.syndrome:
            break
        for cluster in find_clusters(code, ledger.flagged, scale):
            centres = _collapse_to_centroid(code, ledger, cluster)
            holders = {c: n for c, n in centres.items() if ledger.charge(n)}
            if len(holders) == 3:
                q = _nearest_internal(code, cluster)
                target = _identity_target(ledger, holders, dim)
                _identity_at(code, ledger, q, target, holders)
                holders = {
                    int(colors[f]): f
                    for f, _ in code.data_checks[q]
                    if ledger.charge(f)
                }
            if holders:
                _absorb_with_boundaries(code, ledger, cluster, holders)
    if ledger.syndrome:
        raise RuntimeError("GCC failed to empty the syndrome")
    return ledger.correction


def _nearest_internal(code: CodeGraph, cluster: Cluster) -> int:
    """Internal data qudit (three real faces) nearest the cluster centroid."""
    centre = code.stab_pos[list(cluster.members)].mean(axis=0)
    pool = list(code.internal_data)
    d2 = ((code.data_pos[pool] - centre) ** 2).sum(axis=1)
    order = np.lexsort((pool, d2))
    return int(pool[order[0]])


def _rho(c: int) -> int:
    return -1 if c == PRIVILEGED_COLOR else 1


def _boundary_neutral(code: CodeGraph, residual: dict[int, int],
                      included: set[int], dim: int) -> bool:
    """Whether the residual charges can all be annihilated using the
    included boundaries (together with internal transport)."""
    if not residual:
        return True
    if not included:
        return False
    if len(included) >= 2:
        return True
    (b,) = included
    cb = code.boundaries[b - code.n_stab].color
    others = [c for c in range(3) if c != cb]
    f = sum(_rho(c) * residual.get(c, 0) * s for c, s in zip(others, (1, -1)))
    return f % dim == 0


def _corner_face(code: CodeGraph, color: int) -> tuple[int, int]:
    """(face, data) of the corner qudit whose single real face has `color`."""
    for q in code.corner_data:
        f = code.data_checks[q][0][0]
        if int(code.stab_color[f]) == color:
            return f, q
    raise RuntimeError("patch has no corner for this color")


def _single_route(code: CodeGraph, color: int, node: int, included: set[int]):
    """Cheapest way to shed one color's charge: ('direct', cost) into its own
    boundary or ('corner', cost) at the junction of the two other sides.
    Costs count data moves (a shrunk-lattice hop applies two)."""
    options = []
    sd = code.shrunk_dist[color]
    b = code.boundary_of_color[color]
    if b in included:
        d = sd.get((node, b))
        if d is not None:
            options.append((2 * d, 1, "direct", b))
    if all(code.boundary_of_color[c] in included for c in range(3) if c != color):
        face, q = _corner_face(code, color)
        d = sd.get((node, face))
        if d is not None:
            options.append((2 * d + 1, 0, "corner", (face, q)))
    return min(options) if options else None


def _do_single(code: CodeGraph, ledger: TransportLedger, color: int, node: int,
               route) -> None:
    _, _, kind, payload = route
    k = ledger.charge(node)
    if kind == "direct":
        ledger.transport_same_color(node, payload, k)
    else:
        face, q = payload
        ledger.transport_same_color(node, face, k)
        ledger.data_move(q, -ledger.charge(face) * code.sign(face, q))
        ledger.corner_absorbs += 1


def _pair_plan(code: CodeGraph, ledger: TransportLedger, b3: int,
               c1: int, n1: int, c2: int, n2: int):
    """Best side-qudit move cancelling a two-color residual, or None."""
    k1, k2 = ledger.charge(n1), ledger.charge(n2)
    dim = ledger.dim
    best = None
    dist = code.decode_dist
    for q in code.side_data[b3]:
        checks = dict(code.data_checks[q])
        byc = {int(code.stab_color[f]): f for f in checks}
        if set(byc) != {c1, c2}:
            continue
        # one move of magnitude m must cancel both: k1 + s1 m = 0, k2 + s2 m = 0
        s1, s2 = checks[byc[c1]], checks[byc[c2]]
        m = (-k1 * s1) % dim
        if (k2 + s2 * m) % dim != 0:
            return None  # solvability depends only on the signs, not on q
        cost = int(dist[n1, byc[c1]]) + int(dist[n2, byc[c2]])
        if best is None or (cost, q) < best[:2]:
            best = (cost, q, byc, m)
    return best


def _absorb_with_boundaries(code: CodeGraph, ledger: TransportLedger,
                            cluster: Cluster, holders: dict[int, int]) -> None:
    """Annihilate the residual if the included boundaries allow it in full;
    otherwise leave the whole cluster for the next scale."""
    included = set(cluster.boundaries)
    residual = {c: ledger.charge(n) % ledger.dim for c, n in holders.items()}
    residual = {c: v for c, v in residual.items() if v}
    if not _boundary_neutral(code, residual, included, ledger.dim):
        return

    if len(residual) == 2:
        (c1, n1), (c2, n2) = sorted((c, holders[c]) for c in residual)
        c3 = 3 - c1 - c2
        b3 = code.boundary_of_color[c3]
        pair = _pair_plan(code, ledger, b3, c1, n1, c2, n2) if b3 in included else None
        r1 = _single_route(code, c1, n1, included)
        r2 = _single_route(code, c2, n2, included)
        separate = r1[0] + r2[0] if r1 and r2 else None
        if pair is not None and (separate is None or pair[0] <= separate):
            _, q, byc, m = pair
            ledger.transport_same_color(n1, byc[c1], ledger.charge(n1))
            ledger.transport_same_color(n2, byc[c2], ledger.charge(n2))
            ledger.data_move(q, m)
            return
        if r1 and r2:
            _do_single(code, ledger, c1, n1, r1)
            _do_single(code, ledger, c2, n2, r2)
        return

    routes = {c: _single_route(code, c, holders[c], included) for c in residual}
    if all(r is not None for r in routes.values()):
        for c in sorted(residual):
            _do_single(code, ledger, c, holders[c], routes[c])
