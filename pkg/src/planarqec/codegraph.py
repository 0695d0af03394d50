"""Planar code lattices in the dual picture.

Two code families are built here, both storing the same structure: stabilizer
nodes with 2D positions, data qudits, a signed incidence table, dual adjacency
with virtual boundary nodes, and one logical-operator representative.

Surface code (distance d): nodes live on a (2d-1) x (2d-1) integer grid.
Data qudits sit at (x, y) with x + y even, plaquettes (the charge detectors)
at x odd / y even, stars at x even / y odd.  Plaquette signs are +1 for the
data qudit east or south of the plaquette and -1 west or north, so a bulk
X^k error raises one neighbour by k and lowers the other by k.  Star signs
are the transpose convention (east +1, west -1, north +1, south -1), which
makes every plaquette-star pair commute over Z_D.  Charge chains terminate
on the left/right boundaries.

6-6-6 color code (distance d): stabilizers are hexagon centers on a
triangular lattice, axial coordinates (a, b), color (a - b) mod 3 with Red=0
privileged.  Data qudits are the lattice triangles, equivalently hexagon
corners; a corner is at even positions (0,2,4) around all three of its
hexagons or at odd positions (1,3,5) around all three.  In the scaled
integer frame X = 2x, Y = 2y/sqrt(3):

    face (a,b):           X = 3(a+b) - 2, Y = a - b
    even corner (al,be):  X = 3(al+be),     Y = al - be,
                          faces {(al,be), (al,be+1), (al+1,be)}
    odd corner (al,be):   X = 3(al+be) - 1, Y = al - be + 1,
                          faces {(al,be), (al+1,be), (al+1,be-1)}

A node is kept iff Y >= -R, X + Y <= 2R and X - Y >= -2R with R = (d-1)/2,
which yields the triangular patch with (3d^2+1)/4 data qudits, (3d^2-3)/8
faces, three corner qudits and d qudits per side.  The orientation sign is
sign(f, q) = parity(q) * rho(f): +1 for even corners, -1 for odd, flipped
for the privileged color.  The first row of missing hexagons beyond each
side is monochromatic and defines that side's boundary color; those missing
hexagons are kept as "virtual faces" so charge transport can route into the
boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

RED, GREEN, BLUE = 0, 1, 2
PRIVILEGED_COLOR = RED

SURFACE = "surface"
COLOR666 = "color666"

UNREACHABLE = -1

# axial offsets to the six dual neighbours of a hexagon
_HEX_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
# axial offsets to the six nearest same-color hexagons (Euclidean distance 3)
_SAME_COLOR_NEIGHBOURS = ((1, 1), (-1, -1), (2, -1), (-2, 1), (1, -2), (-1, 2))


@dataclass(frozen=True)
class BoundaryNode:
    """Virtual dual-graph node absorbing charge at one patch side."""

    node: int
    side: str
    color: int | None
    pos: tuple[float, float]


@dataclass(frozen=True)
class VirtualFace:
    """Missing hexagon just outside the patch, used as a transport portal."""

    index: int              # id in the virtual namespace
    axial: tuple[int, int]
    color: int
    boundary: int           # dual node id of the boundary that owns it


@dataclass(frozen=True)
class BowtieEdge:
    """One same-color transport hop: moving charge k from face u to face v
    applies data moves (t1, c1*k) and (t2, c2*k); t2 is None for the
    degenerate corner-absorption hop."""

    u: int
    v: int                  # dual node id; may be a boundary node
    t1: int
    c1: int
    t2: int | None
    c2: int


@dataclass
class CodeGraph:
    """Immutable-by-convention description of one planar code instance."""

    kind: str
    distance: int

    # data qudits
    n_data: int = 0
    data_pos: np.ndarray = field(default_factory=lambda: np.zeros((0, 2)))
    # (stab id, sign) pairs restricted to the charge detectors, per data qudit
    data_checks: list[tuple[tuple[int, int], ...]] = field(default_factory=list)

    # stabilizer nodes; detectors (plaquettes / all color faces) come first
    n_stab: int = 0
    stab_pos: np.ndarray = field(default_factory=lambda: np.zeros((0, 2)))
    stab_support: list[tuple[tuple[int, int], ...]] = field(default_factory=list)
    stab_color: np.ndarray | None = None          # color666 only
    stab_role: np.ndarray | None = None           # surface only: 0 plaquette, 1 star
    n_detectors: int = 0

    # X-stabilizer generator rows, (data id, exponent) pairs
    x_generators: list[tuple[tuple[int, int], ...]] = field(default_factory=list)

    # logical operator along one boundary: Z-representative (pairing signs)
    logical_z: tuple[tuple[int, int], ...] = ()
    logical_x: tuple[tuple[int, int], ...] = ()

    # dual graph over stabilizers + boundary nodes
    boundaries: list[BoundaryNode] = field(default_factory=list)
    dual_adj: list[tuple[int, ...]] = field(default_factory=list)
    dual_dist: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), dtype=np.int16))
    # decoding metric: like dual_dist but with no transit through the
    # aggregated boundary nodes (they stand for extended rows of sites, so a
    # path through one is not a real lattice path)
    decode_dist: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), dtype=np.int16))

    # surface: shared data qudit for each adjacent detector pair / boundary hop
    chain_data: dict[tuple[int, int], int] = field(default_factory=dict)

    # color666 transport machinery
    virtual_faces: list[VirtualFace] = field(default_factory=list)
    data_virtuals: list[tuple[int, ...]] = field(default_factory=list)
    shrunk_edges: dict[int, list[BowtieEdge]] = field(default_factory=dict)
    shrunk_next: dict[int, dict[tuple[int, int], BowtieEdge]] = field(default_factory=dict)
    shrunk_dist: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)
    side_data: dict[int, tuple[int, ...]] = field(default_factory=dict)
    corner_data: tuple[int, ...] = ()
    internal_data: tuple[int, ...] = ()
    boundary_of_color: dict[int, int] = field(default_factory=dict)

    # lookup helpers retained for tests and plotting
    node_key: dict = field(default_factory=dict)

    @property
    def n_dual(self) -> int:
        return self.n_stab + len(self.boundaries)

    @property
    def detectors(self) -> range:
        return range(self.n_detectors)

    def is_boundary(self, node: int) -> bool:
        return node >= self.n_stab

    def diameter(self) -> int:
        d = self.dual_dist
        return int(d[d >= 0].max())

    def sign(self, stab: int, q: int) -> int:
        for qq, s in self.stab_support[stab]:
            if qq == q:
                return s
        raise KeyError(f"data {q} not in support of stabilizer {stab}")


def dual_distance(code: CodeGraph, a: int, b: int) -> int:
    """Hop count between two dual-graph nodes (stabilizers or boundaries)."""
    n = code.n_dual
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"node ids out of range: {a}, {b}")
    d = int(code.dual_dist[a, b])
    if d == UNREACHABLE:
        raise ValueError(f"nodes {a} and {b} are not connected in the dual graph")
    return d


def _check_distance(distance: int) -> None:
    if distance < 3 or distance % 2 == 0:
        raise ValueError(f"distance must be an odd integer >= 3, got {distance}")


def _all_pairs_hops(n: int, adj: list[tuple[int, ...]], terminal=()) -> np.ndarray:
    """BFS hop counts; nodes in `terminal` may end a path but not be crossed."""
    terminal = set(terminal)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
    for src in range(n):
        dist[src, src] = 0
        frontier = [src]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                if u in terminal and u != src:
                    continue
                for v in adj[u]:
                    if dist[src, v] == UNREACHABLE:
                        dist[src, v] = d
                        nxt.append(v)
            frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# surface code
# ---------------------------------------------------------------------------

def build_surface_code(distance: int) -> CodeGraph:
    """Planar Kitaev patch: d^2 + (d-1)^2 data qudits, one logical qudit."""
    _check_distance(distance)
    d = distance
    size = 2 * d - 1

    data_at = {}
    data_pos = []
    for y in range(size):
        for x in range(size):
            if (x + y) % 2 == 0:
                data_at[(x, y)] = len(data_pos)
                data_pos.append((float(x), float(y)))
    n_data = len(data_pos)

    plaq_at, star_at = {}, {}
    stab_pos = []
    for y in range(size):
        for x in range(size):
            if x % 2 == 1 and y % 2 == 0:
                plaq_at[(x, y)] = len(stab_pos)
                stab_pos.append((float(x), float(y)))
    n_plaq = len(stab_pos)
    for y in range(size):
        for x in range(size):
            if x % 2 == 0 and y % 2 == 1:
                star_at[(x, y)] = len(stab_pos)
                stab_pos.append((float(x), float(y)))
    n_stab = len(stab_pos)

    # east/south +1, west/north -1 for plaquettes; stars transpose north/south
    def neighbours(x, y, star):
        out = []
        for dx, dy, s_plaq, s_star in (
            (1, 0, 1, 1), (-1, 0, -1, -1), (0, 1, 1, -1), (0, -1, -1, 1),
        ):
            q = data_at.get((x + dx, y + dy))
            if q is not None:
                out.append((q, s_star if star else s_plaq))
        return tuple(out)

    stab_support: list[tuple[tuple[int, int], ...]] = [()] * n_stab
    for (x, y), s in plaq_at.items():
        stab_support[s] = neighbours(x, y, star=False)
    for (x, y), s in star_at.items():
        stab_support[s] = neighbours(x, y, star=True)

    data_checks = [[] for _ in range(n_data)]
    for s in range(n_plaq):
        for q, sg in stab_support[s]:
            data_checks[q].append((s, sg))

    left = BoundaryNode(n_stab, "left", None, (-1.0, (size - 1) / 2))
    right = BoundaryNode(n_stab + 1, "right", None, (float(size), (size - 1) / 2))
    boundaries = [left, right]
    n_dual = n_stab + 2

    adj = [set() for _ in range(n_dual)]
    chain_data: dict[tuple[int, int], int] = {}

    def connect(u, v, q):
        adj[u].add(v)
        adj[v].add(u)
        chain_data[(u, v)] = q
        chain_data[(v, u)] = q

    for (x, y), s in plaq_at.items():
        for xx, yy in ((x + 2, y), (x, y + 2)):
            t = plaq_at.get((xx, yy))
            if t is not None:
                connect(s, t, data_at[((x + xx) // 2, (y + yy) // 2)])
        if x == 1:
            connect(s, left.node, data_at[(0, y)])
        if x == size - 2:
            connect(s, right.node, data_at[(size - 1, y)])
    for (x, y), s in star_at.items():
        for xx, yy in ((x + 2, y), (x, y + 2)):
            t = star_at.get((xx, yy))
            if t is not None:
                connect(s, t, data_at[((x + xx) // 2, (y + yy) // 2)])

    dual_adj = [tuple(sorted(a)) for a in adj]

    # logical Z along the left rough boundary, logical X along the top row
    logical_z = tuple((data_at[(0, y)], 1) for y in range(0, size, 2))
    logical_x = tuple((data_at[(x, 0)], 1) for x in range(0, size, 2))

    code = CodeGraph(
        kind=SURFACE,
        distance=d,
        n_data=n_data,
        data_pos=np.array(data_pos),
        data_checks=[tuple(c) for c in data_checks],
        n_stab=n_stab,
        stab_pos=np.array(stab_pos),
        stab_support=stab_support,
        stab_role=np.array([0] * n_plaq + [1] * (n_stab - n_plaq)),
        n_detectors=n_plaq,
        x_generators=[stab_support[s] for s in range(n_plaq, n_stab)],
        logical_z=logical_z,
        logical_x=logical_x,
        boundaries=boundaries,
        dual_adj=dual_adj,
        dual_dist=_all_pairs_hops(n_dual, dual_adj),
        decode_dist=_all_pairs_hops(n_dual, dual_adj, terminal=(left.node, right.node)),
        chain_data=chain_data,
        node_key={"data_at": data_at, "plaq_at": plaq_at, "star_at": star_at},
    )
    return code


# ---------------------------------------------------------------------------
# 6-6-6 color code
# ---------------------------------------------------------------------------

def _color_patch(distance: int):
    """Enumerate kept faces/corners of the triangular patch in integer coords."""
    R = (distance - 1) // 2

    def keep(X, Y):
        return Y >= -R and X + Y <= 2 * R and X - Y >= -2 * R

    span = range(-2 * R - 3, 2 * R + 4)
    faces = {}
    for a in span:
        for b in span:
            if keep(3 * (a + b) - 2, a - b):
                faces[(a, b)] = (a - b) % 3

    corners = {}
    for al in span:
        for be in span:
            X, Y = 3 * (al + be), al - be
            if keep(X, Y):
                corners[(0, al, be)] = (X, Y)
            X, Y = 3 * (al + be) - 1, al - be + 1
            if keep(X, Y):
                corners[(1, al, be)] = (X, Y)
    return R, faces, corners


def _corner_faces(key):
    kind, al, be = key
    if kind == 0:
        return ((al, be), (al, be + 1), (al + 1, be))
    return ((al, be), (al + 1, be), (al + 1, be - 1))


def build_color_code_666(distance: int) -> CodeGraph:
    """Triangular 6-6-6 patch: (3d^2+1)/4 data qudits, three colored sides."""
    _check_distance(distance)
    d = distance
    R, faces, corners = _color_patch(d)

    # relabel colors so each side's color is the same for every distance
    # (bottom = privileged); otherwise the privileged color's position would
    # rotate with d mod 3 and distances would not be like-for-like
    shift = (-R - 1) % 3
    faces = {ax: (c - shift) % 3 for ax, c in faces.items()}

    face_ids = {ax: i for i, ax in enumerate(sorted(faces))}
    n_stab = len(face_ids)
    stab_color = np.array([faces[ax] for ax in sorted(faces)])
    stab_pos = np.array(
        [(1.5 * (a + b) - 1.0, math.sqrt(3) / 2 * (a - b)) for a, b in sorted(faces)]
    )
    rho = np.where(stab_color == PRIVILEGED_COLOR, -1, 1)

    data_ids = {key: i for i, key in enumerate(sorted(corners))}
    n_data = len(data_ids)
    data_pos = np.zeros((n_data, 2))
    for key, i in data_ids.items():
        X, Y = corners[key]
        data_pos[i] = (X / 2.0, math.sqrt(3) / 2 * Y)

    # real and virtual faces per data qudit; virtual faces become portals
    virt_ids: dict[tuple[int, int], int] = {}
    virt_list: list[tuple[int, int]] = []
    data_faces: list[tuple[tuple[int, int], ...]] = []
    data_virts: list[tuple[int, ...]] = []
    for key in sorted(corners):
        sigma = 1 if key[0] == 0 else -1
        real, virt = [], []
        for ax in _corner_faces(key):
            if ax in face_ids:
                f = face_ids[ax]
                real.append((f, sigma * int(rho[f])))
            else:
                if ax not in virt_ids:
                    virt_ids[ax] = len(virt_list)
                    virt_list.append(ax)
                virt.append(virt_ids[ax])
        data_faces.append(tuple(real))
        data_virts.append(tuple(sorted(virt)))

    stab_support_map: dict[int, list[tuple[int, int]]] = {s: [] for s in range(n_stab)}
    for q, pairs in enumerate(data_faces):
        for f, sg in pairs:
            stab_support_map[f].append((q, sg))
    stab_support = [tuple(sorted(stab_support_map[s])) for s in range(n_stab)]

    # sides: 0 bottom (Y = -R), 1 right (X+Y = 2R), 2 left (X-Y = -2R)
    def side_violations(ax):
        a, b = ax
        X, Y = 3 * (a + b) - 2, a - b
        return (Y < -R, X + Y > 2 * R, X - Y < -2 * R)

    side_names = ("bottom", "right", "left")
    side_color = {
        0: (-R - 1) % 3,
        1: (-R - 2) % 3,
        2: (-R) % 3,
    }
    boundaries = []
    boundary_of_color = {}
    side_data_map: dict[int, list[int]] = {}
    for side in range(3):
        node = n_stab + side
        if side == 0:
            qs = [q for key, q in data_ids.items() if corners[key][1] == -R]
        elif side == 1:
            qs = [q for key, q in data_ids.items() if sum(corners[key]) == 2 * R]
        else:
            qs = [q for key, q in data_ids.items() if corners[key][0] - corners[key][1] == -2 * R]
        qs.sort(key=lambda q: tuple(data_pos[q]))
        mid = data_pos[qs].mean(axis=0)
        centre = data_pos.mean(axis=0)
        out = mid + (mid - centre) * 0.35
        boundaries.append(BoundaryNode(node, side_names[side], side_color[side], tuple(out)))
        boundary_of_color[side_color[side]] = node
        side_data_map[node] = qs

    virtual_faces = []
    for ax in sorted(virt_ids, key=lambda ax: virt_ids[ax]):
        viol = side_violations(ax)
        if sum(viol) != 1:
            raise AssertionError(f"virtual face {ax} does not sit on exactly one side")
        side = viol.index(True)
        color = (ax[0] - ax[1]) % 3
        if color != side_color[side]:
            raise AssertionError(f"virtual face {ax} color {color} != side color")
        virtual_faces.append(VirtualFace(virt_ids[ax], ax, color, n_stab + side))

    # dual adjacency: face-face via the six hexagon neighbours, face-boundary
    # when the face holds data on that side
    adj = [set() for _ in range(n_stab + 3)]
    for ax, f in face_ids.items():
        for da, db in _HEX_NEIGHBOURS:
            g = face_ids.get((ax[0] + da, ax[1] + db))
            if g is not None:
                adj[f].add(g)
    for side in range(3):
        node = n_stab + side
        for q in side_data_map[node]:
            for f, _ in data_faces[q]:
                adj[f].add(node)
                adj[node].add(f)
    dual_adj = [tuple(sorted(a)) for a in adj]

    # same-color transport hops with their data-move recipes
    corner_ids = {}
    for key, q in data_ids.items():
        corner_ids[(key[0], key[1], key[2])] = q

    def triangle(kind, al, be):
        return corner_ids.get((kind, al, be))

    def triangle_between(ax1, ax2, ax3):
        """Data qudit whose face triple is exactly {ax1, ax2, ax3} (kept or None)."""
        s = {ax1, ax2, ax3}
        for kind in (0, 1):
            for ax in s:
                if kind == 0:
                    al, be = ax
                else:
                    al, be = ax
                cand = (kind, al, be)
                if set(_corner_faces(cand)) == s:
                    return corner_ids.get(cand)
        return None

    def sign_any(ax, key):
        """Orientation sign of corner `key` within face `ax` (real or virtual)."""
        sigma = 1 if key[0] == 0 else -1
        r = -1 if (ax[0] - ax[1]) % 3 == PRIVILEGED_COLOR else 1
        return sigma * r

    data_keys = sorted(corners)

    def key_of(q):
        return data_keys[q]

    shrunk_edges: dict[int, list[BowtieEdge]] = {c: [] for c in range(3)}

    def is_real(ax):
        return ax in face_ids

    for ax, u in sorted(face_ids.items(), key=lambda kv: kv[1]):
        c = faces[ax]
        a, b = ax
        for da, db in _SAME_COLOR_NEIGHBOURS:
            ay = (a + da, b + db)
            # the two common dual neighbours of ax and ay
            common = [
                (a + ea, b + eb)
                for ea, eb in _HEX_NEIGHBOURS
                if (ay[0] - (a + ea), ay[1] - (b + eb)) in _HEX_NEIGHBOURS
            ]
            if len(common) != 2:
                continue
            P, Q = common
            t1 = triangle_between(ax, P, Q)
            t2 = triangle_between(ay, P, Q)
            if t1 is None or t2 is None:
                continue
            real_pq = [pq for pq in (P, Q) if is_real(pq)]
            k1, k2 = key_of(t1), key_of(t2)
            c1 = -sign_any(ax, k1)  # removes +k from u
            if real_pq:
                pq = real_pq[0]
                c2 = -sign_any(pq, k2) * sign_any(pq, k1) * c1
            else:
                c2 = sign_any(ay, k2)  # free choice: make the target gain +k
            for pq in (P, Q):
                if is_real(pq):
                    if sign_any(pq, k1) * c1 + sign_any(pq, k2) * c2 != 0:
                        raise AssertionError(f"bowtie through {pq} does not cancel")
            if is_real(ay):
                if sign_any(ay, k2) * c2 != 1:
                    raise AssertionError("bowtie target gain != +k")
                v = face_ids[ay]
            elif ay in virt_ids:
                v = boundary_of_color[c]
            else:
                continue
            shrunk_edges[c].append(BowtieEdge(u, v, t1, c1, t2, c2))

    # corner absorption: a degree-1 data qudit sits between two sides and its
    # single real face can shed any charge with one move
    for q in range(n_data):
        if len(data_faces[q]) == 1:
            f, sg = data_faces[q][0]
            c = int(stab_color[f])
            shrunk_edges[c].append(
                BowtieEdge(f, boundary_of_color[c], q, -sg, None, 0)
            )

    # deterministic shortest-hop routing per color, boundary included
    shrunk_next: dict[int, dict[tuple[int, int], BowtieEdge]] = {}
    shrunk_dist: dict[int, dict[tuple[int, int], int]] = {}
    for c in range(3):
        nodes = sorted({e.u for e in shrunk_edges[c]} | {e.v for e in shrunk_edges[c]}
                       | {s for s in range(n_stab) if stab_color[s] == c}
                       | {boundary_of_color[c]})
        out: dict[int, list[BowtieEdge]] = {n: [] for n in nodes}
        for e in shrunk_edges[c]:
            out[e.u].append(e)
        for n in out:
            out[n].sort(key=lambda e: (e.v, e.t1))
        nxt: dict[tuple[int, int], BowtieEdge] = {}
        dst: dict[tuple[int, int], int] = {}
        for src in nodes:
            dst[(src, src)] = 0
            frontier = [src]
            depth = 0
            while frontier:
                depth += 1
                nxt_frontier = []
                for u in sorted(frontier):
                    for e in out.get(u, ()):
                        if e.v == src or (src, e.v) in dst:
                            continue
                        dst[(src, e.v)] = depth
                        nxt[(src, e.v)] = e if u == src else nxt[(src, u)]
                        nxt_frontier.append(e.v)
                frontier = nxt_frontier
        shrunk_next[c] = nxt
        shrunk_dist[c] = dst

    corner_data = tuple(sorted(q for q in range(n_data) if len(data_faces[q]) == 1))
    internal_data = tuple(sorted(q for q in range(n_data) if len(data_faces[q]) == 3))
    if len(corner_data) != 3:
        raise AssertionError("expected exactly three corner data qudits")

    # logical along the bottom side: Z-pairing signs follow the orientation
    bottom = side_data_map[n_stab]
    logical_z = tuple((q, 1 if key_of(q)[0] == 0 else -1) for q in bottom)
    logical_x = tuple((q, 1) for q in bottom)

    code = CodeGraph(
        kind=COLOR666,
        distance=d,
        n_data=n_data,
        data_pos=data_pos,
        data_checks=data_faces,
        n_stab=n_stab,
        stab_pos=stab_pos,
        stab_support=stab_support,
        stab_color=stab_color,
        n_detectors=n_stab,
        x_generators=[tuple((q, 1) for q, _ in stab_support[s]) for s in range(n_stab)],
        logical_z=logical_z,
        logical_x=logical_x,
        boundaries=boundaries,
        dual_adj=dual_adj,
        dual_dist=_all_pairs_hops(n_stab + 3, dual_adj),
        decode_dist=_all_pairs_hops(n_stab + 3, dual_adj, terminal=(n_stab, n_stab + 1, n_stab + 2)),
        virtual_faces=virtual_faces,
        data_virtuals=data_virts,
        shrunk_edges=shrunk_edges,
        shrunk_next=shrunk_next,
        shrunk_dist=shrunk_dist,
        side_data={n: tuple(qs) for n, qs in side_data_map.items()},
        corner_data=corner_data,
        internal_data=internal_data,
        boundary_of_color=boundary_of_color,
        node_key={"face_ids": face_ids, "data_ids": data_ids, "virt_ids": virt_ids},
    )
    return code


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(code: CodeGraph) -> list[str]:
    """Check construction invariants; returns a list of violations (empty = ok).

    The commutativity check is the CSS condition between the charge-detecting
    rows and the X-stabilizer generator rows; the sums are required to vanish
    exactly over the integers, hence modulo every qudit dimension at once.
    """
    bad: list[str] = []
    d = code.distance

    supp = [dict(s) for s in code.stab_support]
    gens = [dict(g) for g in code.x_generators]

    if code.kind == SURFACE:
        if code.n_data != d * d + (d - 1) * (d - 1):
            bad.append(f"data count {code.n_data} != d^2+(d-1)^2")
        n_plaq = code.n_detectors
        if n_plaq != d * (d - 1) or code.n_stab - n_plaq != d * (d - 1):
            bad.append("stabilizer counts != d(d-1) per type")
        for p in range(n_plaq):
            for g, grow in enumerate(gens):
                shared = supp[p].keys() & grow.keys()
                if len(shared) not in (0, 2):
                    bad.append(f"plaquette {p} / star {g} share {len(shared)} qudits")
                if sum(supp[p][q] * grow[q] for q in shared) != 0:
                    bad.append(f"commutativity violated for plaquette {p}, star {g}")
        # bulk data qudits see their two plaquettes with opposite signs
        for q in range(code.n_data):
            checks = code.data_checks[q]
            if len(checks) == 2 and checks[0][1] + checks[1][1] != 0:
                bad.append(f"bulk data {q} signs do not conserve charge")
    elif code.kind == COLOR666:
        if code.n_data != (3 * d * d + 1) // 4:
            bad.append(f"data count {code.n_data} != (3d^2+1)/4")
        if code.n_stab != (3 * d * d - 3) // 8:
            bad.append(f"stabilizer count {code.n_stab} != (3d^2-3)/8")
        for s in range(code.n_stab):
            w = len(supp[s])
            if w not in (4, 6):
                bad.append(f"face {s} has weight {w}")
        for s in range(code.n_stab):
            for t in code.dual_adj[s]:
                if t < code.n_stab and code.stab_color[s] == code.stab_color[t]:
                    bad.append(f"dual edge {s}-{t} joins same-color faces")
        for s in range(code.n_stab):
            for t in range(s + 1, code.n_stab):
                shared = supp[s].keys() & supp[t].keys()
                if len(shared) not in (0, 2):
                    bad.append(f"faces {s},{t} share {len(shared)} qudits")
        for s in range(code.n_stab):
            for grow in gens:
                shared = supp[s].keys() & grow.keys()
                if sum(supp[s][q] * grow[q] for q in shared) != 0:
                    bad.append(f"commutativity violated at face {s}")
        for q in range(code.n_data):
            cols = {code.stab_color[f] for f, _ in code.data_checks[q]}
            if len(cols) != len(code.data_checks[q]):
                bad.append(f"data {q} touches repeated colors")
    else:
        bad.append(f"unknown code kind {code.kind}")

    # logical structure: Z-rep commutes with all X generators, X-rep has
    # trivial syndrome, and the two pair with coefficient +-1
    zl = dict(code.logical_z)
    xl = dict(code.logical_x)
    for grow in gens:
        s = sum(zl[q] * e for q, e in grow.items() if q in zl)
        if s != 0:
            bad.append("logical Z fails to commute with an X generator")
            break
    for det in code.detectors:
        s = sum(supp[det][q] * xl[q] for q in supp[det].keys() & xl.keys())
        if s != 0:
            bad.append("logical X is detected by a stabilizer")
            break
    pairing = sum(zl.get(q, 0) * e for q, e in xl.items())
    if pairing not in (1, -1):
        bad.append(f"logical pairing coefficient {pairing} not +-1")

    # boundary nodes must be attached
    for bnode in code.boundaries:
        if not code.dual_adj[bnode.node]:
            bad.append(f"boundary {bnode.side} has no dual neighbours")

    return bad
