"""Charge-transport primitives applied as software corrections.

A TransportLedger holds the live syndrome view and the accumulated
correction for one decoding run.  Every operation reduces to data moves:
adding charge m to data qudit q shifts each incident detector s by
sign(s, q) * m.  Same-color transport on the color code composes bowtie
hops (two data moves through an adjacent face pair); charge identities
trade charge between the three colors around a shared data qudit; surface
chains walk the plaquette lattice one shared qudit at a time.  Boundaries
absorb silently: moves on side data simply have fewer incident detectors.
"""

from __future__ import annotations

from .codegraph import COLOR666, SURFACE, CodeGraph
from .noise import ErrorConfig
from .syndrome import Syndrome


class TransportError(ValueError):
    pass


class TransportLedger:
    """Live syndrome plus accumulated correction for a single trial."""

    def __init__(self, code: CodeGraph, syndrome: Syndrome, dim: int):
        self.code = code
        self.dim = dim
        self.syndrome: Syndrome = {s: v % dim for s, v in syndrome.items() if v % dim}
        self.correction: ErrorConfig = {}
        self.corner_absorbs = 0

    def charge(self, node: int) -> int:
        return self.syndrome.get(node, 0)

    @property
    def flagged(self) -> list[int]:
        return sorted(self.syndrome)

    def data_move(self, q: int, m: int) -> None:
        """Add charge m to data qudit q; updates only incident detectors."""
        dim = self.dim
        m %= dim
        if m == 0:
            return
        corr = self.correction
        s = (corr.get(q, 0) + m) % dim
        if s:
            corr[q] = s
        else:
            corr.pop(q, None)
        syn = self.syndrome
        for stab, sg in self.code.data_checks[q]:
            v = (syn.get(stab, 0) + sg * m) % dim
            if v:
                syn[stab] = v
            else:
                syn.pop(stab, None)

    # -- color code ---------------------------------------------------------

    def transport_same_color(self, frm: int, to: int, k: int) -> None:
        """Move charge k from face `frm` to same-color face or boundary `to`."""
        code = self.code
        if code.kind != COLOR666:
            raise TransportError("same-color transport is a color-code operation")
        k %= self.dim
        if frm == to or k == 0:
            return
        c = int(code.stab_color[frm])
        to_color = (
            code.boundaries[to - code.n_stab].color
            if code.is_boundary(to)
            else int(code.stab_color[to])
        )
        if to_color != c:
            raise TransportError(f"transport endpoints have colors {c} and {to_color}")
        nxt = code.shrunk_next[c]
        cur = frm
        while cur != to:
            try:
                edge = nxt[(cur, to)]
            except KeyError:
                raise TransportError(f"no same-color route {frm} -> {to}") from None
            self.data_move(edge.t1, edge.c1 * k)
            if edge.t2 is not None:
                self.data_move(edge.t2, edge.c2 * k)
            else:
                self.corner_absorbs += 1
            cur = edge.v

    def charge_identity(self, face_triple: tuple[int, int, int], target: int) -> int:
        """Zero the live charge of the target face by one shared data move.

        The triple must be three mutually adjacent faces, one per color,
        around a common data qudit; the other two faces shift by the signed
        move magnitude.  Returns the applied magnitude.
        """
        code = self.code
        if code.kind != COLOR666:
            raise TransportError("charge identity is a color-code operation")
        if target not in face_triple:
            raise TransportError("target face not in the triple")
        shared = None
        for q, _ in code.stab_support[face_triple[0]]:
            fs = {f for f, _ in code.data_checks[q]}
            if set(face_triple) <= fs:
                shared = q
                break
        if shared is None:
            raise TransportError(f"faces {face_triple} share no common data qudit")
        sg = code.sign(target, shared)
        m = (-self.charge(target) * sg) % self.dim
        self.data_move(shared, m)
        return m

    # -- surface code -------------------------------------------------------

    def transport_chain_surface(self, frm: int, to: int, k: int) -> None:
        """Move charge k between plaquettes (or into a boundary) along a
        shortest dual chain."""
        code = self.code
        if code.kind != SURFACE:
            raise TransportError("chain transport is a surface-code operation")
        k %= self.dim
        if frm == to or k == 0:
            return
        for node in (frm, to):
            if not code.is_boundary(node) and node >= code.n_detectors:
                raise TransportError("surface transport runs on the plaquette sector")
        dist = code.dual_dist
        cur = frm
        while cur != to:
            step = None
            best = dist[cur, to]
            for v in code.dual_adj[cur]:
                if dist[v, to] == best - 1:
                    step = v
                    break
            if step is None:
                raise TransportError(f"no chain route {frm} -> {to}")
            q = code.chain_data[(cur, step)]
            if code.is_boundary(cur):
                # re-entry from a boundary: deposit +k on the next plaquette
                self.data_move(q, k * code.sign(step, q))
            else:
                self.data_move(q, -k * code.sign(cur, q))
            cur = step
