"""Logical verdicts for trivial-syndrome residuals.

The production check pairs the residual X-type operator with the stored
logical-Z representative; the brute-force oracle decides stabilizer-class
membership over Z_D by exact integer row reduction, which stays valid for
composite dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codegraph import CodeGraph
from .noise import ErrorConfig
from .syndrome import extract, is_trivial


@dataclass(frozen=True)
class TrialVerdict:
    failure: bool
    residual_weight: int


def is_logical_failure(code: CodeGraph, residual: ErrorConfig, dim: int, *, check: bool = True) -> bool:
    """True iff the residual anticommutes with the logical-Z representative."""
    if check and not is_trivial(extract(code, residual, dim)):
        raise ValueError("residual has nontrivial syndrome; decoder bug upstream")
    total = 0
    for q, sg in code.logical_z:
        c = residual.get(q)
        if c:
            total += sg * c
    return total % dim != 0


def classify_residual(code: CodeGraph, residual: ErrorConfig, dim: int) -> TrialVerdict:
    return TrialVerdict(
        failure=is_logical_failure(code, residual, dim),
        residual_weight=len(residual),
    )


def _row_reduce_int(rows: list[list[int]]) -> list[list[int]]:
    """Hermite-style integer row echelon via extended-gcd row operations."""
    rows = [r[:] for r in rows if any(r)]
    n = len(rows[0]) if rows else 0
    echelon: list[list[int]] = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col] != 0]
        if not live:
            col += 1
            continue
        # combine rows until a single nonzero entry (the gcd) remains in col
        rest = [r for r in rows if r[col] == 0]
        pivot = live[0]
        for r in live[1:]:
            while r[col] != 0:
                q = pivot[col] // r[col]
                pivot = [x - q * y for x, y in zip(pivot, r)]
                pivot, r = r, pivot
            if any(r):
                rest.append(r)
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        echelon.append(pivot)
        rows = rest
        col += 1
    return echelon


def _in_row_span_mod(rows: list[list[int]], vec: list[int], dim: int) -> bool:
    """Membership of vec in the integer row span of rows modulo dim."""
    n = len(vec)
    stacked = [r[:] for r in rows]
    for i in range(n):
        stacked.append([dim if j == i else 0 for j in range(n)])
    echelon = _row_reduce_int(stacked)
    v = vec[:]
    for row in echelon:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        if v[lead] % row[lead] == 0:
            f = v[lead] // row[lead]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def brute_force_class_oracle(code: CodeGraph, residual: ErrorConfig, dim: int) -> bool:
    """True iff the residual is NOT a combination of X-stabilizer generators.

    Exact over Z_D for any dim, including composite; intended for small codes
    (d <= 5) as an independent check on the single-logical pairing.
    """
    if code.distance > 5:
        raise ValueError("oracle is restricted to d <= 5 codes")
    if not is_trivial(extract(code, residual, dim)):
        raise ValueError("residual has nontrivial syndrome; decoder bug upstream")
    rows = []
    for gen in code.x_generators:
        row = [0] * code.n_data
        for q, e in gen:
            row[q] = e
        rows.append(row)
    vec = [residual.get(q, 0) % dim for q in range(code.n_data)]
    return not _in_row_span_mod(rows, vec, dim)
