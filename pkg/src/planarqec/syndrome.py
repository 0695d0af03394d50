"""Signed syndrome extraction.

The syndrome is the sparse map {stabilizer id: charge} with
sigma(s) = sum_q sign(s, q) * e(q) mod D over the charge detectors, i.e. the
linear map every decoder inverts.
"""

from __future__ import annotations

from .codegraph import CodeGraph
from .noise import ErrorConfig

Syndrome = dict[int, int]


def extract(code: CodeGraph, err: ErrorConfig, dim: int) -> Syndrome:
    acc: dict[int, int] = {}
    checks = code.data_checks
    n = code.n_data
    for q, c in err.items():
        if not 0 <= q < n:
            raise ValueError(f"unknown data id {q}")
        for s, sg in checks[q]:
            acc[s] = acc.get(s, 0) + sg * c
    return {s: v % dim for s, v in acc.items() if v % dim}


def is_trivial(syn: Syndrome) -> bool:
    return not syn
