"""Generalized bit-flip noise on data qudits.

An error configuration is a sparse map {data id: charge}, the exponent j of
X^j applied to that qudit.  Each qudit is flipped independently with
probability p; a flipped qudit receives a charge drawn uniformly from
{1, ..., D-1}.
"""

from __future__ import annotations

import numpy as np

from .codegraph import CodeGraph

_M64 = (1 << 64) - 1

ErrorConfig = dict[int, int]


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Counter-based substream for one trial.

    Philox streams are keyed by (master seed, trial index), so samples are a
    pure function of (seed, trial, draw position) regardless of how trials
    are scheduled across workers.
    """
    if trial_index < 0:
        raise ValueError("trial index must be non-negative")
    key = [master_seed & _M64, (trial_index ^ (master_seed >> 64)) & _M64]
    return np.random.Generator(np.random.Philox(key=np.array(key, dtype=np.uint64)))


def sample_error(code: CodeGraph, p: float, dim: int, rng: np.random.Generator) -> ErrorConfig:
    """Independent X^j noise with total flip probability p per data qudit."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"flip probability {p} outside [0, 1]")
    if dim < 2:
        raise ValueError("qudit dimension must be >= 2")
    n = code.n_data
    flips = rng.random(n) < p
    charges = rng.integers(1, dim, size=n)
    return {int(q): int(charges[q]) for q in np.nonzero(flips)[0]}


def compose(a: ErrorConfig, b: ErrorConfig, dim: int) -> ErrorConfig:
    """Pointwise charge addition mod D, dropping zeros."""
    out = dict(a)
    for q, c in b.items():
        s = (out.get(q, 0) + c) % dim
        if s:
            out[q] = s
        else:
            out.pop(q, None)
    return {q: c % dim for q, c in out.items() if c % dim}


def inverse(e: ErrorConfig, dim: int) -> ErrorConfig:
    """Additive inverse: charge k maps to (D - k) mod D."""
    return {q: (dim - c) % dim for q, c in e.items() if c % dim}
