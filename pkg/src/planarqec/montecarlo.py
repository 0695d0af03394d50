"""Monte Carlo estimation of logical error rates.

One trial samples an error, extracts the syndrome, decodes, and judges the
residual.  Trials are keyed by (master seed, trial index) so the aggregate
is bit-identical for any worker count or scheduling order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .codegraph import CodeGraph
from .decoders import decode
from .logical import is_logical_failure
from .noise import compose, sample_error, trial_rng
from .syndrome import extract, is_trivial


class DecoderContractError(RuntimeError):
    """A decoder returned a correction that does not cancel the syndrome."""


@dataclass(frozen=True)
class RatePoint:
    code: str
    decoder: str
    dim: int
    distance: int
    p: float
    trials: int
    failures: int
    rate: float
    ci_low: float
    ci_high: float
    seed: int


def wilson_interval(failures: int, trials: int, z: float = 1.959963984540054) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    phat = failures / trials
    denom = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    lo = 0.0 if failures == 0 else max(0.0, centre - half)
    hi = 1.0 if failures == trials else min(1.0, centre + half)
    return lo, hi


def run_trial(code: CodeGraph, decoder: str, p: float, dim: int,
              master_seed: int, trial_index: int) -> bool:
    """True iff this trial ends in a logical failure."""
    rng = trial_rng(master_seed, trial_index)
    err = sample_error(code, p, dim, rng)
    syn = extract(code, err, dim)
    corr = decode(decoder, code, syn, dim)
    residual = compose(err, corr, dim)
    if not is_trivial(extract(code, residual, dim)):
        raise DecoderContractError(
            f"decoder {decoder} left a nontrivial syndrome "
            f"(seed={master_seed}, trial={trial_index}, p={p}, D={dim})"
        )
    return is_logical_failure(code, residual, dim, check=False)


def _run_block(args) -> int:
    code, decoder, p, dim, seed, start, stop = args
    failures = 0
    for t in range(start, stop):
        failures += run_trial(code, decoder, p, dim, seed, t)
    return failures


def estimate_rate(code: CodeGraph, decoder: str, p: float, dim: int,
                  trials: int, seed: int, workers: int | None = None) -> RatePoint:
    """Aggregate `trials` independent trials into a RatePoint."""
    if trials < 1:
        raise ValueError("need at least one trial")
    workers = workers if workers else (os.cpu_count() or 1)
    if workers <= 1:
        failures = _run_block((code, decoder, p, dim, seed, 0, trials))
    else:
        chunks = []
        step = max(1, math.ceil(trials / (workers * 4)))
        for start in range(0, trials, step):
            chunks.append((code, decoder, p, dim, seed, start, min(trials, start + step)))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(_run_block, chunks))
    lo, hi = wilson_interval(failures, trials)
    return RatePoint(
        code=code.kind,
        decoder=decoder,
        dim=dim,
        distance=code.distance,
        p=p,
        trials=trials,
        failures=failures,
        rate=failures / trials,
        ci_low=lo,
        ci_high=hi,
        seed=seed,
    )
