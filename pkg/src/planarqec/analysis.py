"""Threshold estimation and the plateau fit over qudit dimension.

The threshold of a (decoder, D) family is read off as the crossing of the
logical-rate curves of two code distances: each curve gets a local quadratic
fit over a window around the coarse crossing, and the intersection of the
two quadratics is the estimate.  A binomial bootstrap over the rate points
gives the standard error.  Thresholds as a function of qudit dimension
saturate along T(D) = T_plateau - alpha / (beta - D).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import curve_fit

from .montecarlo import RatePoint


class NoCrossingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ThresholdEstimate:
    p_thresh: float
    stderr: float
    d_pair: tuple[int, int]
    fit_window: tuple[float, float]


@dataclass(frozen=True)
class PlateauFit:
    t_plateau: float
    alpha: float
    beta: float
    residual: float
    pole_in_range: bool


def _curve(points: list[RatePoint]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pts = sorted(points, key=lambda r: r.p)
    return (
        np.array([r.p for r in pts]),
        np.array([r.rate for r in pts]),
        np.array([r.trials for r in pts]),
    )


def _coarse_crossing(p: np.ndarray, r1: np.ndarray, r2: np.ndarray) -> float:
    """Sign change of the rate difference nearest the centre of the grid
    (noisy near-degenerate curves can change sign more than once)."""
    diff = r1 - r2
    candidates = []
    for i in range(len(p) - 1):
        a, b = diff[i], diff[i + 1]
        if a == 0 and b == 0:
            continue
        if a == 0:
            candidates.append(float(p[i]))
        elif a * b < 0 or b == 0:
            t = a / (a - b)
            candidates.append(float(p[i] + t * (p[i + 1] - p[i])))
    if not candidates:
        raise NoCrossingError("rate curves do not cross on the sampled grid")
    centre = float(p[0] + p[-1]) / 2
    return min(candidates, key=lambda x: abs(x - centre))


def _quad_crossing(p1, r1, n1, p2, r2, n2, window: tuple[float, float], guess: float) -> float:
    lo, hi = window
    m1 = (p1 >= lo) & (p1 <= hi)
    m2 = (p2 >= lo) & (p2 <= hi)
    if m1.sum() < 4 or m2.sum() < 4:
        raise NoCrossingError("fewer than 4 points per curve span the crossing window")

    def fit(p, r, n, m):
        sigma = np.sqrt(np.clip(r * (1 - r), 1e-6, None) / n)
        return np.polyfit(p[m], r[m], 2, w=1.0 / sigma[m])

    c1 = fit(p1, r1, n1, m1)
    c2 = fit(p2, r2, n2, m2)
    roots = np.roots(c1 - c2)
    real = [float(x.real) for x in roots if abs(x.imag) < 1e-9 and lo <= x.real <= hi]
    if not real:
        raise NoCrossingError("quadratic fits do not intersect inside the window")
    return min(real, key=lambda x: abs(x - guess))


def find_threshold(points: list[RatePoint], d_pair: tuple[int, int],
                   n_bootstrap: int = 200, seed: int = 7) -> ThresholdEstimate:
    """Crossing of the two distances' rate curves with a bootstrap stderr."""
    d1, d2 = sorted(d_pair)
    c1 = [r for r in points if r.distance == d1]
    c2 = [r for r in points if r.distance == d2]
    if not c1 or not c2:
        raise ValueError(f"missing rate points for distances {d_pair}")
    p1, r1, n1 = _curve(c1)
    p2, r2, n2 = _curve(c2)
    if np.array_equal(p1, p2) and np.array_equal(r1, r2):
        raise NoCrossingError("identical curves have no unique crossing")

    common = np.intersect1d(p1, p2)
    if len(common) >= 2:
        i1 = np.searchsorted(p1, common)
        i2 = np.searchsorted(p2, common)
        coarse = _coarse_crossing(common, r1[i1], r2[i2])
    else:
        coarse = _coarse_crossing(p1, r1, np.interp(p1, p2, r2))
    window = (coarse * 0.7, coarse * 1.3)
    estimate = _quad_crossing(p1, r1, n1, p2, r2, n2, window, coarse)

    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(n_bootstrap):
        rr1 = rng.binomial(n1, np.clip(r1, 0, 1)) / n1
        rr2 = rng.binomial(n2, np.clip(r2, 0, 1)) / n2
        try:
            samples.append(_quad_crossing(p1, rr1, n1, p2, rr2, n2, window, estimate))
        except NoCrossingError:
            continue
    stderr = float(np.std(samples)) if len(samples) >= 2 else float("nan")
    return ThresholdEstimate(float(estimate), stderr, (d1, d2), window)


def plateau_model(dim, t_plateau, alpha, beta):
    return t_plateau - alpha / (beta - np.asarray(dim, dtype=float))


def fit_plateau(thresholds: list[tuple[float, float]], max_iterations: int = 20000) -> PlateauFit:
    """Least-squares fit of T(D) = T_plateau - alpha / (beta - D)."""
    if len(thresholds) < 4:
        raise ValueError("plateau fit needs at least 4 (D, p_thresh) points")
    dims = np.array([float(d) for d, _ in thresholds])
    if len(set(dims)) != len(dims):
        raise ValueError("duplicate qudit dimensions in plateau input")
    vals = np.array([float(t) for _, t in thresholds])
    p0 = (vals.max() + 0.005, -1.0, 0.0)
    try:
        popt, _ = curve_fit(plateau_model, dims, vals, p0=p0, maxfev=max_iterations)
    except RuntimeError as exc:
        raise RuntimeError(f"plateau fit did not converge: {exc}") from exc
    resid = float(np.linalg.norm(plateau_model(dims, *popt) - vals))
    t_plateau, alpha, beta = (float(x) for x in popt)
    return PlateauFit(
        t_plateau=t_plateau,
        alpha=alpha,
        beta=beta,
        residual=resid,
        pole_in_range=bool(dims.min() <= beta <= dims.max()),
    )
