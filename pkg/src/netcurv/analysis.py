"""Curvature statistics: gap, correlation, histograms, bimodal threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Partition
from .vectors import CurvatureVector


class DegenerateGapError(ValueError):
    """Gap undefined: a side has no edges, or the pooled deviation is zero.

    Carries whatever means were computable so callers can still report them.
    """

    def __init__(self, message, kappa_within=None, kappa_between=None):
        super().__init__(message)
        self.kappa_within = kappa_within
        self.kappa_between = kappa_between


class UndefinedCorrelationError(ValueError):
    """Pearson correlation undefined because an input has zero variance."""


class InsufficientDataError(ValueError):
    """Too few distinct values to fit a two-component mixture."""


@dataclass(frozen=True)
class GapReport:
    """Within/between curvature means and the normalized gap between them.

    sigma is the pooled population deviation sqrt((sw^2 + sb^2) / 2); the
    gap is |kappa_within - kappa_between| / sigma, i.e. the number of
    pooled standard deviations separating the two means.
    """

    kappa_within: float
    kappa_between: float
    sigma_within: float
    sigma_between: float
    sigma: float
    gap: float
    n_within: int
    n_between: int

    def to_dict(self) -> dict:
        return {
            "kappa_within": self.kappa_within,
            "kappa_between": self.kappa_between,
            "sigma_within": self.sigma_within,
            "sigma_between": self.sigma_between,
            "sigma": self.sigma,
            "gap": self.gap,
            "n_within": self.n_within,
            "n_between": self.n_between,
        }


@dataclass(frozen=True)
class CorrelationReport:
    method_a: str
    method_b: str
    r: float
    n_edges: int

    def to_dict(self) -> dict:
        return {
            "method_a": self.method_a,
            "method_b": self.method_b,
            "pearson_r": self.r,
            "n_edges": self.n_edges,
        }


def curvature_gap(cv: CurvatureVector, truth: Partition) -> GapReport:
    """Normalized distance between within- and between-community means.

    Standard deviations are population (N-denominator) deviations.
    """
    within = []
    between = []
    for (u, v), val in cv.values.items():
        if u not in truth.labels or v not in truth.labels:
            raise ValueError(f"partition does not cover edge ({u}, {v})")
        (within if truth.labels[u] == truth.labels[v] else between).append(val)
    kw = float(np.mean(within)) if within else None
    kb = float(np.mean(between)) if between else None
    if not within or not between:
        side = "within" if not within else "between"
        raise DegenerateGapError(f"no {side}-community edges", kw, kb)
    sw = float(np.std(within))
    sb = float(np.std(between))
    sigma = math.sqrt((sw * sw + sb * sb) / 2.0)
    if sigma == 0.0:
        raise DegenerateGapError("zero pooled deviation", kw, kb)
    return GapReport(
        kappa_within=kw,
        kappa_between=kb,
        sigma_within=sw,
        sigma_between=sb,
        sigma=sigma,
        gap=abs(kw - kb) / sigma,
        n_within=len(within),
        n_between=len(between),
    )


def pearson(a: CurvatureVector, b: CurvatureVector) -> float:
    """Pearson correlation of two curvature vectors, paired by edge.

    Identical (or exactly negated) inputs short-circuit to +/-1.0 so that
    analytically perfect correlations are not blurred by rounding; the
    general path clamps to [-1, 1].
    """
    if set(a.values) != set(b.values):
        raise ValueError("curvature vectors cover different edge sets")
    edges = sorted(a.values)
    xs = np.asarray([a.values[e] for e in edges], dtype=float)
    ys = np.asarray([b.values[e] for e in edges], dtype=float)
    if xs.size < 2 or np.all(xs == xs[0]) or np.all(ys == ys[0]):
        raise UndefinedCorrelationError("zero variance in curvature values")
    if np.array_equal(xs, ys):
        return 1.0
    if np.array_equal(xs, -ys):
        return -1.0
    xc = xs - xs.mean()
    yc = ys - ys.mean()
    r = float(np.dot(xc, yc) / math.sqrt(np.dot(xc, xc) * np.dot(yc, yc)))
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class ThresholdFit:
    """Two fitted Gaussians and the decision boundary between them.

    delta weights each mean by the other component's variance (see
    `boundary`); it is a convex combination, so it always lies between
    the two component means, and it equals the plain midpoint whenever
    the deviations match.
    """

    mu1: float
    sigma1: float
    mu2: float
    sigma2: float
    delta: float
    converged: bool
    iterations: int

    def to_dict(self) -> dict:
        return {
            "mu1": self.mu1,
            "sigma1": self.sigma1,
            "mu2": self.mu2,
            "sigma2": self.sigma2,
            "delta": self.delta,
            "converged": self.converged,
            "iterations": self.iterations,
        }


def _best_split(x: np.ndarray) -> int:
    """Index s minimizing within-cluster sum of squares of x[:s] | x[s:].

    x must be sorted; for 1-D 2-means the optimum is a contiguous split,
    so scanning all splits solves the clustering exactly.
    """
    n = len(x)
    p1 = np.cumsum(x)
    p2 = np.cumsum(x * x)
    total1, total2 = p1[-1], p2[-1]
    ks = np.arange(1, n)
    left = p2[ks - 1] - p1[ks - 1] ** 2 / ks
    right = (total2 - p2[ks - 1]) - (total1 - p1[ks - 1]) ** 2 / (n - ks)
    return int(ks[np.argmin(left + right)])


# split fractions seeding the EM restarts; the exact 2-means split is
# always tried as well
_INIT_FRACTIONS = (0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95)


def boundary(mu1: float, sigma1: float, mu2: float, sigma2: float) -> float:
    """Decision boundary between two Gaussians: the variance-weighted mean

        (sigma2^2 * mu1 + sigma1^2 * mu2) / (sigma1^2 + sigma2^2),

    i.e. each mean weighted by the other component's variance, so the
    boundary hugs the tighter component. Equal deviations give the plain
    midpoint.
    """
    v1, v2 = sigma1 * sigma1, sigma2 * sigma2
    return (v2 * mu1 + v1 * mu2) / (v1 + v2)


def _run_em(x: np.ndarray, member: np.ndarray, floor: float):
    """EM from an initial component-2 membership mask; returns params + LL."""
    n = x.size
    parts = (x[~member], x[member])
    w = np.array([parts[0].size / n, parts[1].size / n])
    mu = np.array([parts[0].mean(), parts[1].mean()])
    sd = np.array([max(float(p.std()), floor) for p in parts])
    ll = ll_prev = -np.inf
    tol_reached = False
    iterations = 0
    for iterations in range(1, 201):
        logp = (
            -0.5 * ((x[:, None] - mu[None, :]) / sd[None, :]) ** 2
            - np.log(sd[None, :])
            - 0.5 * math.log(2 * math.pi)
            + np.log(w[None, :])
        )
        mx = logp.max(axis=1, keepdims=True)
        lse = mx[:, 0] + np.log(np.exp(logp - mx).sum(axis=1))
        ll = float(lse.sum())
        resp = np.exp(logp - lse[:, None])
        wsum = np.maximum(resp.sum(axis=0), 1e-12)  # keep log(w) finite
        w = wsum / n
        mu = (resp * x[:, None]).sum(axis=0) / wsum
        var = (resp * (x[:, None] - mu[None, :]) ** 2).sum(axis=0) / wsum
        sd = np.maximum(np.sqrt(var), floor)
        if not math.isfinite(ll) or abs(ll - ll_prev) < 1e-8:
            tol_reached = math.isfinite(ll)
            break
        ll_prev = ll
    return w, mu, sd, ll, tol_reached, iterations


def _init_masks(x: np.ndarray, kmeans_split: int) -> list[np.ndarray]:
    """Deterministic EM starting memberships.

    Contiguous splits (the exact 2-means one plus fixed quantiles) find
    balanced two-mode fits. Narrow windows around the heaviest repeated
    values are added because curvatures are often integer-valued: a
    component locked to a heavy atom is frequently the true likelihood
    optimum, and no contiguous split can reach that basin.
    """
    n = x.size
    masks = []
    splits = {kmeans_split}
    splits.update(min(max(int(f * n), 1), n - 1) for f in _INIT_FRACTIONS)
    for s in sorted(splits):
        m = np.zeros(n, dtype=bool)
        m[s:] = True
        masks.append(m)
    vals, counts = np.unique(x, return_counts=True)
    repeated = counts >= 2  # a value seen once is not an atom
    heavy = vals[repeated][np.argsort(-counts[repeated], kind="stable")[:3]]
    widths = (0.0, (x[-1] - x[0]) / 64.0)
    for atom in heavy:
        for h in widths:
            m = np.abs(x - atom) <= h
            if 0 < m.sum() < n:
                masks.append(m)
    return masks


def fit_two_gaussians(values, seed: int | None = None) -> ThresholdFit:
    """Fit a 2-component Gaussian mixture by EM and locate the boundary.

    EM is restarted from several deterministic initializations (see
    _init_masks) and the highest-likelihood fit with both weights >= 1%
    wins; a single 2-means start reliably strands EM in a local optimum
    when one mode carries most of the mass. The procedure is therefore
    deterministic; the seed parameter is accepted for interface stability
    and is not consumed.

    Each run does at most 200 iterations to an absolute log-likelihood
    tolerance of 1e-8, with a deviation floor of 1e-6 times the data
    range (the floor keeps EM finite on repeated values; a component
    resting on the floor is a legitimate fit of an atom). If every
    restart collapses a weight, the fit is flagged unconverged and the
    boundary falls back to the midpoint of the two 2-means centers,
    reported together with those cluster shapes.
    """
    x = np.sort(np.asarray(list(values), dtype=float))
    n = x.size
    if np.unique(x).size < 4:
        raise InsufficientDataError("need at least 4 distinct values")
    floor = 1e-6 * (x[-1] - x[0])
    kmeans_split = _best_split(x)
    best = None
    for mask in _init_masks(x, kmeans_split):
        out = _run_em(x, mask, floor)
        if float(out[0].min()) < 0.01:  # collapsed component
            continue
        if best is None or out[3] > best[3]:
            best = out
    if best is None:
        parts = (x[:kmeans_split], x[kmeans_split:])
        c1, c2 = float(parts[0].mean()), float(parts[1].mean())
        s1 = max(float(parts[0].std()), floor)
        s2 = max(float(parts[1].std()), floor)
        return ThresholdFit(c1, s1, c2, s2, (c1 + c2) / 2, False, 200)
    w, mu, sd, _, tol_reached, iterations = best
    order = np.argsort(mu)
    mu, sd = mu[order], sd[order]
    return ThresholdFit(
        float(mu[0]), float(sd[0]), float(mu[1]), float(sd[1]),
        float(boundary(mu[0], sd[0], mu[1], sd[1])),
        tol_reached, iterations,
    )


def histogram(values, bins: int) -> list[tuple[float, int]]:
    """Equal-width bins spanning [min, max]; counts sum to len(values)."""
    vals = np.asarray(list(values), dtype=float)
    if vals.size == 0:
        raise ValueError("histogram of empty input")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    lo, hi = float(vals.min()), float(vals.max())
    if lo == hi:
        return [(lo, int(vals.size))]
    counts, edges = np.histogram(vals, bins=bins, range=(lo, hi))
    return [(float(edges[i]), int(counts[i])) for i in range(bins)]
