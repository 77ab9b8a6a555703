"""Statistical helpers: moments, KS distances, Hermite-built limit laws."""

from __future__ import annotations

import math

import numpy as np
from scipy import stats as _scipy_stats

from ..partitions import Partition


def mean_and_variance(xs) -> tuple[float, float]:
    """Sample mean and unbiased sample variance, compensated summation."""
    xs = [float(x) for x in xs]
    n = len(xs)
    if n == 0:
        raise ValueError("empty sample")
    mean = math.fsum(xs) / n
    if n == 1:
        return mean, 0.0
    var = math.fsum((x - mean) ** 2 for x in xs) / (n - 1)
    return mean, var


def pearson(xs, ys) -> float:
    mx, vx = mean_and_variance(xs)
    my, vy = mean_and_variance(ys)
    if vx == 0 or vy == 0:
        raise ValueError("constant sample has no correlation")
    n = len(xs)
    cov = math.fsum(
        (float(x) - mx) * (float(y) - my) for x, y in zip(xs, ys, strict=True)
    ) / (n - 1)
    return cov / math.sqrt(vx * vy)


def normal_cdf(x: float, scale: float = 1.0) -> float:
    return 0.5 * (1.0 + math.erf(x / (scale * math.sqrt(2.0))))


def ks_against_normal(xs, scale: float) -> float:
    """One-sample KS statistic against a centered normal of given sd."""
    res = _scipy_stats.kstest(np.asarray(xs, dtype=float), "norm", args=(0.0, scale))
    return float(res.statistic)


def ks_two_sample(xs, ys) -> float:
    res = _scipy_stats.ks_2samp(
        np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    )
    return float(res.statistic)


def hermite(m: int, x):
    """Probabilists' Hermite value from the three-term recurrence
    x*H_m = H_{m+1} + m*H_{m-1} with H_0 = 1, H_1 = x.

    Works elementwise on arrays.
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    prev = np.ones_like(np.asarray(x, dtype=float)) if not np.isscalar(x) else 1.0
    if m == 0:
        return prev
    cur = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    for k in range(1, m):
        prev, cur = cur, x * cur - k * prev
    return cur


def cycle_multiplicities(rho: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in rho:
        out[part] = out.get(part, 0) + 1
    return out


def char_limit_variance(rho: Partition) -> int:
    """Variance of the limit law of the scaled character ratio at a
    reduced cycle type: product of k^{m_k} * m_k! over cycle lengths."""
    if any(part == 1 for part in rho):
        raise ValueError("cycle type must be reduced (no fixed points)")
    out = 1
    for k, m in cycle_multiplicities(rho).items():
        out *= k**m * math.factorial(m)
    return out


def char_limit_samples(rho: Partition, rng, size: int) -> np.ndarray:
    """Draws from the limit law of the scaled character ratio: a product
    over cycle lengths k of k^{m_k/2} * H_{m_k}(xi_k), xi_k independent
    standard Gaussians."""
    if any(part == 1 for part in rho):
        raise ValueError("cycle type must be reduced (no fixed points)")
    out = np.ones(size)
    for k, m in sorted(cycle_multiplicities(rho).items()):
        xi = rng.standard_normal(size)
        out = out * (k ** (m / 2.0)) * hermite(m, xi)
    return out
