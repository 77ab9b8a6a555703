"""Experiment runners.

Every sampling experiment takes (seed, jobs) and spawns one child RNG
stream per sample from a single SeedSequence, so results are identical
bit for bit whatever the parallelism degree.  Exact quantities (the m and
v constants, character ratios, corner weights) are computed in rational
arithmetic and only converted to floats inside the reported statistics.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .._util import as_fraction
from ..characters import (
    Permutation,
    all_permutations,
    parse_permutation,
    reduced_cycle_type,
    support_size,
)
from ..jm_algebra import normalized_character_padded
from ..partitions import Partition, corner_dimension_ratios, enumerate_partitions, subpartitions
from ..plancherel import (
    cotransition_distribution,
    plancherel_ensemble,
    sample_shape_rsk,
    sup_distance_to_semicircle,
    transition_distribution,
)
from ..seminormal import (
    RATIONAL,
    mv_constants,
    partial_sum,
    ts_expansion_coefficients,
)
from . import identities
from .stats import (
    char_limit_samples,
    char_limit_variance,
    ks_against_normal,
    ks_two_sample,
    mean_and_variance,
    pearson,
)


def _seeded_map(worker, tasks, jobs: int):
    if jobs <= 1:
        return [worker(t) for t in tasks]
    chunk = max(1, len(tasks) // (8 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=chunk))


def _spawned(seed: int, count: int):
    return np.random.SeedSequence(seed).spawn(count)


# ---------------------------------------------------------------------------
# exact constant tables


@dataclass(frozen=True)
class MVRecord:
    sigma: Permutation
    m: Fraction
    v: Fraction


def mv_table(r: int = 4) -> list[MVRecord]:
    """Exact (m, v) constants of the rational-form total sum for every
    permutation of S_r, in one-line lexicographic order."""
    if r > 6:
        raise ValueError("exact table capped at r = 6")
    return [
        MVRecord(sigma, *mv_constants(sigma, r)) for sigma in all_permutations(r)
    ]


def adjacent_transposition_mv_check(r: int) -> dict:
    """The last adjacent transposition (r-1, r) has m > 0 and v = 1."""
    if not 3 <= r <= 6:
        raise ValueError("r must lie in 3..6")
    sigma = Permutation.from_cycles(r, (r - 1, r))
    m, v = mv_constants(sigma, r)
    return {
        "r": r,
        "sigma": sigma,
        "m": m,
        "v": v,
        "ok": m > 0 and v == 1,
    }


# ---------------------------------------------------------------------------
# sampling workers (module level so they pickle under process pools)


def _rng_for(seed_seq) -> np.random.Generator:
    return np.random.default_rng(seed_seq)


def _worker_char(task):
    n, seed_seq, rho_parts = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    out = []
    for parts in rho_parts:
        rho = Partition(parts)
        chi = normalized_character_padded(lam, rho)
        out.append(float(chi) * n ** (rho.n / 2.0))
    return out


def _worker_ts(task):
    n, seed_seq, coeff_payload = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    out = []
    for items in coeff_payload:
        total = Fraction(0)
        for parts, coeff in items:
            total += coeff * normalized_character_padded(lam, Partition(parts))
        out.append(total)
    return out


def _worker_main_term(task):
    n, seed_seq, payload = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    subs = [mu for mu, _ in subpartitions(lam)]
    weights = corner_dimension_ratios(lam)
    out = []
    for red_parts, u, coeff_items in payload:
        red = Partition(red_parts)
        acc = Fraction(0)
        mt = Fraction(0)
        ms = Fraction(0)
        for mu, w in zip(subs, weights, strict=True):
            if u < 1 and acc + w > u:
                break
            acc += w
            mt += w * normalized_character_padded(mu, red)
            ts = Fraction(0)
            for parts, coeff in coeff_items:
                ts += coeff * normalized_character_padded(mu, Partition(parts))
            ms += w * ts
        chi = normalized_character_padded(lam, red)
        out.append((mt, ms, chi))
    return out


def _worker_partial_sum(task):
    n, seed_seq, payload = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    out = []
    for images, u, max_dim in payload:
        sigma = Permutation(images)
        out.append(partial_sum(lam, sigma, u, RATIONAL, max_dim))
    return out


def _worker_cotransition(task):
    n, seed_seq = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    return sup_distance_to_semicircle(cotransition_distribution(lam), n)


def _worker_conjecture(task):
    n, seed_seq, alpha, s = task
    lam = sample_shape_rsk(n, _rng_for(seed_seq))
    return _threshold_exceeded(lam, alpha, s)


# ---------------------------------------------------------------------------
# central limit experiments


def _reduced_parts(sigma: Permutation) -> tuple[int, ...]:
    return reduced_cycle_type(sigma.cycle_type()).parts


def clt_characters(
    n: int,
    samples: int,
    sigmas: list[Permutation],
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Scaled character ratios n^{wt/2} * chi-hat at the reduced cycle
    types of the given permutations, against their Hermite limit laws."""
    if n < 100:
        raise ValueError("asymptotic probe needs n >= 100")
    rhos = [Partition(_reduced_parts(s)) for s in sigmas]
    children = _spawned(seed, samples + 1)
    tasks = [(n, c, tuple(r.parts for r in rhos)) for c in children[:samples]]
    results = _seeded_map(_worker_char, tasks, jobs)
    ref_rng = np.random.default_rng(children[samples])
    rows = []
    for i, rho in enumerate(rhos):
        values = [res[i] for res in results]
        mean, var = mean_and_variance(values)
        limit_var = char_limit_variance(rho) if rho.n else 0
        if len(rho) == 1:
            ks = ks_against_normal(values, math.sqrt(rho[0]))
        elif rho.n == 0:
            ks = 0.0
        else:
            reference = char_limit_samples(
                rho, ref_rng, max(4 * samples, 4000)
            )
            ks = ks_two_sample(values, reference)
        rows.append(
            {
                "rho": str(rho) if rho.n else "1",
                "weight": rho.n,
                "mean": mean,
                "variance": var,
                "limit_variance": limit_var,
                "ks": ks,
            }
        )
    return {
        "experiment": "clt-characters",
        "config": {"n": n, "samples": samples, "seed": seed},
        "rows": rows,
    }


def _coeff_payload(sigma: Permutation):
    if support_size(sigma.cycle_type()) == 0:
        return ((tuple(), Fraction(1)),)
    coeffs = ts_expansion_coefficients(sigma)
    return tuple(
        (reduced_cycle_type(t).parts, c) for t, c in sorted(coeffs.items(), key=lambda kv: kv[0].parts)
    )


def clt_total_sum(
    n_values: list[int],
    samples: int,
    sigmas: list[Permutation],
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Fluctuations of the rational-form total sum around its mean
    constant m: the statistic n*(TS - m) has limit N(0, 2 v^2).

    The transposition term drives the fluctuation, so the n scaling is the
    transposition weight, independent of sigma.  For v = 0 the statistic
    degenerates; the reported max |sqrt(n)*(TS - m)| then shrinks along an
    n ladder.
    """
    payload = tuple(_coeff_payload(s) for s in sigmas)
    constants = [mv_constants(s) if s.support() else (Fraction(1), Fraction(0)) for s in sigmas]
    rows = []
    for n in n_values:
        children = _spawned(seed, samples)
        tasks = [(n, c, payload) for c in children]
        results = _seeded_map(_worker_ts, tasks, jobs)
        for i, sigma in enumerate(sigmas):
            m, v = constants[i]
            scaled = [float(n * (res[i] - m)) for res in results]
            rootn = [float(res[i] - m) * math.sqrt(n) for res in results]
            mean, var = mean_and_variance(scaled)
            ks = (
                ks_against_normal(scaled, math.sqrt(2.0) * abs(float(v)))
                if v != 0
                else float("nan")
            )
            rows.append(
                {
                    "n": n,
                    "sigma": str(sigma),
                    "m": m,
                    "v": v,
                    "mean_scaled": mean,
                    "variance_scaled": var,
                    "limit_variance": 2 * float(v) ** 2,
                    "ks": ks,
                    "max_abs_rootn": max(abs(x) for x in rootn),
                }
            )
    return {
        "experiment": "clt-total-sum",
        "config": {
            "n": list(n_values),
            "samples": samples,
            "seed": seed,
            "sigma": [str(s) for s in sigmas],
        },
        "rows": rows,
    }


def main_term_experiment(
    n: int,
    samples: int,
    pairs: list[tuple[Permutation, Fraction]],
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Main terms of the partial trace and partial sum at level u.

    The scaled main term of the partial trace tracks u times the scaled
    full character ratio (correlation near 1, variance near u^2 times the
    character limit variance); the main term of the partial sum has mean
    near u*m and n-scaled fluctuation variance near 2 u^2 v^2.
    """
    payload = tuple(
        (_reduced_parts(sigma), as_fraction(u), _coeff_payload(sigma))
        for sigma, u in pairs
    )
    children = _spawned(seed, samples)
    tasks = [(n, c, payload) for c in children]
    results = _seeded_map(_worker_main_term, tasks, jobs)
    rows = []
    for i, (sigma, u) in enumerate(pairs):
        u = as_fraction(u)
        m, v = (
            mv_constants(sigma)
            if sigma.support()
            else (Fraction(1), Fraction(0))
        )
        wt = support_size(sigma.cycle_type())
        scale = n ** (wt / 2.0)
        mt_stat = [float(res[i][0]) * scale for res in results]
        chi_stat = [float(res[i][2]) * scale for res in results]
        ms_mean = mean_and_variance([float(res[i][1]) for res in results])[0]
        ms_scaled = [float(n * (res[i][1] - u * m)) for res in results]
        _, ms_var = mean_and_variance(ms_scaled)
        mt_mean, mt_var = mean_and_variance(mt_stat)
        limit = char_limit_variance(Partition(_reduced_parts(sigma))) if wt else 0
        corr = (
            pearson(mt_stat, chi_stat) if wt and u != 0 else float("nan")
        )
        rows.append(
            {
                "n": n,
                "sigma": str(sigma),
                "u": u,
                "mt_mean": mt_mean,
                "mt_variance": mt_var,
                "mt_limit_variance": float(u) ** 2 * limit,
                "mt_char_correlation": corr,
                "ms_mean": ms_mean,
                "ms_mean_limit": u * m,
                "ms_variance_scaled": ms_var,
                "ms_limit_variance": 2 * float(u) ** 2 * float(v) ** 2,
            }
        )
    return {
        "experiment": "main-term",
        "config": {"n": n, "samples": samples, "seed": seed},
        "rows": rows,
    }


def partial_sum_lln(
    n_values: list[int],
    samples: int,
    pairs: list[tuple[Permutation, Fraction]],
    seed: int = 0,
    jobs: int = 1,
    max_dim: int = 64,
) -> dict:
    """Law of large numbers for the partial sum: the empirical mean of
    PS_u approaches u*m and the spread shrinks along the n ladder.

    Small max_dim keeps the recursion matrix-free until tiny shapes.
    """
    rows = []
    for n in n_values:
        children = _spawned(seed, samples)
        payload = tuple(
            (sigma.extend(max(sigma.n, 2)).images, as_fraction(u), max_dim)
            for sigma, u in pairs
        )
        tasks = [(n, c, payload) for c in children]
        results = _seeded_map(_worker_partial_sum, tasks, jobs)
        for i, (sigma, u) in enumerate(pairs):
            u = as_fraction(u)
            m, _ = (
                mv_constants(sigma)
                if sigma.support()
                else (Fraction(1), Fraction(0))
            )
            values = [res[i] for res in results]
            mean, var = mean_and_variance(values)
            rows.append(
                {
                    "n": n,
                    "sigma": str(sigma),
                    "u": u,
                    "mean": mean,
                    "target": u * m,
                    "abs_error": abs(mean - float(u * m)),
                    "std": math.sqrt(var),
                }
            )
    return {
        "experiment": "partial-sum-lln",
        "config": {
            "n": list(n_values),
            "samples": samples,
            "seed": seed,
            "max_dim": max_dim,
        },
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# conjecture probe


def _max_sub_ratio(lam: Partition, s: int) -> Fraction:
    """Largest dim(mu)/dim(lam) over subpartitions mu obtained by
    removing s boxes."""
    if s == 1:
        return max(corner_dimension_ratios(lam))
    level = {lam: Fraction(1)}
    for _ in range(s):
        nxt: dict[Partition, Fraction] = {}
        for shape, ratio in level.items():
            for (mu, _), w in zip(
                subpartitions(shape), corner_dimension_ratios(shape), strict=True
            ):
                cur = ratio * w
                if mu not in nxt or cur > nxt[mu]:
                    nxt[mu] = cur
        level = nxt
    return max(level.values())


def _threshold_exceeded(lam: Partition, alpha: Fraction, s: int) -> bool:
    """Is max dim(mu)/dim(lam) > n^(-alpha*s)?  Exact: with alpha = a/b
    the test is ratio^b * n^(a*s) > 1."""
    n = lam.n
    ratio = _max_sub_ratio(lam, s)
    return ratio**alpha.denominator * n ** (alpha.numerator * s) > 1


def conjecture_probe(
    n_values: list[int],
    alpha,
    s: int = 1,
    mode: str = "exact",
    samples: int = 0,
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Plancherel probability that some depth-s subpartition keeps a
    dimension ratio above n^(-alpha*s)."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    rows = []
    for n in n_values:
        if s >= n:
            raise ValueError(f"s = {s} too deep for n = {n}")
        if mode == "exact":
            if n > 40:
                raise ValueError("exact mode capped at n = 40")
            prob = Fraction(0)
            for lam, pmf in plancherel_ensemble(n):
                if _threshold_exceeded(lam, alpha, s):
                    prob += pmf
            rows.append(
                {"n": n, "probability": prob, "probability_float": float(prob)}
            )
        elif mode == "mc":
            children = _spawned(seed, samples)
            tasks = [(n, c, alpha, s) for c in children]
            hits = sum(_seeded_map(_worker_conjecture, tasks, jobs))
            rows.append(
                {
                    "n": n,
                    "probability": Fraction(hits, samples),
                    "probability_float": hits / samples,
                }
            )
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return {
        "experiment": "conjecture",
        "config": {
            "n": list(n_values),
            "alpha": alpha,
            "s": s,
            "mode": mode,
            "samples": samples,
            "seed": seed,
        },
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# co-transition vs semicircle


def cotransition_semicircle(
    n_values: list[int],
    samples: int = 50,
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Sup distance between the scaled co-transition CDF and the
    semicircle CDF.  samples = 0 switches to the exact ensemble average,
    available for small n."""
    rows = []
    for n in n_values:
        if samples == 0:
            if n > 12:
                raise ValueError("exact ensemble average capped at n = 12")
            dist = 0.0
            for lam, pmf in plancherel_ensemble(n):
                dist += float(pmf) * sup_distance_to_semicircle(
                    cotransition_distribution(lam), n
                )
            rows.append({"n": n, "mean_distance": dist, "samples": 0})
        else:
            children = _spawned(seed, samples)
            tasks = [(n, c) for c in children]
            values = _seeded_map(_worker_cotransition, tasks, jobs)
            mean, var = mean_and_variance(values)
            rows.append(
                {
                    "n": n,
                    "mean_distance": mean,
                    "max_distance": max(values),
                    "std": math.sqrt(var),
                    "samples": samples,
                }
            )
    return {
        "experiment": "cotransition",
        "config": {"n": list(n_values), "samples": samples, "seed": seed},
        "rows": rows,
    }


def single_column_distances(n: int) -> dict:
    """Degenerate sanity fixture: the single-column shape is as far from
    Plancherel-typical as possible.  Its co-transition step sits at depth
    -(n-1)/sqrt(n), giving sup distance exactly 1; its transition law puts
    weight n/(n+1) at height about 0, giving distance near 1/2."""
    lam = Partition([1] * n)
    return {
        "cotransition": sup_distance_to_semicircle(
            cotransition_distribution(lam), n
        ),
        "transition": sup_distance_to_semicircle(
            transition_distribution(lam), n
        ),
    }


# ---------------------------------------------------------------------------
# identity suite


def identity_suite(n_max: int = 8, seed: int = 0) -> dict:
    """Finite identity families; every row must pass."""
    rows = [
        {"family": name, "ok": ok, "detail": detail}
        for name, ok, detail in identities.run_all(n_max, seed)
    ]
    return {
        "experiment": "identities",
        "config": {"n_max": n_max, "seed": seed},
        "rows": rows,
    }
