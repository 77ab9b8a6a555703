"""Seminormal representation matrices and their trace and sum functionals.

Two normalizations of the same representation are provided.

* "orthogonal": off-diagonal entries sqrt(1 - a^2), matrices real
  orthogonal.  This is the form used for printed-matrix fixtures.
* "rational": off-diagonal entry 1 - a taken from the row's own diagonal
  coefficient.  Every entry is rational, so matrices, total sums, and the
  derived constants can be exact.  The two forms are conjugate by a
  diagonal matrix, hence share diagonals, traces, and spectra, but NOT
  entry sums: the classical rational-constant tables only come out of the
  rational form, which is why sum functionals default to it.

The basis is ordered by the last-letter order of tableaux.py throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np

from ._util import as_fraction
from .characters import (
    Permutation,
    character,
    class_size,
    normalized_character,
    reduced_cycle_type,
)
from .jm_algebra import normalized_character_padded
from .partitions import Partition, corner_dimension_ratios, subpartitions
from .plancherel import plancherel_ensemble
from .tableaux import adjacent_swap, standard_tableaux, tableau_index

ORTHOGONAL = "orthogonal"
RATIONAL = "rational"

DEFAULT_MAX_DIM = 4096


@dataclass(frozen=True)
class RepMatrix:
    shape: Partition
    entries: np.ndarray
    form: str

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def entry_sum(self) -> float:
        return float(self.entries.sum())


@cache
def _generator_data(parts: tuple[int, ...], k: int):
    """Per tableau: the diagonal coefficient of the k-th generator and the
    index of the swapped tableau (own index when the swap is undefined)."""
    shape = Partition(parts)
    tabs = standard_tableaux(shape)
    index = tableau_index(shape)
    diag = []
    partner = []
    for i, t in enumerate(tabs):
        gap = t.content_of(k + 1) - t.content_of(k)
        diag.append(Fraction(1, gap))
        other = adjacent_swap(t, k)
        partner.append(index[other] if other is not None else i)
    return tuple(diag), tuple(partner)


def _check_generator_index(shape: Partition, k: int) -> None:
    if not 1 <= k <= shape.n - 1:
        raise ValueError(f"generator index {k} outside 1..{shape.n - 1}")


def _float_generator_arrays(shape: Partition, k: int, form: str):
    diag, partner = _generator_data(shape.parts, k)
    a = np.array([float(x) for x in diag])
    p = np.array(partner)
    if form == ORTHOGONAL:
        cross = np.sqrt(1.0 - a * a)
    elif form == RATIONAL:
        cross = np.where(p != np.arange(len(a)), 1.0 + a, 0.0)
    else:
        raise ValueError(f"unknown form {form!r}")
    cross = np.where(p == np.arange(len(a)), 0.0, cross)
    return a, p, cross


def adjacent_matrix(shape: Partition, k: int, form: str = ORTHOGONAL) -> RepMatrix:
    """Matrix of the adjacent transposition (k, k+1).

    Diagonal entry at T: 1 / (content of k+1 minus content of k).  The
    entry toward the swapped tableau is sqrt(1 - a^2) or 1 - a depending on
    the form; rows without a swap partner carry only their +-1 diagonal.
    """
    _check_generator_index(shape, k)
    a, p, cross = _float_generator_arrays(shape, k, form)
    d = len(a)
    m = np.zeros((d, d))
    m[np.arange(d), np.arange(d)] = a
    has = p != np.arange(d)
    rows = np.arange(d)[has]
    if form == ORTHOGONAL:
        m[rows, p[has]] = cross[has]
    else:
        m[rows, p[has]] = 1.0 - a[has]
    return RepMatrix(shape, m, form)


def _word_for(shape: Partition, sigma: Permutation) -> list[int]:
    if sigma.n > shape.n:
        raise ValueError(f"{sigma!r} moves points beyond {shape.n}")
    return sigma.extend(shape.n).reduced_word()


def _apply_generator_floats(m: np.ndarray, shape: Partition, k: int, form: str):
    """Right-multiply m by the k-th generator in place-free column form."""
    a, p, cross = _float_generator_arrays(shape, k, form)
    return m * a[None, :] + m[:, p] * cross[None, :]


def rep_matrix(
    shape: Partition,
    sigma: Permutation,
    form: str = ORTHOGONAL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> RepMatrix:
    """Representation matrix as the product of generator matrices along a
    reduced word of sigma; sigma may move fewer points than |shape|."""
    d = shape.dimension
    if d > max_dim:
        raise ValueError(
            f"dim {d} exceeds the dense cap {max_dim}; "
            "use the sum/trace functionals, which decompose instead"
        )
    word = _word_for(shape, sigma)
    m = np.eye(d)
    for k in word:
        m = _apply_generator_floats(m, shape, k, form)
    return RepMatrix(shape, m, form)


def exact_rep_matrix(
    shape: Partition, sigma: Permutation, max_dim: int = DEFAULT_MAX_DIM
) -> tuple[tuple[Fraction, ...], ...]:
    """Rational-form matrix with exact entries, rows as tuples."""
    d = shape.dimension
    if d > max_dim:
        raise ValueError(f"dim {d} exceeds the dense cap {max_dim}")
    rows = [[Fraction(i == j) for j in range(d)] for i in range(d)]
    for k in _word_for(shape, sigma):
        rows = _apply_generator_exact(rows, shape, k)
    return tuple(tuple(row) for row in rows)


def _apply_generator_exact(rows, shape: Partition, k: int):
    diag, partner = _generator_data(shape.parts, k)
    d = len(diag)
    cross = [
        Fraction(0) if partner[j] == j else 1 + diag[j] for j in range(d)
    ]
    out = []
    for row in rows:
        out.append(
            [
                row[j] * diag[j] + row[partner[j]] * cross[j]
                for j in range(d)
            ]
        )
    return out


def all_exact_matrices(shape: Partition) -> dict[Permutation, tuple]:
    """Rational-form matrices for the whole group S_{|shape|}.

    Breadth-first over the Cayley graph of adjacent transpositions, one
    sparse column pass per edge, so every matrix is built along a shortest
    word.
    """
    n = shape.n
    d = shape.dimension
    identity = Permutation.identity(n)
    eye = [[Fraction(i == j) for j in range(d)] for i in range(d)]
    out = {identity: eye}
    frontier = [identity]
    gens = [
        (k, Permutation.from_cycles(n, (k, k + 1))) for k in range(1, n)
    ]
    while frontier:
        new_frontier = []
        for sigma in frontier:
            base = out[sigma]
            for k, s in gens:
                tau = sigma * s
                if tau in out:
                    continue
                out[tau] = _apply_generator_exact(base, shape, k)
                new_frontier.append(tau)
        frontier = new_frontier
    return {
        sigma: tuple(tuple(row) for row in m) for sigma, m in out.items()
    }


def dump_matrix(entries) -> str:
    """One row per line, entries with 17 significant digits."""
    if isinstance(entries, RepMatrix):
        entries = entries.entries
    return "\n".join(
        " ".join(f"{float(x):.17g}" for x in row) for row in entries
    )


def _floor_index(u: Fraction, d: int) -> int:
    """Rank cutoff for level u: the largest i with i <= u * d."""
    return math.floor(u * d)


def _check_unit(u: Fraction) -> Fraction:
    if not 0 <= u <= 1:
        raise ValueError(f"u must lie in [0, 1]: {u}")
    return u


# ---------------------------------------------------------------------------
# total sum and its character expansion


def total_sum_exact(
    shape: Partition, sigma: Permutation, max_dim: int = DEFAULT_MAX_DIM
) -> Fraction:
    """Sum of all rational-form entries over the dimension."""
    m = exact_rep_matrix(shape, sigma, max_dim)
    return Fraction(sum(sum(row) for row in m), shape.dimension)


def _top_moved(sigma: Permutation) -> int:
    sup = sigma.support()
    return sup[-1] if sup else 0


@cache
def _ts_coefficients(images: tuple[int, ...]) -> dict[Partition, Fraction]:
    """Coefficients C_t of the expansion of the rational-form total sum
    over normalized characters: TS(sigma) on any shape containing S_r
    equals sum over t of C_t * (character ratio at t padded with 1s).

    C_t = |class of t| * E[chi-hat at t * TS(sigma)] over the Plancherel
    ensemble at the level r where sigma lives.
    """
    sigma = Permutation(images)
    r = sigma.n
    values = {}
    for nu, p in plancherel_ensemble(r):
        values[nu] = (p, total_sum_exact(nu, sigma))
    out = {}
    for t in (nu for nu, _ in plancherel_ensemble(r)):
        c = sum(
            (
                p * normalized_character(nu, t) * ts
                for nu, (p, ts) in values.items()
            ),
            Fraction(0),
        )
        c *= class_size(t)
        if c != 0:
            out[t] = c
    return out


def ts_expansion_coefficients(
    sigma: Permutation, r: int | None = None
) -> dict[Partition, Fraction]:
    """Character-expansion coefficients of the total sum of sigma.

    r defaults to the largest moved point; any r >= that (and >= 1) gives
    an expansion valid on all shapes of size >= r.
    """
    top = _top_moved(sigma)
    if r is None:
        r = max(top, 1)
    if r < top:
        raise ValueError(f"sigma moves {top}, beyond level {r}")
    if sigma.n < r:
        images = sigma.extend(r).images
    else:
        images = sigma.images[:r]  # moved points all lie within 1..r
    return _ts_coefficients(images)


def total_sum_via_expansion(shape: Partition, sigma: Permutation) -> Fraction:
    """Rational-form total sum evaluated without any matrix."""
    if _top_moved(sigma) == 0:
        return Fraction(1)
    total = Fraction(0)
    for t, c in ts_expansion_coefficients(sigma).items():
        total += c * normalized_character_padded(shape, reduced_cycle_type(t))
    return total


def mv_constants(sigma: Permutation, r: int | None = None) -> tuple[Fraction, Fraction]:
    """The law-of-large-numbers constant m and fluctuation constant v of
    the rational-form total sum: the coefficients of the identity class
    and of the transposition class in the character expansion."""
    top = _top_moved(sigma)
    r = r if r is not None else max(top, 2)
    coeffs = ts_expansion_coefficients(sigma, r)
    ones = Partition([1] * r)
    swap = Partition([2] + [1] * (r - 2))
    return coeffs.get(ones, Fraction(0)), coeffs.get(swap, Fraction(0))


def total_sum(
    shape: Partition,
    sigma: Permutation,
    form: str = RATIONAL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> float:
    """Sum of all entries over the dimension.

    Shapes over the dense cap are handled through the character expansion,
    which exists for the rational form only.
    """
    if shape.dimension <= max_dim:
        return rep_matrix(shape, sigma, form, max_dim).entry_sum() / shape.dimension
    if form != RATIONAL:
        raise ValueError("entry sums past the dense cap exist only in rational form")
    return float(total_sum_via_expansion(shape, sigma))


# ---------------------------------------------------------------------------
# partial traces and sums


def _generator_block_sum(shape: Partition, k: int, b: int, form: str) -> float:
    """Sum of the leading b x b block of one generator without the matrix."""
    diag, partner = _generator_data(shape.parts, k)
    total = 0.0
    for i in range(b):
        a = float(diag[i])
        total += a
        j = partner[i]
        if j != i and j < b:
            total += math.sqrt(1.0 - a * a) if form == ORTHOGONAL else 1.0 - a
    return total


def partial_trace(
    shape: Partition,
    sigma: Permutation,
    u,
    max_dim: int = DEFAULT_MAX_DIM,
) -> float:
    """Sum of the first floor(u * dim) diagonal entries over the dimension.

    The diagonal agrees between the two forms, so no form argument exists.
    Past the dense cap the value is assembled from the one-box restriction:
    full blocks contribute character ratios, the cut block recurses.
    """
    u = _check_unit(as_fraction(u))
    d = shape.dimension
    b = _floor_index(u, d)
    if b == 0:
        return 0.0
    if u == 1:
        return float(
            normalized_character_padded(
                shape, reduced_cycle_type(sigma.cycle_type())
            )
        )
    if d <= max_dim:
        m = rep_matrix(shape, sigma, RATIONAL, max_dim)
        return float(np.diagonal(m.entries)[:b].sum()) / d
    if _top_moved(sigma) >= shape.n:
        raise ValueError(
            f"dim {d} exceeds the cap and sigma moves the last point of "
            f"S_{shape.n}, so the restriction step does not apply"
        )
    split = _bar_split(shape, u)
    red = reduced_cycle_type(sigma.cycle_type())
    main = Fraction(0)
    for mu, w in split.full_blocks:
        main += w * normalized_character_padded(mu, red)
    total = float(main)
    if split.bar_u > 0:
        total += float(split.bar_weight) * partial_trace(
            split.bar_shape, sigma, split.bar_u, max_dim
        )
    return total


def partial_trace_exact(
    shape: Partition,
    sigma: Permutation,
    u,
    max_dim: int = DEFAULT_MAX_DIM,
) -> Fraction:
    """Exact partial trace via the rational-form matrix."""
    u = _check_unit(as_fraction(u))
    d = shape.dimension
    b = _floor_index(u, d)
    m = exact_rep_matrix(shape, sigma, max_dim)
    return Fraction(sum(m[i][i] for i in range(b)), d)


def partial_sum(
    shape: Partition,
    sigma: Permutation,
    u,
    form: str = RATIONAL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> float:
    """Sum of the leading floor(u*dim)-square block over the dimension.

    Past the dense cap (rational form only) full one-box-restriction
    blocks contribute their total sums via the character expansion and the
    cut block recurses, mirroring the partial-trace assembly.
    """
    u = _check_unit(as_fraction(u))
    d = shape.dimension
    b = _floor_index(u, d)
    if b == 0:
        return 0.0
    word = _word_for(shape, sigma)
    if not word:
        return float(Fraction(b, d))
    if u == 1:
        return total_sum(shape, sigma, form, max_dim)
    if d <= max_dim:
        if len(word) == 1:
            return _generator_block_sum(shape, word[0], b, form) / d
        m = rep_matrix(shape, sigma, form, max_dim)
        return float(m.entries[:b, :b].sum()) / d
    if form != RATIONAL:
        raise ValueError("block sums past the dense cap exist only in rational form")
    if _top_moved(sigma) >= shape.n:
        raise ValueError(
            f"dim {d} exceeds the cap and sigma moves the last point of "
            f"S_{shape.n}, so the restriction step does not apply"
        )
    split = _bar_split(shape, u)
    main = Fraction(0)
    for mu, w in split.full_blocks:
        main += w * total_sum_via_expansion(mu, sigma)
    total = float(main)
    if split.bar_u > 0:
        total += float(split.bar_weight) * partial_sum(
            split.bar_shape, sigma, split.bar_u, form, max_dim
        )
    return total


def partial_sum_exact(
    shape: Partition,
    sigma: Permutation,
    u,
    max_dim: int = DEFAULT_MAX_DIM,
) -> Fraction:
    u = _check_unit(as_fraction(u))
    d = shape.dimension
    b = _floor_index(u, d)
    m = exact_rep_matrix(shape, sigma, max_dim)
    return Fraction(sum(sum(row[:b]) for row in m[:b]), d)


def partial_sum_rect(
    shape: Partition,
    sigma: Permutation,
    u1,
    u2,
    form: str = RATIONAL,
    max_dim: int = DEFAULT_MAX_DIM,
) -> float:
    """Sum over the floor(u1*dim) x floor(u2*dim) leading rectangle."""
    u1 = _check_unit(as_fraction(u1))
    u2 = _check_unit(as_fraction(u2))
    d = shape.dimension
    b1 = _floor_index(u1, d)
    b2 = _floor_index(u2, d)
    if b1 == 0 or b2 == 0:
        return 0.0
    m = rep_matrix(shape, sigma, form, max_dim)
    return float(m.entries[:b1, :b2].sum()) / d


# ---------------------------------------------------------------------------
# decompositions along the one-box restriction


@dataclass(frozen=True)
class _BarSplit:
    full_blocks: tuple[tuple[Partition, Fraction], ...]
    bar_index: int  # 1-based
    bar_shape: Partition
    bar_weight: Fraction
    bar_u: Fraction
    covers_everything: bool


def _bar_split(shape: Partition, u: Fraction) -> _BarSplit:
    """Cut the basis at rank floor(u * dim) along the one-box restriction.

    Blocks are ordered by the content of the removed corner.  The cut
    lands inside block bar_index (1-based) at relative level bar_u, which
    the rank identity keeps in [0, 1).  u = 1 is the degenerate boundary:
    every block is full and the remainder is empty.
    """
    subs = subpartitions(shape)
    weights = corner_dimension_ratios(shape)
    if u == 1:
        mus = tuple((mu, w) for (mu, _), w in zip(subs, weights))
        last = len(subs)
        return _BarSplit(mus, last, subs[-1][0], weights[-1], Fraction(0), True)
    acc = Fraction(0)
    for j, ((mu, _), w) in enumerate(zip(subs, weights)):
        if acc + w > u:
            bar_u = (u - acc) / w
            full = tuple(
                (m, x) for (m, _), x in zip(subs[:j], weights[:j])
            )
            return _BarSplit(full, j + 1, mu, w, bar_u, False)
        acc += w
    raise AssertionError("cumulative corner weights failed to reach u < 1")


@dataclass(frozen=True)
class TraceDecomposition:
    """One restriction step of a partial trace or partial sum.

    main_terms lists (shape below, its weight, its functional value); the
    remainder is the cut block's functional at level bar_u, reported both
    bare and multiplied by its weight.  The weighted main terms plus the
    weighted remainder reassemble the original functional.
    """

    kind: str
    shape: Partition
    u: Fraction
    main_terms: tuple[tuple[Partition, Fraction, Fraction], ...]
    bar_index: int
    bar_u: Fraction
    bar_shape: Partition
    bar_weight: Fraction
    remainder_functional: float
    remainder_value: float

    @property
    def main_value(self) -> Fraction:
        return sum((w * v for _, w, v in self.main_terms), Fraction(0))

    @property
    def reconstructed(self) -> float:
        return float(self.main_value) + self.remainder_value


def _decompose(
    shape: Partition,
    sigma: Permutation,
    u,
    kind: str,
    max_dim: int,
) -> TraceDecomposition:
    u = _check_unit(as_fraction(u))
    if _top_moved(sigma) >= shape.n:
        raise ValueError(
            f"sigma touches point {shape.n}; the restriction step needs it fixed"
        )
    split = _bar_split(shape, u)
    red = reduced_cycle_type(sigma.cycle_type())
    if kind == "trace":
        value = lambda mu: normalized_character_padded(mu, red)
        tail = partial_trace
    else:
        value = lambda mu: total_sum_via_expansion(mu, sigma)
        tail = lambda mu, s, v, md: partial_sum(mu, s, v, RATIONAL, md)
    main = tuple((mu, w, value(mu)) for mu, w in split.full_blocks)
    if split.covers_everything or split.bar_u == 0:
        rem = 0.0
    else:
        rem = tail(split.bar_shape, sigma, split.bar_u, max_dim)
    return TraceDecomposition(
        kind=kind,
        shape=shape,
        u=u,
        main_terms=main,
        bar_index=split.bar_index,
        bar_u=split.bar_u,
        bar_shape=split.bar_shape,
        bar_weight=split.bar_weight,
        remainder_functional=rem,
        remainder_value=float(split.bar_weight) * rem
        if not split.covers_everything
        else 0.0,
    )


def decompose_partial_trace(
    shape: Partition, sigma: Permutation, u, max_dim: int = DEFAULT_MAX_DIM
) -> TraceDecomposition:
    """Split the partial trace at u into full restriction blocks plus the
    cut block: weighted character ratios plus a weighted smaller partial
    trace at the renormalized level."""
    return _decompose(shape, sigma, u, "trace", max_dim)


def decompose_partial_sum(
    shape: Partition, sigma: Permutation, u, max_dim: int = DEFAULT_MAX_DIM
) -> TraceDecomposition:
    """Same split for the block sum; full blocks contribute total sums."""
    return _decompose(shape, sigma, u, "sum", max_dim)


@dataclass(frozen=True)
class IteratedDecomposition:
    """s restriction steps unrolled from the top shape downward.

    levels holds (shape, level, weight of shape inside the top shape, main
    term value at that level); the terminal entry is the leftover partial
    trace/sum on the innermost shape.
    """

    kind: str
    shape: Partition
    u: Fraction
    levels: tuple[tuple[Partition, Fraction, Fraction, Fraction], ...]
    terminal_shape: Partition
    terminal_u: Fraction
    terminal_weight: Fraction
    terminal_functional: float

    @property
    def reconstructed(self) -> float:
        total = sum((w * v for _, _, w, v in self.levels), Fraction(0))
        return float(total) + float(self.terminal_weight) * self.terminal_functional


def iterated_decomposition(
    shape: Partition,
    sigma: Permutation,
    u,
    s: int,
    kind: str = "trace",
    max_dim: int = DEFAULT_MAX_DIM,
) -> IteratedDecomposition:
    """Unroll s one-box restriction steps of the partial trace (or sum)."""
    u = _check_unit(as_fraction(u))
    if s < 0:
        raise ValueError("s must be nonnegative")
    if shape.n - s <= _top_moved(sigma):
        raise ValueError(
            f"{s} steps from size {shape.n} would cut into the support of sigma"
        )
    levels = []
    current, level, weight = shape, u, Fraction(1)
    for _ in range(s):
        step = _decompose(current, sigma, level, kind, max_dim)
        levels.append((current, level, weight, step.main_value))
        if step.u == 1:
            weight = Fraction(0)
            current, level = step.bar_shape, Fraction(0)
        else:
            weight *= step.bar_weight
            current, level = step.bar_shape, step.bar_u
    if weight == 0 or level == 0:
        terminal = 0.0
    elif kind == "trace":
        terminal = partial_trace(current, sigma, level, max_dim)
    else:
        terminal = partial_sum(current, sigma, level, RATIONAL, max_dim)
    return IteratedDecomposition(
        kind=kind,
        shape=shape,
        u=u,
        levels=tuple(levels),
        terminal_shape=current,
        terminal_u=level,
        terminal_weight=weight,
        terminal_functional=terminal,
    )


# ---------------------------------------------------------------------------
# structural checks


def block_restriction_check(
    shape: Partition,
    sigma: Permutation,
    r: int | None = None,
    form: str = ORTHOGONAL,
    tol: float = 1e-9,
) -> bool:
    """Entries across different placements of r+1..n vanish, and each
    diagonal block is the matrix of sigma on the restricted shape."""
    from .tableaux import split_at

    if r is None:
        r = max(_top_moved(sigma), 1)
    if r >= shape.n:
        raise ValueError(f"need r < {shape.n}")
    m = rep_matrix(shape, sigma, form).entries
    tabs = standard_tableaux(shape)
    splits = [split_at(t, r) for t in tabs]
    small: dict[Partition, tuple] = {}
    for nu in {head.shape for head, _ in splits}:
        small[nu] = (rep_matrix(nu, sigma, form).entries, tableau_index(nu))
    for i, (head_i, tail_i) in enumerate(splits):
        for j, (head_j, tail_j) in enumerate(splits):
            if tail_i != tail_j:
                if m[i, j] != 0.0:
                    return False
                continue
            block, index = small[head_i.shape]
            if abs(m[i, j] - block[index[head_i], index[head_j]]) > tol:
                return False
    return True
