"""Plancherel measure, shape samplers, and corner-jump distributions.

The jump distribution of a shape puts mass on the contents of its
removable corners (restriction weights) or addable slots (induction
weights).  Both are encoded exactly; scaling by sqrt(n) happens only at
the float boundary where curves are compared.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .partitions import (
    Partition,
    corner_dimension_ratios,
    enumerate_partitions,
    growth_dimension_ratios,
    superpartitions,
)


def plancherel_pmf(shape: Partition) -> Fraction:
    """dim^2 / n! for the shape's symmetric group."""
    return Fraction(shape.dimension**2, math.factorial(shape.n))


def plancherel_ensemble(n: int) -> Iterator[tuple[Partition, Fraction]]:
    """All shapes of size n with their exact probabilities."""
    for shape in enumerate_partitions(n):
        yield shape, plancherel_pmf(shape)


def plancherel_expectation(n: int, f: Callable[[Partition], Fraction]) -> Fraction:
    """Exact mean of f over the ensemble at size n."""
    return sum((p * f(shape) for shape, p in plancherel_ensemble(n)), Fraction(0))


def sample_shape_rsk(n: int, rng) -> Partition:
    """Shape of the insertion tableau of a uniform word; row insertion only.

    Bumping preserves the row-by-row sorted order, so each step is a
    binary search plus one replacement.
    """
    rows: list[list[int]] = []
    for x in rng.permutation(n):
        x = int(x)
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            x, row[pos] = row[pos], x
            r += 1
    return Partition(len(row) for row in rows)


def sample_shape_growth(n: int, rng) -> Partition:
    """Grow a shape box by box using the induction weights.

    Slower than the insertion sampler but follows the defining measure on
    paths directly; the two must agree in distribution.
    """
    shape = Partition()
    for _ in range(n):
        supers = superpartitions(shape)
        weights = growth_dimension_ratios(shape)
        u = rng.random()
        acc = 0.0
        pick = len(supers) - 1
        for i, w in enumerate(weights):
            acc += float(w)
            if u < acc:
                pick = i
                break
        shape = supers[pick][0]
    return shape


@dataclass(frozen=True)
class StepDistribution:
    """Finitely supported distribution with exact atoms, sorted ascending."""

    positions: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]

    def cdf(self, x) -> Fraction:
        x = Fraction(x)
        total = Fraction(0)
        for p, w in zip(self.positions, self.weights):
            if p <= x:
                total += w
        return total

    def quantile(self, u) -> Fraction:
        """Smallest position where the CDF reaches u, for 0 < u <= 1."""
        u = Fraction(u)
        if not 0 < u <= 1:
            raise ValueError(f"u must be in (0, 1]: {u}")
        acc = Fraction(0)
        for p, w in zip(self.positions, self.weights):
            acc += w
            if acc >= u:
                return p
        return self.positions[-1]

    def mean(self) -> Fraction:
        return sum(
            (p * w for p, w in zip(self.positions, self.weights)), Fraction(0)
        )


def cotransition_distribution(shape: Partition) -> StepDistribution:
    """Removable-corner contents weighted by dimension ratios."""
    positions = tuple(
        Fraction(b.content) for b in shape.corners().removable
    )
    return StepDistribution(positions, corner_dimension_ratios(shape))


def transition_distribution(shape: Partition) -> StepDistribution:
    """Addable-slot contents weighted by induction dimension ratios."""
    positions = tuple(Fraction(b.content) for b in shape.corners().addable)
    return StepDistribution(positions, growth_dimension_ratios(shape))


def _corner_polys(shape: Partition, u: Fraction) -> tuple[Fraction, Fraction]:
    """Evaluate prod(u - addable contents) and prod(u - removable contents)."""
    data = shape.corners()
    top = math.prod((u - b.content for b in data.addable), start=Fraction(1))
    bottom = math.prod((u - b.content for b in data.removable), start=Fraction(1))
    return top, bottom


def stieltjes_cotransition(shape: Partition, u, scaled: bool = False):
    """Cauchy transform sum w_j / (u - y_j) of the corner-jump distribution.

    With scaled=True the atoms sit at y_j / sqrt(n) and the value is a
    float; otherwise the value is an exact Fraction.
    """
    dist = cotransition_distribution(shape)
    if scaled:
        s = math.sqrt(shape.n)
        return math.fsum(
            float(w) / (float(u) - float(p) / s)
            for p, w in zip(dist.positions, dist.weights)
        )
    u = Fraction(u)
    return sum(
        (w / (u - p) for p, w in zip(dist.positions, dist.weights)), Fraction(0)
    )


def stieltjes_cotransition_rational(shape: Partition, u, scaled: bool = False):
    """Same transform through the two corner polynomials: (u - P/Q) / n.

    Scaling by sqrt(n) turns the prefactor into 1: the scaled transform is
    exactly u - P(u)/Q(u) with both polynomials taken on scaled contents.
    """
    if scaled:
        s = math.sqrt(shape.n)
        data = shape.corners()
        top = math.prod(float(u) - b.content / s for b in data.addable)
        bottom = math.prod(float(u) - b.content / s for b in data.removable)
        return float(u) - top / bottom
    u = Fraction(u)
    top, bottom = _corner_polys(shape, u)
    return (u - top / bottom) / shape.n


def stieltjes_transition(shape: Partition, u, scaled: bool = False):
    """Cauchy transform of the slot-jump distribution."""
    dist = transition_distribution(shape)
    if scaled:
        s = math.sqrt(shape.n)
        return math.fsum(
            float(w) / (float(u) - float(p) / s)
            for p, w in zip(dist.positions, dist.weights)
        )
    u = Fraction(u)
    return sum(
        (w / (u - p) for p, w in zip(dist.positions, dist.weights)), Fraction(0)
    )


def stieltjes_transition_rational(shape: Partition, u, scaled: bool = False):
    """The slot-jump transform is exactly Q(u)/P(u), scaled or not."""
    if scaled:
        s = math.sqrt(shape.n)
        data = shape.corners()
        top = math.prod(float(u) - b.content / s for b in data.addable)
        bottom = math.prod(float(u) - b.content / s for b in data.removable)
        return bottom / top
    u = Fraction(u)
    top, bottom = _corner_polys(shape, u)
    return bottom / top


def semicircle_cdf(v: float) -> float:
    """Distribution function of the radius-2 semicircle law."""
    if v <= -2:
        return 0.0
    if v >= 2:
        return 1.0
    return 0.5 + v * math.sqrt(4 - v * v) / (4 * math.pi) + math.asin(v / 2) / math.pi


def sup_distance_to_semicircle(dist: StepDistribution, n: int) -> float:
    """Kolmogorov distance between the sqrt(n)-scaled step CDF and the
    semicircle law; the sup sits at a jump, so only jumps are checked."""
    s = math.sqrt(n)
    worst = 0.0
    acc = 0.0
    for p, w in zip(dist.positions, dist.weights):
        target = semicircle_cdf(float(p) / s)
        worst = max(worst, abs(acc - target))
        acc += float(w)
        worst = max(worst, abs(acc - target))
    return worst
