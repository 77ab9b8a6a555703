"""Partial permutations and Jucys-Murphy power sums.

A partial permutation is a bijection together with the finite point set it
is defined on; the set is part of the data, so (id, {1,2}) and (id, {})
are different terms.  Formal sums of these carry a product that extends
both bijections by fixed points onto the union of their sets.  Summing a
symmetric function of all Jucys-Murphy elements at any sufficiently large
level yields coefficients, in the orbit-sum basis, that do not depend on
the level; those universal coefficients convert content data of a shape
into normalized character values without touching n! anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from typing import Iterator, NamedTuple

from ._util import falling
from .characters import normalized_character, pad_cycle_type, z_value
from .partitions import Partition


class PartialPermutation(NamedTuple):
    points: tuple[int, ...]
    images: tuple[int, ...]

    @staticmethod
    def identity_on(points) -> "PartialPermutation":
        pts = tuple(sorted(points))
        return PartialPermutation(pts, pts)

    @staticmethod
    def from_mapping(mapping: dict[int, int]) -> "PartialPermutation":
        pts = tuple(sorted(mapping))
        if sorted(mapping.values()) != list(pts):
            raise ValueError(f"not a bijection of its point set: {mapping}")
        return PartialPermutation(pts, tuple(mapping[p] for p in pts))

    def apply(self, x: int) -> int:
        """Image of x, fixed when x is outside the point set."""
        try:
            return self.images[self.points.index(x)]
        except ValueError:
            return x

    def cycle_type(self) -> Partition:
        """Cycle type on the carried point set; untouched points give 1-parts."""
        to = dict(zip(self.points, self.images))
        seen = set()
        lengths = []
        for start in self.points:
            if start in seen:
                continue
            length = 0
            x = start
            while x not in seen:
                seen.add(x)
                length += 1
                x = to[x]
            lengths.append(length)
        return Partition(sorted(lengths, reverse=True))

    def __str__(self) -> str:
        pairs = " ".join(f"{p}>{q}" for p, q in zip(self.points, self.images))
        return f"[{pairs}]" if pairs else "[]"


def pp_transposition(i: int, j: int) -> PartialPermutation:
    return PartialPermutation.from_mapping({i: j, j: i})


def pp_multiply(a: PartialPermutation, b: PartialPermutation) -> PartialPermutation:
    """Compose a after b on the union of their point sets.

    The union is kept even when the composite bijection is the identity;
    forgetting it would break the grading the orbit sums rely on.
    """
    pts = tuple(sorted(set(a.points) | set(b.points)))
    return PartialPermutation(pts, tuple(a.apply(b.apply(x)) for x in pts))


class FormalSum:
    """Finitely supported rational combination of partial permutations."""

    TERM_CAP = 5_000_000

    def __init__(self, terms: dict[PartialPermutation, Fraction] | None = None):
        self.terms = {pp: c for pp, c in (terms or {}).items() if c != 0}

    @staticmethod
    def single(pp: PartialPermutation, coeff=1) -> "FormalSum":
        return FormalSum({pp: Fraction(coeff)})

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[PartialPermutation, Fraction]]:
        return iter(self.terms.items())

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for pp, c in other.terms.items():
            out[pp] = out.get(pp, Fraction(0)) + c
        return FormalSum(out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "FormalSum":
        scalar = Fraction(scalar)
        return FormalSum({pp: scalar * c for pp, c in self.terms.items()})

    def __mul__(self, other) -> "FormalSum":
        if not isinstance(other, FormalSum):
            return Fraction(other) * self
        out: dict[PartialPermutation, Fraction] = {}
        for pa, ca in self.terms.items():
            for pb, cb in other.terms.items():
                pp = pp_multiply(pa, pb)
                out[pp] = out.get(pp, Fraction(0)) + ca * cb
                if len(out) > self.TERM_CAP:
                    raise RuntimeError(
                        f"formal sum blew past {self.TERM_CAP} terms; "
                        "reduce the level or the exponent"
                    )
        return FormalSum(out)

    def __pow__(self, k: int) -> "FormalSum":
        if k < 1:
            raise ValueError("only positive powers make sense here")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms


def jm_element(k: int) -> FormalSum:
    """Sum of the transpositions (i k) for i < k, each carried on {i, k}."""
    return FormalSum({pp_transposition(i, k): Fraction(1) for i in range(1, k)})


def jm_power_sum(k: int, n: int) -> FormalSum:
    """Sum over h = 1..n of the k-th power of the h-th Jucys-Murphy element."""
    out = FormalSum()
    for h in range(2, n + 1):
        out = out + jm_element(h) ** k
    return out


def jm_power_sum_product(nu: Partition, n: int) -> FormalSum:
    out: FormalSum | None = None
    for k in nu:
        factor = jm_power_sum(k, n)
        out = factor if out is None else out * factor
    if out is None:
        raise ValueError("empty index; nothing to multiply")
    return out


def alpha_element(rho: Partition, n: int) -> FormalSum:
    """Orbit sum: every (bijection, point set) pair in {1..n} whose cycle
    type on its set, fixed points included, equals rho."""
    import itertools

    m = rho.n
    target = rho.parts
    terms = {}
    for pts in itertools.combinations(range(1, n + 1), m):
        for images in itertools.permutations(pts):
            pp = PartialPermutation(pts, images)
            if pp.cycle_type().parts == target:
                terms[pp] = Fraction(1)
    return FormalSum(terms)


def alpha_orbit_size(rho: Partition, n: int) -> int:
    m = rho.n
    return math.comb(n, m) * math.factorial(m) // z_value(rho)


def to_alpha(fs: FormalSum, n: int) -> dict[Partition, Fraction]:
    """Expand an S_n-invariant formal sum over the orbit sums at level n.

    Raises when the input is not actually invariant: every pair of a given
    cycle type must carry the same coefficient, and no orbit may be only
    partially present.
    """
    groups: dict[Partition, Fraction] = {}
    counts: dict[Partition, int] = {}
    for pp, c in fs:
        if pp.points and (pp.points[0] < 1 or pp.points[-1] > n):
            raise ValueError(f"{pp} does not live in level {n}")
        rho = pp.cycle_type()
        if rho in groups and groups[rho] != c:
            raise ValueError(f"coefficients differ within type {rho}")
        groups[rho] = c
        counts[rho] = counts.get(rho, 0) + 1
    for rho, found in counts.items():
        if found != alpha_orbit_size(rho, n):
            raise ValueError(
                f"type {rho}: {found} of {alpha_orbit_size(rho, n)} terms present"
            )
    return groups


@cache
def universal_alpha_coefficients(nu: tuple[int, ...]) -> dict[Partition, Fraction]:
    """Orbit-sum coefficients of the product of Jucys-Murphy power sums p_nu.

    Computed at the smallest level where every possible point set fits,
    namely sum(nu) + len(nu); the same numbers then serve at every level.
    """
    nu = tuple(sorted(nu, reverse=True))
    if not nu or nu[-1] < 1:
        raise ValueError(f"need positive exponents: {nu}")
    level = sum(nu) + len(nu)
    return to_alpha(jm_power_sum_product(Partition(nu), level), level)


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def modified_jm_power_sum(k: int, n: int) -> FormalSum:
    """p_k of the Jucys-Murphy elements minus its pure-identity-orbit part.

    For even k the orbit of k/2+1 idle points enters p_k with coefficient
    Catalan(k/2) * (k/2)!; subtracting it recenters the element so that its
    leading behaviour is the genuinely permuting part.  Odd k has no such
    term and is returned unchanged.
    """
    out = jm_power_sum(k, n)
    if k % 2 == 0:
        m = k // 2
        ones = Partition([1] * (m + 1))
        coeff = Fraction(catalan(m) * math.factorial(m))
        out = out - coeff * alpha_element(ones, n)
    return out


def content_power_sum(shape: Partition, k: int) -> int:
    """Sum of content^k over the boxes of the shape."""
    if k == 1:
        return sum(p * (p + 1) // 2 - i * p for i, p in enumerate(shape, start=1))
    if k == 2:
        return sum(
            p * (p + 1) * (2 * p + 1) // 6 - i * p * (p + 1) + i * i * p
            for i, p in enumerate(shape, start=1)
        )
    return sum(
        (j - i) ** k for i, p in enumerate(shape, start=1) for j in range(1, p + 1)
    )


def content_eval(nu: Partition, shape: Partition) -> int:
    """Product over parts k of nu of the k-th content power sum."""
    out = 1
    for k in nu:
        out *= content_power_sum(shape, k)
    return out


def modified_content_eval(k: int, shape: Partition) -> Fraction:
    """Content power sum recentered by its identity-orbit image.

    Matches applying modified_jm_power_sum at level n = |shape|, since the
    orbit of m+1 idle points acts as falling(n, m+1) / (m+1)! and the
    subtracted coefficient is Catalan(m) * m!.
    """
    value = Fraction(content_power_sum(shape, k))
    if k % 2 == 0:
        m = k // 2
        value -= Fraction(catalan(m) * falling(shape.n, m + 1), m + 1)
    return value


def phi_scalar(rho: Partition, n: int, shape: Partition) -> Fraction:
    """Scalar by which the image in the group algebra of the orbit sum of
    type rho acts on the irreducible module of the given shape, |shape|=n.

    Forgetting point sets sends the orbit sum to a multiple of a class sum,
    and a class sum acts on an irreducible as class size times the
    normalized character.
    """
    if shape.n != n:
        raise ValueError(f"|shape| = {shape.n} but level is {n}")
    if rho.n > n:
        return Fraction(0)
    return Fraction(falling(n, rho.n), z_value(rho)) * normalized_character(
        shape, pad_cycle_type(rho, n)
    )


def phi_alpha_sum(coeffs: dict[Partition, Fraction], shape: Partition) -> Fraction:
    """Scalar action of a combination of orbit sums at level |shape|."""
    return sum(
        (c * phi_scalar(rho, shape.n, shape) for rho, c in coeffs.items()),
        Fraction(0),
    )


def normalized_character_by_contents(shape: Partition, nontrivial: Partition) -> Fraction:
    """Normalized character at the class of the given nontrivial cycle type
    padded with fixed points, computed from content power sums alone.

    Works for any |shape|, with cost polynomial in |shape| and in the data
    of the cycle type; no character recursion over all of S_n is run.
    """
    n = shape.n
    if any(p < 2 for p in nontrivial):
        raise ValueError(f"cycle type must have no fixed parts: {nontrivial}")
    if nontrivial.n > n:
        raise ValueError(f"class {nontrivial} does not exist in S_{n}")
    psums: dict[int, int] = {}

    def psum(k: int) -> int:
        if k not in psums:
            psums[k] = content_power_sum(shape, k)
        return psums[k]

    memo: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}

    def chi(reduced: tuple[int, ...]) -> Fraction:
        if reduced in memo:
            return memo[reduced]
        target = Partition(reduced)
        nu = tuple(sorted((p - 1 for p in reduced), reverse=True))
        coeffs = universal_alpha_coefficients(nu)
        total = Fraction(math.prod(psum(k) for k in nu))
        for sigma_type, c in coeffs.items():
            if sigma_type == target:
                continue
            smaller = tuple(sorted((p for p in sigma_type if p > 1), reverse=True))
            total -= (
                c
                * Fraction(falling(n, sigma_type.n), z_value(sigma_type))
                * chi(smaller)
            )
        top = coeffs[target]
        value = total * Fraction(z_value(target), 1) / (top * falling(n, target.n))
        memo[reduced] = value
        return value

    return chi(tuple(sorted(nontrivial.parts, reverse=True)))


def normalized_character_padded(shape: Partition, nontrivial: Partition) -> Fraction:
    """Normalized character at nontrivial padded with 1s to |shape|.

    Small shapes go through the border-strip recursion; past that the
    content route is faster and avoids giant intermediate dimensions.
    """
    if nontrivial.n > shape.n:
        raise ValueError(f"class {nontrivial} does not exist in S_{shape.n}")
    if shape.n <= 12:
        return normalized_character(shape, pad_cycle_type(nontrivial, shape.n))
    return normalized_character_by_contents(shape, nontrivial)
