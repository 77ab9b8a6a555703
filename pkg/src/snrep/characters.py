"""Permutations, conjugacy classes, and irreducible symmetric group characters.

Products compose right to left: (a * b)(x) = a(b(x)).  Characters are
computed by the recursive border-strip rule on beta-sets, with a hook
length shortcut once only fixed points remain.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cache
from typing import Callable, Iterator

from ._util import exact_solve, falling
from .partitions import Partition, enumerate_partitions


class Permutation:
    """Bijection of {1..n} stored in one-line notation."""

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self.n = len(images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_cycles(n: int, *cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            cyc = tuple(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= n:
                    raise ValueError(f"point {a} outside 1..{n}")
                images[a - 1] = b
        out = Permutation(images)
        if sorted(out.images) != list(range(1, n + 1)):
            raise ValueError(f"cycles overlap: {cycles}")
        return out

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("sizes differ; extend() first")
        return Permutation(self.images[other.images[i] - 1] for i in range(self.n))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            images[y - 1] = i
        return Permutation(images)

    def extend(self, m: int) -> "Permutation":
        """The same bijection inside S_m, m >= n."""
        if m < self.n:
            raise ValueError(f"cannot shrink S_{self.n} to S_{m}")
        return Permutation(self.images + tuple(range(self.n + 1, m + 1)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each led by its smallest point, sorted by it."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    def support(self) -> tuple[int, ...]:
        """The moved points."""
        return tuple(i for i in range(1, self.n + 1) if self(i) != i)

    def cycle_type(self) -> Partition:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.n - sum(lengths))
        return Partition(sorted(lengths, reverse=True))

    def coxeter_length(self) -> int:
        """Number of inversions; length of any reduced word."""
        return sum(
            1
            for i, j in itertools.combinations(range(self.n), 2)
            if self.images[i] > self.images[j]
        )

    def reduced_word(self) -> list[int]:
        """Indices w with self = s_{w[0]} o s_{w[1]} o ... as a composition,
        so a matrix model multiplies the generator images in word order."""
        line = list(self.images)
        picked = []
        done = False
        while not done:
            done = True
            for i in range(len(line) - 1):
                if line[i] > line[i + 1]:
                    line[i], line[i + 1] = line[i + 1], line[i]
                    picked.append(i + 1)
                    done = False
        return picked[::-1]


def adjacent_transposition(n: int, k: int) -> Permutation:
    """The simple reflection s_k = (k, k+1) inside S_n."""
    return Permutation.from_cycles(n, (k, k + 1))


def transposition(n: int, a: int, b: int) -> Permutation:
    return Permutation.from_cycles(n, (a, b))


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse "(2,4,3)" / "(1,2)(3,4)" cycle notation or "2,1,4,3" one-line.

    With cycle input, n defaults to the largest point mentioned.
    """
    text = text.strip().replace(" ", "")
    if text in ("", "()", "id"):
        return Permutation.identity(n or 0)
    if text.startswith("("):
        if not text.endswith(")"):
            raise ValueError(f"unbalanced cycle notation: {text}")
        cycles = [
            tuple(int(x) for x in chunk.split(","))
            for chunk in text[1:-1].split(")(")
        ]
        top = max(x for c in cycles for x in c)
        return Permutation.from_cycles(n or top, *cycles)
    images = [int(x) for x in text.split(",")]
    perm = Permutation(images)
    if n is not None:
        perm = perm.extend(n)
    return perm


def z_value(rho: Partition) -> int:
    """Size of the centralizer of a permutation with this cycle type."""
    out = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for k, m in mult.items():
        out *= k**m * math.factorial(m)
    return out


def class_size(rho: Partition) -> int:
    return math.factorial(rho.n) // z_value(rho)


def support_size(rho: Partition) -> int:
    """Number of moved points for this cycle type: |rho| minus its 1-parts."""
    return rho.n - sum(1 for p in rho if p == 1)


def reduced_cycle_type(rho: Partition) -> Partition:
    """The parts greater than 1."""
    return Partition(p for p in rho if p > 1)


def pad_cycle_type(nontrivial: Partition, n: int) -> Partition:
    """Fill a partition with 1-parts up to total size n."""
    if nontrivial.n > n:
        raise ValueError(f"{nontrivial} does not fit in S_{n}")
    return Partition(sorted(tuple(nontrivial) + (1,) * (n - nontrivial.n), reverse=True))


def representative(rho: Partition, n: int | None = None) -> Permutation:
    """A permutation of the given cycle type, cycles on consecutive points."""
    n = n if n is not None else rho.n
    if rho.n > n:
        raise ValueError(f"{rho} does not fit in S_{n}")
    cycles = []
    next_point = 1
    for part in rho:
        if part > 1:
            cycles.append(tuple(range(next_point, next_point + part)))
        next_point += part
    return Permutation.from_cycles(n, *cycles)


@cache
def _char(parts: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    if rho[0] == 1:
        # only fixed points left: the count of standard tableaux
        return Partition(parts).dimension
    t = rho[0]
    rest = rho[1:]
    m = len(parts)
    beta = [parts[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - t
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        stripped = sorted((bset - {b}) | {c}, reverse=True)
        parts2 = tuple(stripped[i] - (m - 1 - i) for i in range(m))
        while parts2 and parts2[-1] == 0:
            parts2 = parts2[:-1]
        total += (-1) ** height * _char(parts2, rest)
    return total


def character(shape: Partition, rho: Partition) -> int:
    """Irreducible character value at cycle type rho, |shape| = |rho|."""
    if shape.n != rho.n:
        raise ValueError(f"size mismatch: {shape} vs {rho}")
    return _char(shape.parts, tuple(sorted(rho.parts, reverse=True)))


def normalized_character(shape: Partition, rho: Partition) -> Fraction:
    """Character divided by the dimension; 1 at the identity class."""
    return Fraction(character(shape, rho), shape.dimension)


def shifted_power_sum(rho: Partition, shape: Partition) -> Fraction:
    """Falling factorial of n below |rho| times the normalized character
    at rho padded with fixed points; zero when the shape is too small.

    As a function of the shape this is a polynomial in shifted symmetric
    coordinates; products of two of them expand back in the same family.
    """
    n = shape.n
    r = rho.n
    if n < r:
        return Fraction(0)
    return falling(n, r) * normalized_character(shape, pad_cycle_type(rho, n))


def shifted_basis(weight_bound: int) -> list[Partition]:
    """Index set {rho : |rho| + (number of 1-parts) <= bound}, by weight."""
    out = []
    for m in range(weight_bound + 1):
        for rho in enumerate_partitions(m):
            if m + sum(1 for p in rho if p == 1) <= weight_bound:
                out.append(rho)
    out.sort(key=lambda r: (r.n + sum(1 for p in r if p == 1), r.n, r.parts))
    return out


def expand_in_shifted_basis(
    f: Callable[[Partition], Fraction], weight_bound: int
) -> dict[Partition, Fraction]:
    """Write f as a combination of shifted power sums of weight <= bound.

    The weight of an index rho is |rho| + m1(rho).  f is evaluated at every
    partition of size <= bound; that set of evaluations pins the coefficients
    down uniquely, and the fit is verified on all of them, so a function
    outside the span raises rather than returning a bogus projection.
    """
    basis = shifted_basis(weight_bound)
    points = [
        lam for m in range(weight_bound + 1) for lam in enumerate_partitions(m)
    ]
    matrix = [[shifted_power_sum(rho, lam) for rho in basis] for lam in points]
    rhs = [Fraction(f(lam)) for lam in points]
    coeffs = exact_solve(matrix, rhs)
    return {rho: c for rho, c in zip(basis, coeffs) if c != 0}
