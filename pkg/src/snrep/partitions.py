"""Integer partitions, Young diagrams, and corner/branching data.

Boxes live in matrix coordinates: row 1 at the top, column 1 at the left,
row i of the diagram holding parts[i-1] boxes.  The content of a box is
column - row, so contents increase along rows and decrease down columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterator, NamedTuple


class Box(NamedTuple):
    row: int
    col: int
    content: int


class Partition:
    """A weakly decreasing tuple of positive integers."""

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts
        self.n = sum(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        if len(other) > len(self):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def boxes(self) -> Iterator[Box]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Box(i, j, j - i)

    def contents(self) -> dict[int, int]:
        """Multiset of box contents as {content: multiplicity}."""
        out: dict[int, int] = {}
        for box in self.boxes():
            out[box.content] = out.get(box.content, 0) + 1
        return out

    def hook(self, row: int, col: int) -> int:
        """Hook length of the box at (row, col), 1-based."""
        arm = self.parts[row - 1] - col
        leg = self.conjugate.parts[col - 1] - row
        return arm + leg + 1

    @cached_property
    def hook_product(self) -> int:
        out = 1
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                out *= self.hook(i, j)
        return out

    @cached_property
    def dimension(self) -> int:
        """Number of standard tableaux of this shape (hook length formula)."""
        import math

        return math.factorial(self.n) // self.hook_product

    def remove_box(self, row: int) -> "Partition":
        """Shrink the given 1-based row by one box."""
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(parts)

    def add_box(self, row: int) -> "Partition":
        """Grow the given 1-based row by one box; row len(self)+1 opens a new row."""
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(parts)

    def corners(self) -> "CornerData":
        """Removable boxes and addable slots, each sorted by increasing content.

        The two content sequences interlace: every removable content sits
        strictly between two consecutive addable ones.
        """
        removable = []
        addable = []
        parts = self.parts
        k = len(parts)
        for i in range(1, k + 1):
            p = parts[i - 1]
            below = parts[i] if i < k else 0
            if p > below:
                removable.append(Box(i, p, p - i))
            above = parts[i - 2] if i > 1 else None
            if above is None or p < above:
                addable.append(Box(i, p + 1, p + 1 - i))
        addable.append(Box(k + 1, 1, -k))
        removable.sort(key=lambda b: b.content)
        addable.sort(key=lambda b: b.content)
        return CornerData(tuple(removable), tuple(addable))


@dataclass(frozen=True)
class CornerData:
    removable: tuple[Box, ...]
    addable: tuple[Box, ...]

    @property
    def removable_contents(self) -> tuple[int, ...]:
        return tuple(b.content for b in self.removable)

    @property
    def addable_contents(self) -> tuple[int, ...]:
        return tuple(b.content for b in self.addable)


def subpartitions(shape: Partition) -> tuple[tuple[Partition, int], ...]:
    """All shapes obtained by removing one box, with the removed box's content.

    Ordered by increasing content of the removed box.
    """
    return tuple(
        (shape.remove_box(b.row), b.content) for b in shape.corners().removable
    )


def superpartitions(shape: Partition) -> tuple[tuple[Partition, int], ...]:
    """All shapes obtained by adding one box, with the new box's content.

    Ordered by increasing content of the added box.
    """
    return tuple(
        (shape.add_box(b.row), b.content) for b in shape.corners().addable
    )


def corner_dimension_ratios(shape: Partition) -> tuple[Fraction, ...]:
    """dim(shape minus corner) / dim(shape) for each removable corner.

    Same order as subpartitions().  Computed from the hooks crossing the
    removed corner, so no factorials are formed; the ratios sum to 1 and
    give the probability of each corner under uniform restriction of a
    standard tableau.
    """
    n = shape.n
    out = []
    for b in shape.corners().removable:
        r = Fraction(1, n)
        for j in range(1, b.col):
            h = shape.hook(b.row, j)
            r *= Fraction(h, h - 1)
        for i in range(1, b.row):
            h = shape.hook(i, b.col)
            r *= Fraction(h, h - 1)
        out.append(r)
    return tuple(out)


def growth_dimension_ratios(shape: Partition) -> tuple[Fraction, ...]:
    """dim(shape plus slot) / ((n+1) * dim(shape)) for each addable slot.

    Same order as superpartitions(); the ratios sum to 1.
    """
    out = []
    for b in shape.corners().addable:
        r = Fraction(1)
        for j in range(1, b.col):
            h = shape.hook(b.row, j)
            r *= Fraction(h, h + 1)
        for i in range(1, b.row):
            h = shape.hook(i, b.col)
            r *= Fraction(h, h + 1)
        out.append(r)
    return tuple(out)


@cache
def _skew_count(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if sum(outer) == sum(inner):
        return 1
    big = Partition(outer)
    small = Partition(inner)
    total = 0
    for sub, _ in subpartitions(big):
        if sub.contains(small):
            total += _skew_count(sub.parts, inner)
    return total


def skew_dimension(outer: Partition, inner: Partition) -> int:
    """Number of standard tableaux of the skew shape outer/inner."""
    if not outer.contains(inner):
        raise ValueError(f"{outer} does not contain {inner}")
    return _skew_count(outer.parts, inner.parts)


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order."""

    def rec(m: int, cap: int, prefix: list[int]):
        if m == 0:
            yield Partition(prefix)
            return
        for k in range(min(m, cap), 0, -1):
            prefix.append(k)
            yield from rec(m - k, k, prefix)
            prefix.pop()

    yield from rec(n, max_part if max_part is not None else n, [])


@cache
def count_partitions(n: int, max_part: int | None = None) -> int:
    if n == 0:
        return 1
    cap = max_part if max_part is not None else n
    return sum(count_partitions(n - k, k) for k in range(min(n, cap), 0, -1))


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list like "6,4,3,3,2"; "" is the empty shape."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(piece) for piece in text.split(","))
