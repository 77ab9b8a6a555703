"""Standard Young tableaux in last-letter order.

The basis order used throughout: T comes before S when, at the largest
entry k placed differently, T holds k in a lower row (larger row index).
Enumerating recursively by the corner holding n, with corners taken in
increasing content order, produces exactly this order; that fact is
checked in the test suite rather than assumed.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator

from .partitions import Box, Partition, subpartitions


class StandardTableau:
    """A filling of a Young diagram by 1..n, increasing along rows and columns."""

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        shape = Partition(len(row) for row in rows)
        n = shape.n
        seen = sorted(x for row in rows for x in row)
        if seen != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}: {rows}")
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"rows must increase: {rows}")
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise ValueError(f"columns must increase: {rows}")
        self.rows = rows
        self.shape = shape
        self.n = n
        self._pos = {}
        for i, row in enumerate(rows, start=1):
            for j, x in enumerate(row, start=1):
                self._pos[x] = Box(i, j, j - i)

    def position_of(self, k: int) -> Box:
        return self._pos[k]

    def content_of(self, k: int) -> int:
        return self._pos[k].content

    def row_of(self, k: int) -> int:
        return self._pos[k].row

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def __str__(self) -> str:
        if self.n <= 9:
            return "/".join("".join(str(x) for x in row) for row in self.rows)
        return "/".join(",".join(str(x) for x in row) for row in self.rows)


def parse_tableau(text: str) -> StandardTableau:
    """Parse "123/45" (digits per row) or "1,2,3/4,5" for entries past 9."""
    rows = []
    for chunk in text.strip().split("/"):
        if "," in chunk:
            rows.append([int(x) for x in chunk.split(",")])
        else:
            rows.append([int(ch) for ch in chunk])
    return StandardTableau(rows)


def last_letter_key(t: StandardTableau):
    """Sort key realizing the basis order directly from the definition."""
    return tuple(-t.row_of(k) for k in range(t.n, 0, -1))


def axial_distance(t: StandardTableau, k: int) -> int:
    """content_of(k) - content_of(k+1); never zero in a standard tableau."""
    return t.content_of(k) - t.content_of(k + 1)


def adjacent_swap(t: StandardTableau, k: int) -> StandardTableau | None:
    """Exchange k and k+1, or None when they share a row or column."""
    a = t.position_of(k)
    b = t.position_of(k + 1)
    if a.row == b.row or a.col == b.col:
        return None
    rows = [list(r) for r in t.rows]
    rows[a.row - 1][a.col - 1] = k + 1
    rows[b.row - 1][b.col - 1] = k
    return StandardTableau(rows)


@cache
def _tableaux_rows(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    shape = Partition(parts)
    if shape.n == 0:
        return ((),)
    out = []
    n = shape.n
    for sub, _ in subpartitions(shape):
        row = next(i for i in range(len(parts)) if sub.parts[i:i + 1] != parts[i:i + 1])
        for rows in _tableaux_rows(sub.parts):
            grown = list(rows)
            if row == len(rows):
                grown.append((n,))
            else:
                grown[row] = grown[row] + (n,)
            out.append(tuple(grown))
    return tuple(out)


def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the shape, in last-letter order."""
    return tuple(StandardTableau(rows) for rows in _tableaux_rows(shape.parts))


def tableau_index(shape: Partition) -> dict[StandardTableau, int]:
    """Position of each tableau in the last-letter order."""
    return {t: i for i, t in enumerate(standard_tableaux(shape))}


def restricted_shape(t: StandardTableau, r: int) -> Partition:
    """Shape occupied by the entries 1..r."""
    return Partition(sum(1 for x in row if x <= r) for row in t.rows)


def split_at(t: StandardTableau, r: int) -> tuple[StandardTableau, "SkewPlacement"]:
    """Split into the tableau of entries 1..r and the placement of r+1..n."""
    inner = restricted_shape(t, r)
    head = StandardTableau(
        tuple(x for x in row if x <= r) for row in t.rows if any(x <= r for x in row)
    )
    cells = tuple(sorted((t.position_of(k).row, t.position_of(k).col, k)
                         for k in range(r + 1, t.n + 1)))
    return head, SkewPlacement(t.shape, inner, cells)


class SkewPlacement:
    """Entries r+1..n fixed inside outer/inner; the data shared by a block
    of tableaux that restrict to the same head shape."""

    def __init__(self, outer: Partition, inner: Partition,
                 cells: tuple[tuple[int, int, int], ...]):
        self.outer = outer
        self.inner = inner
        self.cells = cells

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPlacement)
                and self.outer == other.outer
                and self.inner == other.inner
                and self.cells == other.cells)

    def __hash__(self) -> int:
        return hash((self.outer, self.inner, self.cells))

    def __repr__(self) -> str:
        return f"SkewPlacement({self.outer!r}, {self.inner!r}, {self.cells!r})"


def join(head: StandardTableau, tail: SkewPlacement) -> StandardTableau:
    """Inverse of split_at."""
    if head.shape != tail.inner:
        raise ValueError("head shape does not match the inner shape")
    rows = [list(r) for r in head.rows]
    rows.extend([] for _ in range(len(tail.outer) - len(rows)))
    for row, col, value in sorted(tail.cells, key=lambda c: (c[0], c[1])):
        if col != len(rows[row - 1]) + 1:
            raise ValueError("placement does not sit flush against the head")
        rows[row - 1].append(value)
    return StandardTableau(rows)


def tableau_iter(shape: Partition) -> Iterator[StandardTableau]:
    yield from standard_tableaux(shape)
