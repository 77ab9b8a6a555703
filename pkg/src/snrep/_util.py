"""Small shared helpers."""

from __future__ import annotations

from fractions import Fraction


def as_fraction(x) -> Fraction:
    """Coerce x to an exact Fraction.

    Floats are routed through their shortest decimal repr, so 0.4 means
    4/10 rather than the nearest binary double.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def falling(n: int, k: int) -> int:
    """Falling factorial n(n-1)...(n-k+1); zero once the product crosses zero."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


def exact_solve(matrix, rhs) -> list[Fraction]:
    """Solve an exactly determined or overdetermined linear system over Fractions.

    Gauss-Jordan with the first nonzero pivot per column.  Raises ValueError
    when the columns are dependent or the extra rows are inconsistent, so a
    caller never receives a least-squares-like answer by accident.
    """
    ncols = len(matrix[0]) if matrix else 0
    rows = [
        [Fraction(x) for x in row] + [Fraction(b)]
        for row, b in zip(matrix, rhs, strict=True)
    ]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            raise ValueError(f"column {col} is dependent on earlier columns")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i, row in enumerate(rows):
            if i != rank and row[col] != 0:
                factor = row[col]
                rows[i] = [x - factor * y for x, y in zip(row, rows[rank])]
        rank += 1
    for row in rows[rank:]:
        if row[-1] != 0:
            raise ValueError("inconsistent system")
    return [rows[r][-1] for r in range(ncols)]
