"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are sequences of
such rows.  All eliminations are fraction-free in the Bareiss style: rows are
first scaled to integers, and the single-step elimination

    m[r][c] <- (m[r][c] * pivot - m[r][pc] * m[piv][c]) / previous_pivot

keeps every intermediate entry an integer while bounding coefficient growth.
Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = Sequence[Sequence[Fraction]]


def vector(coords) -> Vector:
    """Coerce an iterable of numbers to an exact rational vector."""
    return tuple(Fraction(c) for c in coords)


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel/rank preserved)."""
    rows = []
    for row in m:
        fracs = [Fraction(x) for x in row]
        scale = 1
        for x in fracs:
            scale = scale // gcd(scale, x.denominator) * x.denominator
        rows.append([int(x * scale) for x in fracs])
    return rows


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free forward elimination.

    Returns the echelon rows and the list of pivot column indices.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pivots.append(c)
        p = rows[r][c]
        for i in range(r + 1, n_rows):
            f = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, n_cols):
                q, rem = divmod(row_i[j] * p - f * row_r[j], prev)
                if rem:  # cannot happen for Bareiss updates; guards the invariant
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
        prev = p
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    _, pivots = _bareiss_echelon(_integer_rows(m))
    return len(pivots)


def kernel_basis(m: Matrix, ncols: int | None = None) -> list[Vector]:
    """Exact basis of the right null space {x : m x = 0}.

    ``ncols`` is only needed when ``m`` has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs an explicit ncols")
        return [
            tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)
        ]
    rows, pivots = _bareiss_echelon(_integer_rows(m))
    n_cols = len(rows[0])
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * n_cols
        x[fc] = Fraction(1)
        # echelon rows are triangular on the pivot columns: back substitute
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((Fraction(rows[r][j]) * x[j] for j in range(pc + 1, n_cols)), Fraction(0))
            x[pc] = -s / rows[r][pc]
        basis.append(tuple(x))
    return basis


def in_span(basis: Sequence[Vector], v: Vector) -> bool:
    """Whether v lies in the span of the given vectors (rank comparison)."""
    if is_zero_vector(v):
        return True
    if not basis:
        return False
    rows = list(basis)
    return rank(rows) == rank(rows + [v])


def independent_subset(vectors: Sequence[Vector]) -> list[Vector]:
    """Greedy maximal linearly independent subset, preserving input order."""
    picked: list[Vector] = []
    r = 0
    for v in vectors:
        if is_zero_vector(v):
            continue
        cand = picked + [v]
        if rank(cand) > r:
            picked = cand
            r += 1
    return picked


def det(m: Matrix) -> Fraction:
    """Exact determinant (square matrices)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c]
            for j in range(c, n):
                rows[i][j] = (rows[i][j] * p - f * rows[c][j]) / prev
        prev = p
    return sign * rows[n - 1][n - 1]


def mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("incompatible shapes")
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_inverse(m: Matrix) -> list[list[Fraction]]:
    """Exact inverse via Gauss-Jordan on an augmented matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of a non-square matrix")
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != c:
            aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
