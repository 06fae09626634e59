"""Exact linear algebra over the rationals.

Vectors are tuples of ``fractions.Fraction`` and matrices are tuples of row
tuples, so every object is immutable and safe to share between threads.
Subspaces are represented by generating lists of vectors; ``span_basis``
returns the canonical reduced-row-echelon basis, which makes subspace
equality a syntactic comparison.

Nothing here is numerical: ranks, kernels and solutions are exact, and a
zero really is zero.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def frac(x) -> Fraction:
    """Coerce ints, strings like '2/3', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact computations")
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vector:
    return (Q(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def scale(c, u: Vector) -> Vector:
    c = frac(c)
    return tuple(c * a for a in u)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q(0))


def is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def concat(u: Vector, v: Vector) -> Vector:
    return tuple(u) + tuple(v)


def mat_vec(a: Sequence[Vector], v: Vector) -> Vector:
    return tuple(dot(row, v) for row in a)


def mat_mul(a: Sequence[Vector], b: Sequence[Vector]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(a: Sequence[Vector]) -> Matrix:
    if not a:
        return ()
    return tuple(zip(*a, strict=True))


def rref(rows: Sequence[Vector]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Q(1) / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Vector]) -> int:
    return len(rref(rows)[1])


def span_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """Canonical basis (nonzero rref rows) of the span of the inputs."""
    m, pivots = rref(vectors)
    return [tuple(m[i]) for i in range(len(pivots))]


def nullspace(rows: Sequence[Vector]) -> list[Vector]:
    """Basis of {x : A x = 0} where the input rows are the rows of A."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [Q(0)] * ncols
        v[c] = Q(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][c]
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Vector], b: Vector):
    """One exact solution of A x = b, or None if inconsistent."""
    if not a:
        return None if not is_zero(b) else ()
    aug = [list(row) + [bi] for row, bi in zip(a, b, strict=True)]
    ncols = len(a[0])
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Q(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][ncols]
    return tuple(x)


def inverse(a: Sequence[Vector]) -> Matrix:
    n = len(a)
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(m[i][n:]) for i in range(n))


def det(a: Sequence[Vector]) -> Fraction:
    n = len(a)
    m = [list(r) for r in a]
    result = Q(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot_row is None:
            return Q(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            result = -result
        result *= m[c][c]
        inv = Q(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def in_span(v: Vector, gens: Sequence[Vector]) -> bool:
    if is_zero(v):
        return True
    if not gens:
        return False
    return rank(list(gens) + [v]) == rank(gens)


def span_contains(gens: Sequence[Vector], others: Sequence[Vector]) -> bool:
    """True iff every vector of `others` lies in span(gens)."""
    if not others:
        return True
    r = rank(gens)
    return rank(list(gens) + list(others)) == r


def span_equal(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    return span_basis(a) == span_basis(b)


def intersect_spans(a: Sequence[Vector], b: Sequence[Vector]) -> list[Vector]:
    """Basis of span(a) ∩ span(b)."""
    a = span_basis(a)
    b = span_basis(b)
    if not a or not b:
        return []
    # Solve sum_i x_i a_i = sum_j y_j b_j: nullspace of [a^T | -b^T].
    rows = [concat(ra, tuple(-x for x in rb)) for ra, rb in zip(transpose(a), transpose(b), strict=True)]
    sols = nullspace(rows)
    na = len(a)
    vecs = []
    for s in sols:
        v = zeros(len(a[0]))
        for i in range(na):
            v = add(v, scale(s[i], a[i]))
        vecs.append(v)
    return span_basis(vecs)


def annihilator(gens: Sequence[Vector], dim: int) -> list[Vector]:
    """Basis of {w : w·g = 0 for all g in gens} inside Q^dim."""
    if not gens:
        return list(identity(dim))
    return nullspace(gens)


def extend_to_basis(sub: Sequence[Vector], space: Sequence[Vector]) -> list[Vector]:
    """Vectors from `space` completing `sub` to a basis of span(space).

    Requires span(sub) ⊆ span(space); returns only the added vectors.
    """
    current = list(sub)
    r = rank(current)
    added = []
    for v in space:
        if rank(current + [v]) > r:
            current.append(v)
            added.append(v)
            r += 1
    return added


def random_fraction(rng: random.Random, num: int = 4, den: int = 3) -> Fraction:
    return Q(rng.randint(-num, num), rng.randint(1, den))


def random_vector(rng: random.Random, n: int, num: int = 4, den: int = 3) -> Vector:
    return tuple(random_fraction(rng, num, den) for _ in range(n))
