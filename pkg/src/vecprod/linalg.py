"""Dense exact linear algebra over a :class:`~vecprod.fields.FieldSpec`.

Vectors are tuples of Scalars and matrices are tuples of row tuples.  The
field is passed explicitly because empty vectors and matrices carry no
elements to infer it from.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, DivisionByZero
from .fields import FieldSpec, Scalar

Vector = tuple
Matrix = tuple


def vec(field: FieldSpec, xs) -> Vector:
    return tuple(field(x) for x in xs)


def mat(field: FieldSpec, rows) -> Matrix:
    return tuple(tuple(field(x) for x in row) for row in rows)


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


def identity(field: FieldSpec, n: int) -> Matrix:
    return tuple(unit_vector(field, n, i) for i in range(n))


def add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Vector) -> bool:
    return not any(v)


def dot(field: FieldSpec, u: Vector, v: Vector) -> Scalar:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} and {len(v)} differ")
    total = field.zero
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def mat_vec(field: FieldSpec, A: Matrix, v: Vector) -> Vector:
    return tuple(dot(field, row, v) for row in A)


def mat_mul(field: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    """Product of an m x n and an n x k matrix (n >= 1 unless A is empty)."""
    if not A:
        return ()
    n = len(A[0])
    if len(B) != n or n == 0:
        raise DimensionMismatch(f"cannot multiply {len(A)}x{n} by {len(B)}-row matrix")
    cols = tuple(zip(*B))
    return tuple(tuple(dot(field, row, c) for c in cols) for row in A)


def columns_to_matrix(field: FieldSpec, cols: Sequence[Vector], nrows: int) -> Matrix:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def rref(field: FieldSpec, rows: Sequence[Vector], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    M = [list(r) for r in rows]
    for r in M:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)}, expected {ncols}")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field: FieldSpec, rows: Sequence[Vector], ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


def nullspace(field: FieldSpec, rows: Sequence[Vector], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0}, one vector per free column in increasing order."""
    R, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def det(field: FieldSpec, A: Matrix) -> Scalar:
    n = len(A)
    M = [list(r) for r in A]
    d = field.one
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return field.zero
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            d = -d
        d = d * M[c][c]
        inv = M[c][c].inverse()
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def inverse(field: FieldSpec, A: Matrix) -> Matrix:
    n = len(A)
    aug = [tuple(A[i]) + unit_vector(field, n, i) for i in range(n)]
    R, pivots = rref(field, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise DivisionByZero("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def solve_in_span(field: FieldSpec, basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coordinates c with sum c_i basis_i = v, or None if v is outside the span."""
    n = len(v)
    k = len(basis)
    if k == 0:
        return () if is_zero(v) else None
    # augmented system: columns are the basis vectors, last column is v
    rows = [tuple(b[i] for b in basis) + (v[i],) for i in range(n)]
    R, pivots = rref(field, rows, k + 1)
    if k in pivots:
        return None
    coords = [field.zero] * k
    for row, pc in zip(R, pivots):
        coords[pc] = row[k]
    return tuple(coords)
