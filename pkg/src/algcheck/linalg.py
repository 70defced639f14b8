"""Exact vectors, matrices and linear forms over the rationals.

Conventions used throughout the package:

* a vector is a tuple of scalars, length = ambient dimension;
* ``LinearMap`` stores its matrix by columns, column ``j`` being the image of
  basis vector ``j``; composition ``A @ B`` is the matrix product ``A . B``;
* nullspaces are computed by exact Gaussian elimination over the rationals
  and returned in the canonical reduced-row-echelon parametrization, so the
  result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Scalar, norm

Vector = tuple  # tuple of Scalar


def vector(coords) -> Vector:
    return tuple(norm(c) for c in coords)


def zero_vector(dim: int) -> Vector:
    return (0,) * dim


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(dim))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    if c == 0:
        return (0,) * len(v)
    if c == 1:
        return v
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class LinearForm:
    """Covector; ``f(x) = sum_i row[i] * x[i]``."""

    row: Vector

    @property
    def dimension(self) -> int:
        return len(self.row)

    def __call__(self, v: Vector) -> Scalar:
        if len(v) != len(self.row):
            raise ValueError("dimension mismatch in form application")
        return sum(a * b for a, b in zip(self.row, v) if a and b)

    def is_zero(self) -> bool:
        return vec_is_zero(self.row)


@dataclass(frozen=True)
class LinearMap:
    """Square matrix stored by columns (column j = image of basis vector j)."""

    cols: tuple  # tuple of Vector

    def __post_init__(self):
        d = len(self.cols)
        for c in self.cols:
            if len(c) != d:
                raise ValueError("LinearMap matrix must be square")

    @property
    def dimension(self) -> int:
        return len(self.cols)

    @classmethod
    def from_cols(cls, cols) -> "LinearMap":
        return cls(tuple(vector(c) for c in cols))

    @classmethod
    def from_rows(cls, rows) -> "LinearMap":
        rows = [vector(r) for r in rows]
        return cls(tuple(zip(*rows)) if rows else ())

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls(tuple(basis_vector(dim, i) for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "LinearMap":
        return cls(tuple(zero_vector(dim) for _ in range(dim)))

    @classmethod
    def scalar(cls, dim: int, c: Scalar) -> "LinearMap":
        c = norm(c)
        return cls(tuple(vec_scale(c, basis_vector(dim, i)) for i in range(dim)))

    @classmethod
    def diagonal(cls, entries) -> "LinearMap":
        entries = [norm(e) for e in entries]
        d = len(entries)
        return cls(tuple(vec_scale(entries[i], basis_vector(d, i)) for i in range(d)))

    def rows(self) -> list:
        return [tuple(col[i] for col in self.cols) for i in range(self.dimension)]

    def __call__(self, v: Vector) -> Vector:
        if len(v) != self.dimension:
            raise ValueError("dimension mismatch in map application")
        out = [0] * self.dimension
        for c, col in zip(v, self.cols):
            if c == 0:
                continue
            for i, a in enumerate(col):
                if a:
                    out[i] += c * a
        return tuple(out)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(tuple(vec_add(a, b) for a, b in zip(self.cols, other.cols)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(tuple(vec_sub(a, b) for a, b in zip(self.cols, other.cols)))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(tuple(self(col) for col in other.cols))

    def scaled(self, c: Scalar) -> "LinearMap":
        c = norm(c)
        return LinearMap(tuple(vec_scale(c, col) for col in self.cols))

    def determinant(self) -> Scalar:
        m = [list(r) for r in self.rows()]
        d = self.dimension
        det = Fraction(1)
        for j in range(d):
            pivot = next((i for i in range(j, d) if m[i][j] != 0), None)
            if pivot is None:
                return 0
            if pivot != j:
                m[j], m[pivot] = m[pivot], m[j]
                det = -det
            det *= m[j][j]
            inv = Fraction(1, 1) / m[j][j]
            for i in range(j + 1, d):
                if m[i][j] == 0:
                    continue
                factor = m[i][j] * inv
                for k in range(j, d):
                    m[i][k] -= factor * m[j][k]
        return norm(det)

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> "LinearMap":
        d = self.dimension
        m = [list(r) + [1 if i == j else 0 for j in range(d)]
             for i, r in enumerate(self.rows())]
        for j in range(d):
            pivot = next((i for i in range(j, d) if m[i][j] != 0), None)
            if pivot is None:
                raise ValueError("singular map has no inverse")
            m[j], m[pivot] = m[pivot], m[j]
            pv = Fraction(1, 1) / m[j][j]
            m[j] = [e * pv for e in m[j]]
            for i in range(d):
                if i != j and m[i][j] != 0:
                    f = m[i][j]
                    m[i] = [a - f * b for a, b in zip(m[i], m[j])]
        return LinearMap.from_rows([row[d:] for row in m])


def maps_commute(a: LinearMap, b: LinearMap) -> bool:
    """Exact test of ``A B = B A``."""
    return (a @ b).cols == (b @ a).cols


def rref(rows) -> tuple[list, list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [[norm(e) for e in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = Fraction(1, 1) / m[r][c]
        m[r] = [norm(e * pv) for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [norm(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols: int) -> list[Vector]:
    """Canonical basis of ``{v : M v = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(red, pivots):
            v[pc] = norm(-r[fc])
        basis.append(tuple(v))
    return basis


def kernel_basis(m: LinearMap) -> list[Vector]:
    """Exact nullspace of a linear map."""
    return nullspace(m.rows(), m.dimension)


def kernel_membership(m: LinearMap, v: Vector) -> bool:
    return vec_is_zero(m(v))
