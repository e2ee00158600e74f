"""Exact linear algebra over the rational field.

Scalars are :class:`fractions.Fraction` values, which are always stored
gcd-reduced with a positive denominator (zero is ``0/1``).  Matrices are
dense, treated as immutable, and every elimination routine picks the first
nonzero pivot in column order, so identical inputs yield bit-identical
outputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def q(x) -> Fraction:
    """Coerce an int or Fraction to an exact rational scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class MatrixQ:
    """Dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_m")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._m = tuple(tuple(_F0 for _ in range(cols)) for _ in range(rows))
        else:
            if len(entries) != rows:
                raise ValueError(f"expected {rows} rows, got {len(entries)}")
            grid = []
            for row in entries:
                if len(row) != cols:
                    raise ValueError(f"expected {cols} columns, got {len(row)}")
                grid.append(tuple(q(x) for x in row))
            self._m = tuple(grid)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, [[_F1 if i == j else _F0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "MatrixQ":
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(r, c, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], rows: int | None = None) -> "MatrixQ":
        ncols = len(cols)
        if ncols == 0:
            if rows is None:
                raise ValueError("rows required for a matrix with no columns")
            return cls(rows, 0)
        nrows = len(cols[0])
        return cls(nrows, ncols, [[cols[j][i] for j in range(ncols)] for i in range(nrows)])

    @classmethod
    def column_vector(cls, values: Sequence) -> "MatrixQ":
        return cls(len(values), 1, [[v] for v in values])

    # -- basic access ---------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._m[i][j]

    def row(self, i: int) -> tuple:
        return self._m[i]

    def column(self, j: int) -> tuple:
        return tuple(self._m[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._m == other._m

    __hash__ = None  # mutable-adjacent container; not meant for hashing

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._m)
        return f"MatrixQ({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return all(not x for row in self._m for x in row)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        self._check_same_shape(other)
        return MatrixQ(self.rows, self.cols,
                       [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._m, other._m)])

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        self._check_same_shape(other)
        return MatrixQ(self.rows, self.cols,
                       [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._m, other._m)])

    def __neg__(self) -> "MatrixQ":
        return MatrixQ(self.rows, self.cols, [[-a for a in row] for row in self._m])

    def scale(self, c) -> "MatrixQ":
        c = q(c)
        return MatrixQ(self.rows, self.cols, [[c * a for a in row] for row in self._m])

    def __mul__(self, other: "MatrixQ") -> "MatrixQ":
        if not isinstance(other, MatrixQ):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape()} * {other.shape()}")
        om = other._m
        out = []
        for i in range(self.rows):
            srow = self._m[i]
            orow = [_F0] * other.cols
            for k in range(self.cols):
                a = srow[k]
                if a:
                    brow = om[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if b:
                            orow[j] += a * b
            out.append(orow)
        return MatrixQ(self.rows, other.cols, out)

    def transpose(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows,
                       [[self._m[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other: "MatrixQ") -> "MatrixQ":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return MatrixQ(self.rows, self.cols + other.cols,
                       [ra + rb for ra, rb in zip(self._m, other._m)])

    def _check_same_shape(self, other: "MatrixQ") -> None:
        if self.shape() != other.shape():
            raise ValueError(f"shape mismatch: {self.shape()} vs {other.shape()}")

    # -- elimination ----------------------------------------------------

    def rref(self) -> tuple["MatrixQ", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns.

        Pivot choice is the first nonzero entry in column order, which
        makes the result (and everything derived from it) deterministic.
        """
        m = [list(row) for row in self._m]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
            inv = m[r][c]
            if inv != 1:
                m[r] = [v / inv for v in m[r]]
            mr = m[r]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    mi = m[i]
                    for j in range(c, self.cols):
                        if mr[j]:
                            mi[j] -= f * mr[j]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return MatrixQ(self.rows, self.cols, m), tuple(pivots)

    def rank(self) -> int:
        """Rank over the rationals via forward Gaussian elimination."""
        m = [list(row) for row in self._m]
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
            mr = m[r]
            piv = mr[c]
            for i in range(r + 1, self.rows):
                f = m[i][c]
                if f:
                    f = f / piv
                    mi = m[i]
                    for j in range(c, self.cols):
                        if mr[j]:
                            mi[j] -= f * mr[j]
            r += 1
            if r == self.rows:
                break
        return r

    def kernel_basis(self) -> "MatrixQ":
        """Columns spanning the kernel, in the canonical rref convention.

        For each free column f the basis vector has 1 at f and
        ``-R[i][f]`` at the i-th pivot column.
        """
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        cols = []
        for f in free:
            v = [_F0] * self.cols
            v[f] = _F1
            for i, p in enumerate(pivots):
                v[p] = -R._m[i][f]
            cols.append(v)
        return MatrixQ.from_columns(cols, rows=self.cols)

    def solve(self, rhs: "MatrixQ") -> "MatrixQ | None":
        """A particular solution X of ``self * X = rhs`` (free vars = 0).

        Returns None when the system is inconsistent.  The choice of
        particular solution is deterministic.
        """
        if rhs.rows != self.rows:
            raise ValueError("rhs row count mismatch")
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        for p in pivots:
            if p >= self.cols:
                return None
        out = [[_F0] * rhs.cols for _ in range(self.cols)]
        for i, p in enumerate(pivots):
            for j in range(rhs.cols):
                out[p][j] = R._m[i][self.cols + j]
        return MatrixQ(self.cols, rhs.cols, out)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "MatrixQ":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        inv = self.solve(MatrixQ.identity(self.rows))
        if inv is None or (self * inv) != MatrixQ.identity(self.rows):
            raise ValueError("matrix is singular")
        return inv


def rank(m: MatrixQ) -> int:
    """Rank of an exact rational matrix."""
    return m.rank()


def kernel_basis(m: MatrixQ) -> MatrixQ:
    """Matrix whose columns form the canonical basis of ker(m)."""
    return m.kernel_basis()


def column_space_contains(basis: MatrixQ, vectors: MatrixQ) -> bool:
    """True iff every column of ``vectors`` lies in the span of ``basis``."""
    if basis.rows != vectors.rows:
        raise ValueError("row count mismatch")
    return basis.solve(vectors) is not None
