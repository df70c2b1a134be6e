"""Dense matrices over the exact scalar ring.

Matrices are immutable row-tuples of Scalars.  The product skips zero
entries, which makes products of the very sparse basis matrices (gammas,
metrics, blades) cost O(dim) instead of O(dim^3) without introducing a
sparse storage format.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar, approx_equal


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "_nnz")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self._nnz = None
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix rows")

    def _nnz_rows(self):
        """Per-row (column, value) pairs of nonzero entries, cached."""
        if self._nnz is None:
            self._nnz = tuple(
                tuple((j, s) for j, s in enumerate(row) if not s.is_zero())
                for row in self.rows
            )
        return self._nnz

    # -- constructors --------------------------------------------------

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        row = (ZERO,) * ncols
        return cls([row] * nrows)

    @classmethod
    def identity(cls, n):
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        rows = []
        for i, s in enumerate(entries):
            row = [ZERO] * n
            row[i] = s
            rows.append(row)
        return cls(rows)

    @classmethod
    def column(cls, entries):
        return cls([[s] for s in entries])

    @classmethod
    def row_vector(cls, entries):
        return cls([list(entries)])

    @classmethod
    def unit_column(cls, dim, index):
        entries = [ZERO] * dim
        entries[index] = ONE
        return cls.column(entries)

    @classmethod
    def block2(cls, tl, tr, bl, br, half):
        """Assemble a 2x2 block matrix; None blocks are zero, each half x half."""
        zero_row = (ZERO,) * half

        def block_row(m, i):
            return m.rows[i] if m is not None else zero_row

        rows = []
        for i in range(half):
            rows.append(block_row(tl, i) + block_row(tr, i))
        for i in range(half):
            rows.append(block_row(bl, i) + block_row(br, i))
        return cls(rows)

    # -- shape ----------------------------------------------------------

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def dim(self):
        if not self.is_square:
            raise ValueError("dim of a non-square matrix")
        return self.nrows

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shape mismatch in addition")
        return Matrix(
            [
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix([tuple(-s for s in r) for r in self.rows])

    def scale(self, s):
        if not isinstance(s, Scalar):
            s = Scalar(s) if isinstance(s, int) else Scalar(_float=complex(s))
        if s.is_exact and s == ONE:
            return self
        return Matrix([tuple(s * x for x in r) for r in self.rows])

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch in product")
        left = self._nnz_rows()
        right = other._nnz_rows()
        out = []
        ncols = other.ncols
        for row in left:
            acc = [ZERO] * ncols
            for k, s in row:
                for j, t in right[k]:
                    acc[j] = acc[j] + s * t
            out.append(tuple(acc))
        return Matrix(out)

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    def conj(self):
        """Entrywise complex conjugation with respect to i."""
        return Matrix([tuple(s.conjugate() for s in r) for r in self.rows])

    def dagger(self):
        return self.conj().transpose()

    def trace(self):
        t = ZERO
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def inverse(self):
        """Exact inverse by Gaussian elimination over the scalar field."""
        n = self.dim
        aug = [list(self.rows[i]) + [ONE if j == i else ZERO for j in range(n)]
               for i, _ in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = aug[col][col].inverse()
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug])

    def determinant(self):
        """Exact determinant by Gaussian elimination with pivoting."""
        n = self.dim
        work = [list(r) for r in self.rows]
        det = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            p = work[col][col]
            det = det * p
            inv_p = p.inverse()
            for r in range(col + 1, n):
                if not work[r][col].is_zero():
                    f = work[r][col] * inv_p
                    work[r] = [x - f * y for x, y in zip(work[r], work[col])]
        return det

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return all(s.is_zero() for r in self.rows for s in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def approx_equal(self, other, tol=1e-12):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            approx_equal(a, b, tol)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def is_identity(self):
        return self.is_square and self == Matrix.identity(self.nrows)

    def scalar_multiple_of_identity(self):
        """Return s if the matrix equals s*identity, else None."""
        if not self.is_square:
            return None
        s = self.rows[0][0]
        for i in range(self.nrows):
            for j in range(self.ncols):
                want = s if i == j else ZERO
                if self.rows[i][j] != want:
                    return None
        return s

    def nonzero_items(self):
        for i, row in enumerate(self._nnz_rows()):
            for j, s in row:
                yield i, j, s

    # -- conversions -------------------------------------------------------

    def to_numpy(self):
        import numpy as np

        return np.array(
            [[s.to_complex() for s in row] for row in self.rows], dtype=complex
        )

    def to_json(self):
        return [[s.to_json() for s in row] for row in self.rows]

    @classmethod
    def from_json(cls, obj):
        return cls([[Scalar.from_json(x) for x in row] for row in obj])

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def block_diag(m, bottom):
    """diag(m, bottom) for two equal-shaped square matrices."""
    return Matrix.block2(m, None, None, bottom, m.dim)


def anti_block(top_right, bottom_left):
    """Antidiagonal block matrix [[0, tr], [bl, 0]]."""
    return Matrix.block2(None, top_right, bottom_left, None, top_right.dim)


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a
