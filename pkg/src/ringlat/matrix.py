"""Arbitrary-precision integer matrices with rows as lattice generators."""

from ringlat.errors import DimensionMismatchError, NotSquareError


class IntMatrix:
    """Dense integer matrix; row i is lattice generator b_i.

    Entries are Python ints, so there is no fixed-width arithmetic anywhere:
    every operation is exact at any magnitude.  Instances are treated as
    immutable; operations return new matrices.
    """

    __slots__ = ("_rows", "n_rows", "n_cols")

    def __init__(self, rows):
        rows = [[int(e) for e in row] for row in rows]
        n_cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != n_cols:
                raise DimensionMismatchError("ragged rows")
        self._rows = rows
        self.n_rows = len(rows)
        self.n_cols = n_cols

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n_rows, n_cols):
        return cls([[0] * n_cols for _ in range(n_rows)])

    def rows(self):
        """Entries as a fresh list of row lists."""
        return [row[:] for row in self._rows]

    def row(self, i):
        return self._rows[i][:]

    def column(self, j):
        return [row[j] for row in self._rows]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self._rows))

    def __repr__(self):
        return f"IntMatrix({self._rows!r})"

    @property
    def is_square(self):
        return self.n_rows == self.n_cols

    def require_square(self):
        if not self.is_square:
            raise NotSquareError(f"expected a square matrix, got {self.n_rows}x{self.n_cols}")

    def transpose(self):
        return IntMatrix([list(col) for col in zip(*self._rows)]) if self._rows else IntMatrix([])

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.n_cols != other.n_rows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
                )
            from ringlat._kernels import matmul

            return IntMatrix(matmul(self._rows, other._rows))
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        return IntMatrix([[c * e for e in row] for row in self._rows])

    def exact_div(self, d):
        """Divide every entry by d, requiring exactness."""
        for row in self._rows:
            for e in row:
                if e % d:
                    raise ValueError(f"entry {e} not divisible by {d}")
        return IntMatrix([[e // d for e in row] for row in self._rows])

    def divides_all(self, d):
        """True when d divides every entry."""
        return all(e % d == 0 for row in self._rows for e in row)

    def mul_vector(self, v):
        """Row vector product v @ self."""
        if len(v) != self.n_rows:
            raise DimensionMismatchError("vector length does not match row count")
        out = [0] * self.n_cols
        for vi, row in zip(v, self._rows):
            if vi:
                for j, e in enumerate(row):
                    out[j] += vi * e
        return out
