"""Exact integer matrices.

Everything in this module is computed with arbitrary-precision Python
integers; there is no floating point anywhere.  Unimodular matrices
(determinant +1 or -1) have exact integer inverses, which is what makes
conjugation of homology actions by basis changes meaningful.

>>> K = IntegerMatrix([[0, 1], [1, 0]])
>>> K * K == IntegerMatrix.identity(2)
True
>>> K.det()
-1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class IntegerMatrix:
    """An immutable matrix with exact integer entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(e) for e in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "IntegerMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence["IntegerMatrix"]]) -> "IntegerMatrix":
        """Assemble a matrix from a 2-D grid of blocks (row-major)."""
        out: list[list[int]] = []
        for block_row in grid:
            heights = {b.rows for b in block_row}
            if len(heights) != 1:
                raise ValueError("inconsistent block heights in a block row")
            for i in range(heights.pop()):
                out.append([e for b in block_row for e in b.entries[i]])
        return cls(out)

    # -- basic algebra -----------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix([[-e for e in row] for row in self.entries])

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._require_same_shape(other)
        return IntegerMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._require_same_shape(other)
        return IntegerMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerMatrix([[other * e for e in row] for row in self.entries])
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(list(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.is_square and self.entries == self.transpose().entries

    def mod(self, q: int) -> "IntegerMatrix":
        return IntegerMatrix([[e % q for e in row] for row in self.entries])

    def block(self, i0: int, j0: int, h: int, w: int) -> "IntegerMatrix":
        return IntegerMatrix([row[j0 : j0 + w] for row in self.entries[i0 : i0 + h]])

    # -- determinant and inverse --------------------------------------

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.is_square and self.det() in (1, -1)

    def inverse(self) -> "IntegerMatrix":
        """Exact inverse of a unimodular matrix.

        Elimination runs over the rationals; unimodularity guarantees the
        result is integral, which is re-checked entry by entry.
        """
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        if not self.is_unimodular():
            raise ValueError("matrix is not unimodular (det must be +1 or -1)")
        n = self.rows
        work = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if work[r][col] != 0)
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [e * inv for e in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        out = [[row[n + j] for j in range(n)] for row in work]
        if any(e.denominator != 1 for row in out for e in row):
            raise ArithmeticError("unimodular inverse came out non-integral")
        return IntegerMatrix([[int(e) for e in row] for row in out])

    # -- serialization -------------------------------------------------

    def to_lists(self) -> list[list[int]]:
        """Row-major JSON-ready form."""
        return [list(row) for row in self.entries]

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "IntegerMatrix":
        return cls(data)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.to_lists()!r})"

    def __str__(self) -> str:
        width = max(len(str(e)) for row in self.entries for e in row)
        return "\n".join(
            "[" + " ".join(str(e).rjust(width) for e in row) + "]" for row in self.entries
        )

    def _require_same_shape(self, other: "IntegerMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
