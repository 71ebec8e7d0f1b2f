# cohomotopy\cohomotopy\algebra\matrix.py

from typing import Iterable, List, Sequence, Tuple

Vector = Tuple[int, ...]


class IntegerMatrix:
    """Immutable integer matrix; columns index domain generators, rows codomain generators."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[int]] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Invalid matrix shape: {rows}x{cols}")
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"Matrix data does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data: Tuple[Vector, ...] = tuple(tuple(int(x) for x in row) for row in data)
        self._hash = None

    # Constructors

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntegerMatrix':
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> 'IntegerMatrix':
        return cls(size, size, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> 'IntegerMatrix':
        size = len(entries)
        return cls(size, size, [[entries[i] if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> 'IntegerMatrix':
        """Build from a list of rows; `cols` is needed only when there are no rows."""
        if cols is None:
            if not rows:
                raise ValueError("Column count required for a matrix without rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> 'IntegerMatrix':
        for column in columns:
            if len(column) != rows:
                raise ValueError(f"Column of length {len(column)} in a matrix with {rows} rows")
        return cls(rows, len(columns), [[column[i] for column in columns] for i in range(rows)])

    @classmethod
    def hstack(cls, rows: int, *blocks: 'IntegerMatrix') -> 'IntegerMatrix':
        for block in blocks:
            if block.rows != rows:
                raise ValueError(f"Cannot stack a {block.rows}-row block beside {rows} rows")
        data = [[x for block in blocks for x in block._data[i]] for i in range(rows)]
        return cls(rows, sum(block.cols for block in blocks), data)

    @classmethod
    def vstack(cls, cols: int, *blocks: 'IntegerMatrix') -> 'IntegerMatrix':
        for block in blocks:
            if block.cols != cols:
                raise ValueError(f"Cannot stack a {block.cols}-column block under {cols} columns")
        data = [row for block in blocks for row in block._data]
        return cls(len(data), cols, data)

    @classmethod
    def block_diagonal(cls, *blocks: 'IntegerMatrix') -> 'IntegerMatrix':
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    data[r0 + i][c0 + j] = block._data[i][j]
            r0 += block.rows
            c0 += block.cols
        return cls(rows, cols, data)

    # Access

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(self._data[i][j] for i in range(self.rows))

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self._data]

    def select_rows(self, indices: Iterable[int]) -> 'IntegerMatrix':
        indices = list(indices)
        return IntegerMatrix(len(indices), self.cols, [self._data[i] for i in indices])

    def select_columns(self, indices: Iterable[int]) -> 'IntegerMatrix':
        indices = list(indices)
        return IntegerMatrix(self.rows, len(indices), [[row[j] for j in indices] for row in self._data])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    # Arithmetic

    def transpose(self) -> 'IntegerMatrix':
        return IntegerMatrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
        other_cols = other.columns()
        data = [[sum(a * b for a, b in zip(row, col)) for col in other_cols] for row in self._data]
        return IntegerMatrix(self.rows, other.cols, data)

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} applied to {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self._data)

    def __add__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} + {other.shape}")
        return IntegerMatrix(self.rows, self.cols,
                             [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> 'IntegerMatrix':
        return self.scale(-1)

    def __sub__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        return self + (-other)

    def scale(self, factor: int) -> 'IntegerMatrix':
        return IntegerMatrix(self.rows, self.cols, [[factor * x for x in row] for row in self._data])

    def reduce(self, modulus: int) -> 'IntegerMatrix':
        return IntegerMatrix(self.rows, self.cols, [[x % modulus for x in row] for row in self._data])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    # Protocol

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.to_lists()})"


def unit_vector(size: int, index: int) -> Vector:
    return tuple(1 if i == index else 0 for i in range(size))


def zero_vector(size: int) -> Vector:
    return (0,) * size
