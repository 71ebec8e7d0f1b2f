# cohomotopy\cohomotopy\algebra\modp.py

from typing import List, Optional, Sequence, Tuple

import numpy as np

from .matrix import IntegerMatrix


def _as_array(rows: Sequence[Sequence[int]], shape: Tuple[int, int], prime: int) -> np.ndarray:
    array = np.zeros(shape, dtype=np.int64)
    if shape[0] and shape[1]:
        array[:, :] = np.asarray(rows, dtype=np.int64).reshape(shape)
    return array % prime


def row_reduce(matrix: np.ndarray, prime: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    a = matrix.copy() % prime
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inverse = pow(int(a[r, c]), prime - 2, prime)
        a[r] = (a[r] * inverse) % prime
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % prime
        pivots.append(c)
        r += 1
    return a, pivots


class ModPMap:
    """Linear map F_p^domain_rank → F_p^codomain_rank; column j is the image of basis vector j."""

    __slots__ = ("prime", "domain_rank", "codomain_rank", "array")

    def __init__(self, prime: int, domain_rank: int, codomain_rank: int, array: np.ndarray = None):
        self.prime = prime
        self.domain_rank = domain_rank
        self.codomain_rank = codomain_rank
        if array is None:
            array = np.zeros((codomain_rank, domain_rank), dtype=np.int64)
        if array.shape != (codomain_rank, domain_rank):
            raise ValueError(f"Array shape {array.shape} does not fit F_{prime}^{domain_rank} -> "
                             f"F_{prime}^{codomain_rank}")
        self.array = np.asarray(array, dtype=np.int64) % prime

    @classmethod
    def from_rows(cls, prime: int, domain_rank: int, codomain_rank: int,
                  rows: Sequence[Sequence[int]]) -> 'ModPMap':
        return cls(prime, domain_rank, codomain_rank, _as_array(rows, (codomain_rank, domain_rank), prime))

    @classmethod
    def from_integer_matrix(cls, prime: int, matrix: IntegerMatrix) -> 'ModPMap':
        return cls.from_rows(prime, matrix.cols, matrix.rows, matrix.to_lists())

    @classmethod
    def zero(cls, prime: int, domain_rank: int, codomain_rank: int) -> 'ModPMap':
        return cls(prime, domain_rank, codomain_rank)

    @classmethod
    def identity(cls, prime: int, rank: int) -> 'ModPMap':
        return cls(prime, rank, rank, np.eye(rank, dtype=np.int64))

    def to_integer_matrix(self) -> IntegerMatrix:
        return IntegerMatrix(self.codomain_rank, self.domain_rank, self.array.tolist())

    def compose(self, inner: 'ModPMap') -> 'ModPMap':
        """self ∘ inner."""
        if inner.codomain_rank != self.domain_rank:
            raise ValueError(f"Cannot compose F^{self.domain_rank} <- F^{inner.codomain_rank}")
        return ModPMap(self.prime, inner.domain_rank, self.codomain_rank, (self.array @ inner.array) % self.prime)

    def __matmul__(self, inner: 'ModPMap') -> 'ModPMap':
        return self.compose(inner)

    def __add__(self, other: 'ModPMap') -> 'ModPMap':
        return ModPMap(self.prime, self.domain_rank, self.codomain_rank, self.array + other.array)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModPMap):
            return NotImplemented
        return (self.prime, self.domain_rank, self.codomain_rank) == \
            (other.prime, other.domain_rank, other.codomain_rank) and bool(np.array_equal(self.array, other.array))

    __hash__ = None

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        v = np.asarray(vector, dtype=np.int64).reshape(self.domain_rank)
        return tuple(int(x) for x in (self.array @ v) % self.prime)

    def is_zero(self) -> bool:
        return not self.array.any()

    def rank(self) -> int:
        return len(row_reduce(self.array, self.prime)[1])

    def kernel_basis(self) -> np.ndarray:
        """Columns spanning the kernel."""
        reduced, pivots = row_reduce(self.array, self.prime)
        free = [c for c in range(self.domain_rank) if c not in pivots]
        basis = np.zeros((self.domain_rank, len(free)), dtype=np.int64)
        for k, f in enumerate(free):
            basis[f, k] = 1
            for r, p in enumerate(pivots):
                basis[p, k] = (-reduced[r, f]) % self.prime
        return basis

    def image_basis(self) -> np.ndarray:
        """Independent columns spanning the image."""
        pivots = row_reduce(self.array, self.prime)[1]
        return self.array[:, pivots]

    def first_nonzero_column(self) -> Optional[int]:
        for j in range(self.domain_rank):
            if self.array[:, j].any():
                return j
        return None

    def __repr__(self) -> str:
        return f"ModPMap(F_{self.prime}^{self.domain_rank} -> F_{self.prime}^{self.codomain_rank}, {self.array.tolist()})"


def span_contains(columns: np.ndarray, vector: Sequence[int], prime: int) -> bool:
    """Whether vector lies in the F_p span of the given columns."""
    v = np.asarray(vector, dtype=np.int64).reshape(-1, 1) % prime
    if columns.size == 0:
        return not v.any()
    base = len(row_reduce(columns, prime)[1])
    return len(row_reduce(np.hstack([columns, v]), prime)[1]) == base


def span_rank(columns: np.ndarray, prime: int) -> int:
    if columns.size == 0:
        return 0
    return len(row_reduce(columns, prime)[1])
