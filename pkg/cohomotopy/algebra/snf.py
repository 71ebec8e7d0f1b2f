# cohomotopy\cohomotopy\algebra\snf.py

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .matrix import IntegerMatrix, Vector


@dataclass(frozen=True)
class SmithForm:
    """U·m·V = D with U, V unimodular; `u_inv` is U⁻¹, kept so Smith generators are cheap."""
    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix
    u_inv: IntegerMatrix
    rank: int

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(self.rank))

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(x for x in self.diagonal if x > 1)


class _Reducer:
    """Working state of one reduction; U, U⁻¹ and V are updated alongside A."""

    def __init__(self, m: IntegerMatrix):
        self.r, self.c = m.rows, m.cols
        self.a = m.to_lists()
        self.u = IntegerMatrix.identity(self.r).to_lists()
        self.u_inv = IntegerMatrix.identity(self.r).to_lists()
        self.v = IntegerMatrix.identity(self.c).to_lists()

    # Row operations act on A and U; U⁻¹ receives the inverse operation on columns.

    def swap_rows(self, i: int, j: int):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]."""
        if factor == 0:
            return
        for mat in (self.a, self.u):
            src = mat[source]
            tgt = mat[target]
            for k in range(len(tgt)):
                tgt[k] += factor * src[k]
        for row in self.u_inv:
            row[source] -= factor * row[target]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def swap_cols(self, i: int, j: int):
        if i == j:
            return
        for mat in (self.a, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_col(self, target: int, source: int, factor: int):
        """col[target] += factor * col[source]."""
        if factor == 0:
            return
        for mat in (self.a, self.v):
            for row in mat:
                row[target] += factor * row[source]

    def _move_pivot(self, t: int, i: int, j: int):
        self.swap_rows(t, i)
        self.swap_cols(t, j)

    def _smallest_in_submatrix(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.r):
            for j in range(t, self.c):
                x = self.a[i][j]
                if x != 0 and (best is None or abs(x) < abs(self.a[best[0]][best[1]])):
                    best = (i, j)
        return best

    def _smallest_in_cross(self, t: int) -> Tuple[int, int]:
        best = (t, t)
        for i in range(t + 1, self.r):
            if self.a[i][t] != 0 and abs(self.a[i][t]) < abs(self.a[best[0]][best[1]]):
                best = (i, t)
        for j in range(t + 1, self.c):
            if self.a[t][j] != 0 and abs(self.a[t][j]) < abs(self.a[best[0]][best[1]]):
                best = (t, j)
        return best

    def _clear_cross(self, t: int) -> bool:
        """Reduce row t and column t against the pivot; True when both are cleared."""
        pivot = self.a[t][t]
        cleared = True
        for i in range(t + 1, self.r):
            q = self.a[i][t] // pivot
            self.add_row(i, t, -q)
            if self.a[i][t] != 0:
                cleared = False
        for j in range(t + 1, self.c):
            q = self.a[t][j] // pivot
            self.add_col(j, t, -q)
            if self.a[t][j] != 0:
                cleared = False
        return cleared

    def _non_divisible_row(self, t: int) -> Optional[int]:
        pivot = self.a[t][t]
        for i in range(t + 1, self.r):
            for j in range(t + 1, self.c):
                if self.a[i][j] % pivot != 0:
                    return i
        return None

    def run(self) -> SmithForm:
        t = 0
        while t < min(self.r, self.c):
            start = self._smallest_in_submatrix(t)
            if start is None:
                break
            self._move_pivot(t, *start)
            while True:
                if not self._clear_cross(t):
                    self._move_pivot(t, *self._smallest_in_cross(t))
                    continue
                bad_row = self._non_divisible_row(t)
                if bad_row is None:
                    break
                self.add_row(t, bad_row, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return SmithForm(
            u=IntegerMatrix(self.r, self.r, self.u),
            d=IntegerMatrix(self.r, self.c, self.a),
            v=IntegerMatrix(self.c, self.c, self.v),
            u_inv=IntegerMatrix(self.r, self.r, self.u_inv),
            rank=t,
        )


@lru_cache(maxsize=4096)
def smith_form(m: IntegerMatrix) -> SmithForm:
    """Smith normal form with deterministic minimum-absolute-value pivoting."""
    return _Reducer(m).run()


def smith_normal_form(m: IntegerMatrix) -> Tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return (U, D, V) with D = U·m·V."""
    form = smith_form(m)
    return form.u, form.d, form.v


def integer_kernel(m: IntegerMatrix) -> IntegerMatrix:
    """Basis of {x ∈ ℤ^cols : m·x = 0}, as columns."""
    form = smith_form(m)
    return form.v.select_columns(range(form.rank, m.cols))


def solve(m: IntegerMatrix, b: Sequence[int]) -> Optional[Vector]:
    """An integer solution of m·x = b, or None when b is outside the column span."""
    if len(b) != m.rows:
        raise ValueError(f"Right-hand side of length {len(b)} for {m.rows} rows")
    form = smith_form(m)
    ub = form.u.apply(b)
    y: List[int] = []
    for i, di in enumerate(form.diagonal):
        if ub[i] % di != 0:
            return None
        y.append(ub[i] // di)
    if any(x != 0 for x in ub[form.rank:]):
        return None
    y.extend([0] * (m.cols - form.rank))
    return form.v.apply(y)


def in_span(m: IntegerMatrix, b: Sequence[int]) -> bool:
    return solve(m, b) is not None
