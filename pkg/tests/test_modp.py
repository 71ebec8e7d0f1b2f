# cohomotopy\tests\test_modp.py

import numpy as np

from cohomotopy.algebra import IntegerMatrix, ModPMap, row_reduce, span_contains, span_rank


def test_rank_and_kernel_over_f2():
    f = ModPMap.from_rows(2, 3, 2, [[1, 1, 0], [0, 1, 1]])
    kernel = f.kernel_basis()

    assert f.rank() == 2
    assert kernel.shape == (3, 1)
    assert tuple(kernel[:, 0]) == (1, 1, 1)
    assert not (f.array @ kernel % 2).any()


def test_reduction_of_integer_matrices():
    f = ModPMap.from_integer_matrix(3, IntegerMatrix.from_rows([[3, 4], [-1, 6]]))

    assert f.array.tolist() == [[0, 1], [2, 0]]
    assert f.rank() == 2
    assert f.apply((1, 1)) == (1, 2)


def test_row_reduce_over_f3():
    reduced, pivots = row_reduce(np.array([[2, 1, 0], [1, 2, 0]]), 3)

    assert pivots == [0]
    assert reduced[0].tolist() == [1, 2, 0]
    assert not reduced[1].any()


def test_composition_and_zero():
    sq = ModPMap.from_rows(2, 2, 2, [[0, 1], [0, 0]])

    assert (sq @ sq).is_zero()
    assert sq + sq == ModPMap.zero(2, 2, 2)
    assert ModPMap.identity(2, 2) @ sq == sq
    assert sq.first_nonzero_column() == 1


def test_span_membership():
    columns = np.array([[1, 0], [1, 1], [0, 1]])

    assert span_contains(columns, (1, 0, 1), 2)
    assert not span_contains(columns, (1, 0, 0), 2)
    assert span_contains(np.zeros((3, 0), dtype=np.int64), (0, 0, 0), 2)
    assert span_rank(columns, 2) == 2
