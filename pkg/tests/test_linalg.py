from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causalcoh.linalg import MatrixQ, column_space_contains, kernel_basis, rank


def mat(rows):
    return MatrixQ.from_rows(rows)


def test_rank_identity():
    assert rank(MatrixQ.identity(2)) == 2


def test_rank_zero_matrix():
    assert rank(MatrixQ.zeros(3, 5)) == 0


def test_rank_dependent_rows():
    # hand row reduction: second row is twice the first
    assert rank(mat([[1, 2], [2, 4]])) == 1


def test_kernel_of_identity_is_empty():
    k = kernel_basis(MatrixQ.identity(3))
    assert k.shape() == (3, 0)


def test_kernel_of_zero_matrix_is_everything():
    k = kernel_basis(MatrixQ.zeros(2, 3))
    assert k.shape() == (3, 3)
    assert k.rank() == 3


def test_kernel_single_row():
    # solve by hand: x + y = 0, z free -> span{(1,-1,0), (0,0,1)}
    m = mat([[1, 1, 0]])
    k = kernel_basis(m)
    assert k.shape() == (3, 2)
    assert (m * k).is_zero()
    for v in ([1, -1, 0], [0, 0, 1]):
        assert column_space_contains(k, MatrixQ.column_vector(v))


def test_solve_particular_and_inconsistent():
    m = mat([[1, 0], [0, 0]])
    sol = m.solve(MatrixQ.column_vector([5, 0]))
    assert sol is not None and sol[0, 0] == 5 and sol[1, 0] == 0
    assert m.solve(MatrixQ.column_vector([0, 1])) is None


def test_inverse_round_trip():
    m = mat([[2, 1], [1, 1]])
    inv = m.inverse()
    assert m * inv == MatrixQ.identity(2)
    assert inv * m == MatrixQ.identity(2)


def test_exact_fractions_survive():
    m = mat([[Fraction(1, 3), Fraction(1, 6)]])
    k = kernel_basis(m)
    assert (m * k).is_zero()
    assert k[0, 0] == Fraction(-1, 2)


small_entries = st.integers(min_value=-4, max_value=4)


def matrices(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c),
                min_size=r, max_size=r).map(MatrixQ.from_rows)))


@settings(max_examples=60, derandomize=True)
@given(matrices())
def test_rank_transpose_invariant(m):
    assert m.rank() == m.transpose().rank()


@settings(max_examples=60, derandomize=True)
@given(matrices())
def test_rank_nullity(m):
    k = m.kernel_basis()
    assert (m * k).is_zero()
    assert k.rank() == k.cols  # kernel basis columns are independent
    assert m.rank() + k.cols == m.cols


@settings(max_examples=40, derandomize=True)
@given(matrices())
def test_rref_is_idempotent(m):
    r1, piv1 = m.rref()
    r2, piv2 = r1.rref()
    assert r1 == r2 and piv1 == piv2


@settings(max_examples=40, derandomize=True)
@given(matrices(max_dim=4))
def test_solve_solves(m):
    # right-hand sides built from the matrix itself are always consistent
    rhs = m * MatrixQ.from_rows([[1] for _ in range(m.cols)])
    sol = m.solve(rhs)
    assert sol is not None
    assert m * sol == rhs


def test_determinism_bit_identical():
    m = mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.rref() == m.rref()
    assert m.kernel_basis() == m.kernel_basis()
