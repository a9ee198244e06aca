from fractions import Fraction

from wreathsra.arith import Cyclotomic
from wreathsra.linalg import (Echelon, LinearSystem, SparseMatrix, nullspace, rank, same_row_space,
                              solve_affine)


def test_rank_and_nullspace():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert rank(rows, 3) == 2
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + 2 * v[1] == 0 and v[2] == 0


def test_cyclotomic_entries():
    z = Cyclotomic.zeta(3)
    rows = [{0: z, 1: Fraction(1)}, {0: Fraction(1), 1: z.inverse()}]
    assert rank(rows, 2) == 1


def test_same_row_space():
    assert same_row_space([[1, 1, 0]], [[2, 2, 0]], 3)
    assert not same_row_space([[1, 1, 0]], [[1, 0, 0]], 3)


def test_solve_affine():
    point, dirs = solve_affine([[1, 1], [1, -1]], [2, 0], 2)
    assert point == [1, 1] and dirs == []
    assert solve_affine([[1, 1], [1, 1]], [1, 2], 2) is None


def test_echelon_contains_is_row_space():
    e = Echelon(3)
    e.add({0: Fraction(1), 1: Fraction(1)})
    assert e.contains({0: Fraction(3), 1: Fraction(3)})
    assert not e.contains({2: Fraction(1)})


def test_linear_system_roundtrip():
    sys_ = LinearSystem()
    sys_.add_matrix_unknown("A", (2, 2))
    a = SparseMatrix.from_dense([[1, 0], [0, -1]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    # A b - b A = 0 forces A into the commutant of b
    sys_.add_matrix_equation((2, 2), [(Fraction(1), None, "A", b), (Fraction(-1), b, "A", None)])
    vec = sys_.vector_from_matrices({"A": SparseMatrix.identity(2)})
    assert sys_.satisfied_by(vec)
    assert not sys_.satisfied_by(sys_.vector_from_matrices({"A": a}))


def test_sparse_ops():
    a = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert (a @ SparseMatrix.identity(2)) == a
    assert a.trace() == 5
    assert a.kron(SparseMatrix.identity(2)).shape == (4, 4)
    assert a.transpose().to_dense() == [[1, 3], [2, 4]]
