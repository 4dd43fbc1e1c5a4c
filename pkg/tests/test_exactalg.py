from fractions import Fraction

import pytest

from abelweb import Matrix, binomial, rational
from helpers import make_rng, random_invertible, random_matrix


def test_rational_parsing():
    assert rational("3/4") == Fraction(3, 4)
    assert rational("-7") == Fraction(-7)
    assert rational(" 2/6 ") == Fraction(1, 3)
    assert rational(5) == Fraction(5)
    with pytest.raises(ValueError):
        rational("1/0")
    with pytest.raises(TypeError):
        rational(0.5)


def test_binomial_conventions():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


def test_matrix_immutable_and_shape():
    m = Matrix([[1, 2], [3, 4]])
    with pytest.raises(AttributeError):
        m.rows = 5
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    assert m[1, 0] == 3
    assert m.column(1) == (Fraction(2), Fraction(4))


def test_rref_and_rank_agree():
    rng = make_rng(1)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        _, pivots = m.rref()
        assert m.rank() == len(pivots)
        assert m.rank() == m.transpose().rank()


def test_kernel_basis_canonical():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    basis = m.kernel_basis()
    assert len(basis) == 2
    # free coordinates carry 1, in increasing column order
    assert basis[0] == (Fraction(-2), Fraction(1), Fraction(0))
    assert basis[1] == (Fraction(-3), Fraction(0), Fraction(1))
    for vec in basis:
        assert m.apply(vec) == (Fraction(0),) * 2


def test_kernel_vectors_lie_in_kernel_random():
    rng = make_rng(2)
    for _ in range(20):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 7))
        for vec in m.kernel_basis():
            assert all(x == 0 for x in m.apply(vec))
        assert m.rank() + len(m.kernel_basis()) == m.cols


def test_det_inverse_solve():
    rng = make_rng(3)
    for _ in range(15):
        m = random_invertible(rng, rng.randint(1, 5))
        assert m.det() != 0
        assert m * m.inverse() == Matrix.identity(m.rows)
        rhs = [rng.randint(-5, 5) for _ in range(m.rows)]
        x = m.solve(rhs)
        assert m.apply(x) == tuple(Fraction(v) for v in rhs)
    singular = Matrix([[1, 2], [2, 4]])
    assert singular.det() == 0
    assert not singular.is_invertible()
    assert singular.solve([1, 0]) is None


def test_solve_underdetermined_canonical():
    m = Matrix([[1, 1, 1]])
    assert m.solve([3]) == (Fraction(3), Fraction(0), Fraction(0))


def test_row_space_rref_identifies_span():
    a = Matrix([[1, 2], [0, 1]])
    b = Matrix([[2, 5], [1, 2]])
    assert a.row_space_rref() == b.row_space_rref()


def test_json_round_trip():
    m = Matrix([[Fraction(1, 3), -2], [0, Fraction(7, 2)]])
    assert Matrix.from_json(m.to_json()) == m
    assert m.to_json()[0][0] == "1/3"
