"""Exact matrix arithmetic against plain-Gauss and Laplace oracles."""

import random
from fractions import Fraction

import pytest

from gorlef.errors import NonSquareError
from gorlef.linalg import Mat, det, nullspace, pivot_columns, pivot_rows, rank

from oracles import gauss_rank, laplace_det


def F(v):
    return Fraction(v)


def mat(rows):
    return Mat([[Fraction(v) for v in r] for r in rows])


def random_mat(rng, rows, cols, box=9, den=False):
    def entry():
        num = rng.randint(-box, box)
        return Fraction(num, rng.randint(1, 4)) if den else Fraction(num)
    return Mat([[entry() for _ in range(cols)] for _ in range(rows)])


class TestDet:
    def test_hand_cases(self):
        assert det(mat([[2]])) == 2
        assert det(mat([[1, 2], [3, 4]])) == -2
        assert det(mat([[1, 2, 0], [3, 9, 6], [0, 7, 8]])) == -18
        assert det(Mat.identity(5)) == 1
        assert det(Mat.zero(4, 4)) == 0

    def test_empty_matrix(self):
        assert det(Mat([])) == 1

    def test_non_square_raises(self):
        with pytest.raises(NonSquareError):
            det(mat([[1, 2, 3], [4, 5, 6]]))

    def test_rational_entries(self):
        m = mat([[Fraction(1, 2), Fraction(1, 3)],
                 [Fraction(1, 5), Fraction(1, 7)]])
        assert det(m) == Fraction(1, 14) - Fraction(1, 15)

    def test_matches_laplace_oracle(self):
        rng = random.Random(101)
        for _ in range(60):
            n = rng.randint(1, 6)
            m = random_mat(rng, n, n, den=True)
            assert det(m) == laplace_det(m.entries)

    def test_multiplicative(self):
        rng = random.Random(102)
        for _ in range(40):
            n = rng.randint(1, 5)
            a = random_mat(rng, n, n)
            b = random_mat(rng, n, n)
            assert det(a @ b) == det(a) * det(b)

    def test_singular_with_repeated_row(self):
        rng = random.Random(103)
        for _ in range(20):
            n = rng.randint(2, 6)
            m = random_mat(rng, n, n)
            i, j = rng.sample(range(n), 2)
            m.entries[i] = list(m.entries[j])
            assert det(m) == 0


class TestRank:
    def test_hand_cases(self):
        assert rank(mat([[1, 2], [2, 4]])) == 1
        assert rank(mat([[1, 0], [0, 1]])) == 2
        assert rank(Mat.zero(3, 5)) == 0
        assert rank(mat([[0, 0, 1]])) == 1

    def test_matches_gauss_oracle(self):
        rng = random.Random(104)
        for _ in range(80):
            r = rng.randint(1, 7)
            c = rng.randint(1, 7)
            m = random_mat(rng, r, c, box=4)
            assert rank(m) == gauss_rank(m.entries)

    def test_rank_of_transpose(self):
        rng = random.Random(105)
        for _ in range(40):
            m = random_mat(rng, rng.randint(1, 6), rng.randint(1, 6), box=3)
            assert rank(m) == rank(m.transpose())

    def test_rank_bounded_by_product_factors(self):
        rng = random.Random(106)
        for _ in range(30):
            a = random_mat(rng, 4, 2)
            b = random_mat(rng, 2, 5)
            assert rank(a @ b) <= 2


class TestPivots:
    def test_pivot_columns_hand(self):
        m = mat([[1, 2, 0], [2, 4, 1]])
        assert pivot_columns(m) == [0, 2]

    def test_pivot_count_is_rank(self):
        rng = random.Random(107)
        for _ in range(40):
            m = random_mat(rng, rng.randint(1, 6), rng.randint(1, 6), box=3)
            assert len(pivot_columns(m)) == rank(m)
            assert len(pivot_rows(m)) == rank(m)

    def test_pivot_rows_are_independent(self):
        rng = random.Random(108)
        for _ in range(20):
            m = random_mat(rng, rng.randint(2, 6), rng.randint(2, 6), box=3)
            rows = pivot_rows(m)
            sub = Mat([m.entries[i] for i in rows]) if rows else Mat.zero(0, m.cols)
            if rows:
                assert rank(sub) == len(rows)


class TestNullspace:
    def test_hand_case(self):
        m = mat([[1, 1, 0], [0, 0, 1]])
        basis = nullspace(m)
        assert len(basis) == 1
        assert basis[0] == [Fraction(-1), Fraction(1), Fraction(0)]

    def test_full_rank_has_trivial_kernel(self):
        assert nullspace(Mat.identity(4)) == []

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(109)
        for _ in range(40):
            m = random_mat(rng, rng.randint(1, 6), rng.randint(1, 6), box=3)
            basis = nullspace(m)
            assert len(basis) == m.cols - rank(m)
            for v in basis:
                for row in m.entries:
                    assert sum(a * b for a, b in zip(row, v)) == 0


class TestMat:
    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            Mat([[Fraction(1)], [Fraction(1), Fraction(2)]])

    def test_matmul_shapes(self):
        a = mat([[1, 2, 3]])
        b = mat([[1], [1], [1]])
        assert (a @ b).entries == [[Fraction(6)]]
        with pytest.raises(ValueError):
            b @ b  # 3x1 times 3x1

    def test_transpose_involution(self):
        m = mat([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().transpose() == m
