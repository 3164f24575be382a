"""Exact integer linear algebra: Hermite and Smith forms, kernels, lattices."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from genus2chow import intlinalg as la


def small_matrices(max_dim=6, bound=30):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


class TestHermite:
    @settings(max_examples=80, deadline=None)
    @given(small_matrices())
    def test_transform_and_shape(self, A):
        hf = la.hermite_normal_form(A)
        assert la.matmul(hf.transform, A) == hf.rows
        cols = [c for _, c in hf.pivots]
        assert cols == sorted(cols)
        for r, c in hf.pivots:
            pivot = hf.rows[r][c]
            assert pivot > 0
            for i in range(r):
                assert 0 <= hf.rows[i][c] < pivot
            for i in range(r + 1, len(A)):
                assert hf.rows[i][c] == 0

    @settings(max_examples=40, deadline=None)
    @given(small_matrices())
    def test_row_lattice_membership(self, A):
        hf = la.hermite_normal_form(A)
        rng = random.Random(1)
        combo = [rng.randint(-5, 5) for _ in A]
        vec = la.matvec_left(combo, A)
        assert hf.contains(vec)

    def test_canonical_basis_equality(self):
        rows_a = [[2, 0], [0, 3]]
        rows_b = [[2, 3], [2, -3], [4, 3]]
        assert la.lattice_basis(rows_a, 2) == la.lattice_basis(rows_b, 2)

    def test_reduce_is_canonical_residue(self):
        hf = la.hermite_normal_form([[2, 0], [0, 4]])
        assert hf.reduce([5, 7]) == [1, 3]


class TestSmith:
    @settings(max_examples=80, deadline=None)
    @given(small_matrices())
    def test_verify(self, A):
        snf = la.smith_normal_form(A)
        snf.verify(A)

    @settings(max_examples=20, deadline=None)
    @given(small_matrices(max_dim=5, bound=12))
    def test_unimodular_determinants(self, A):
        snf = la.smith_normal_form(A)
        assert abs(la.determinant_expansion(snf.U)) == 1
        assert abs(la.determinant_expansion(snf.V)) == 1

    def test_known_form(self):
        snf = la.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        snf.verify([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        assert snf.diagonal == [2, 2, 156]

    def test_rank_deficient(self):
        A = [[1, 2], [2, 4]]
        snf = la.smith_normal_form(A)
        snf.verify(A)
        assert snf.diagonal == [1, 0]


class TestSolveAndKernel:
    def test_solve_left_exact(self):
        A = [[2, 0, 1], [0, 3, 1]]
        v = [4, 3, 3]
        x = la.solve_left(A, v)
        assert x is not None and la.matvec_left(x, A) == v

    def test_solve_left_no_solution(self):
        assert la.solve_left([[2, 0]], [1, 0]) is None

    def test_solve_left_many(self):
        A = [[1, 1], [0, 2]]
        results = la.solve_left_many(A, [[1, 3], [2, 4], [0, 1]])
        assert results[0] == [1, 1]
        assert la.matvec_left(results[1], A) == [2, 4]
        assert results[2] is None

    @settings(max_examples=40, deadline=None)
    @given(small_matrices())
    def test_left_kernel(self, A):
        kernel = la.left_kernel(A)
        ncols = len(A[0])
        for row in kernel:
            assert la.matvec_left(row, A) == [0] * ncols
        rank = len(la.hermite_normal_form(A).pivots)
        assert len(kernel) == len(A) - rank

    def test_kernel_example(self):
        assert la.lattice_basis(la.left_kernel([[1, 2], [2, 4]]), 2) == [[2, -1]]


class TestDeterminant:
    def test_integer_determinants(self):
        assert la.determinant_expansion([[1, 2], [3, 4]]) == -2
        assert la.determinant_expansion([[3]]) == 3
        assert la.determinant_expansion(la.identity(5)) == 1

    def test_polynomial_determinant(self):
        from genus2chow.ring import Ring

        ring = Ring(("x", 1), ("y", 1))
        x, y = ring.var("x"), ring.var("y")
        det = la.determinant_expansion([[x, y], [y, x]])
        assert det == x * x - y * y

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            la.determinant_expansion([[1, 2]])
