"""Drazin, group and Koliha-Drazin inverses with frozen exact values."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfredholm.exact import ExactMatrix
from bfredholm.families import diagonal_part_hom, upper_triangular_algebra
from bfredholm.geninv import (
    drazin,
    drazin_in_algebra_span,
    group_inverse,
    is_nilpotent,
    is_quasinilpotent,
    koliha_drazin,
    matrix_drazin,
)


class TestMatrixDrazin:
    def test_diagonal_projection_like(self):
        data = matrix_drazin(ExactMatrix.diagonal([2, 0]))
        assert data.inverse == ExactMatrix.diagonal([Fraction(1, 2), 0])
        assert data.index == 1
        assert data.spectral_idempotent == ExactMatrix.diagonal([0, 1])

    def test_rank_one_upper(self):
        # a^2 = 3a, so the minimal polynomial is x(x - 3).
        a = ExactMatrix([[3, 1], [0, 0]])
        data = matrix_drazin(a)
        assert data.index == 1
        assert data.inverse == ExactMatrix(
            [[Fraction(1, 3), Fraction(1, 9)], [0, 0]]
        )
        assert data.spectral_idempotent == ExactMatrix(
            [[0, Fraction(-1, 3)], [0, 1]]
        )

    def test_invertible_reduces_to_inverse(self):
        a = ExactMatrix([[2, 1], [1, 1]])
        data = matrix_drazin(a)
        assert data.index == 0
        assert data.inverse == ExactMatrix([[1, -1], [-1, 2]])
        assert data.spectral_idempotent.is_zero()

    def test_identity(self):
        data = matrix_drazin(ExactMatrix.identity(3))
        assert data.index == 0
        assert data.inverse == ExactMatrix.identity(3)

    def test_jordan_block(self):
        data = matrix_drazin(ExactMatrix([[0, 1], [0, 0]]))
        assert data.index == 2
        assert data.inverse.is_zero()
        assert data.spectral_idempotent == ExactMatrix.identity(2)

    def test_zero_matrix_has_index_one(self):
        data = matrix_drazin(ExactMatrix.zeros(3))
        assert data.index == 1
        assert data.inverse.is_zero()

    def test_gaussian_entries(self):
        a = ExactMatrix([["i", 0], [0, 0]])
        data = matrix_drazin(a)
        assert data.inverse == ExactMatrix([["-i", 0], [0, 0]])
        assert data.index == 1

    def test_axioms_on_mixed_example(self):
        a = ExactMatrix([[1, 1, 0], [0, 0, 1], [0, 0, 0]])
        data = matrix_drazin(a)
        b = data.inverse
        assert b * a * b == b
        assert a * b == b * a
        ak = a**data.index
        assert ak * b * a == ak
        if data.index > 0:
            prev = a ** (data.index - 1)
            assert prev * b * a != prev


class TestAlgebraLevel:
    def test_drazin_wraps_matrix_result(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix([[3, 1], [0, 0]]))
        data = drazin(a)
        assert data.index == 1
        assert data.inverse.matrix == ExactMatrix(
            [[Fraction(1, 3), Fraction(1, 9)], [0, 0]]
        )
        pi = data.spectral_idempotent
        assert (pi * pi) == pi
        assert (a * pi * a * pi).matrix == (a * pi).matrix * (a * pi).matrix

    def test_group_inverse_exists_at_index_one(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix.diagonal([2, 0]))
        data = group_inverse(a)
        assert data is not None
        assert data.index == 1

    def test_group_inverse_marker_at_higher_index(self):
        u3 = upper_triangular_algebra(3)
        n = u3.from_matrix(ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
        assert group_inverse(n) is None

    def test_koliha_witness_is_nilpotent(self):
        u3 = upper_triangular_algebra(3)
        n = u3.from_matrix(ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
        kd = koliha_drazin(n)
        assert kd.drazin.index == 3
        assert is_quasinilpotent(kd.quasinilpotent_witness)
        # For a nilpotent element the Drazin inverse is zero, so the
        # witness a a^D a - a collapses to -a.
        assert kd.quasinilpotent_witness == -n

    def test_koliha_witness_zero_for_group_invertible(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix.diagonal([2, 0]))
        kd = koliha_drazin(a)
        assert kd.quasinilpotent_witness.is_zero()

    def test_drazin_commutes_with_hom(self):
        # T(a^D) solves the Drazin axioms for T(a), and the Drazin inverse
        # is unique, so the two computations must agree.
        hom = diagonal_part_hom(2)
        a = hom.source.from_matrix(ExactMatrix([[2, 5], [0, 0]]))
        assert hom(drazin(a).inverse) == drazin(hom(a)).inverse


class TestNilpotence:
    def test_quasinilpotent_examples(self):
        assert is_quasinilpotent(ExactMatrix([[0, 5], [0, 0]]))
        assert is_quasinilpotent(ExactMatrix.zeros(2))
        assert not is_quasinilpotent(ExactMatrix.identity(2))
        assert not is_quasinilpotent(ExactMatrix.diagonal([0, 3]))

    def test_nilpotent_alias(self):
        assert is_nilpotent is is_quasinilpotent


class TestSpanMembership:
    @pytest.mark.parametrize(
        "grid",
        [
            [[3, 1], [0, 0]],
            [[1, 1, 0], [0, 0, 1], [0, 0, 0]],
            [[0, 1], [0, 0]],
            [[2, 1], [1, 1]],
        ],
    )
    def test_drazin_inverse_is_polynomial_in_element(self, grid):
        n = len(grid)
        from bfredholm.families import full_matrix_algebra

        alg = full_matrix_algebra(n)
        assert drazin_in_algebra_span(alg.from_matrix(ExactMatrix(grid)))


small_entries = st.integers(min_value=-3, max_value=3)


def upper_matrices(n):
    return st.lists(
        st.lists(small_entries, min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    ).map(
        lambda rows: ExactMatrix(
            [
                [rows[i][j] if j >= i else 0 for j in range(n)]
                for i in range(n)
            ]
        )
    )


@given(upper_matrices(3))
@settings(max_examples=40, deadline=None)
def test_drazin_axioms_hold(a):
    data = matrix_drazin(a)
    b = data.inverse
    assert b * a * b == b
    assert a * b == b * a
    ak = a**data.index
    assert ak * b * a == ak
    pi = data.spectral_idempotent
    assert pi * pi == pi
    assert a * b == ExactMatrix.identity(3) - pi
