"""Finite algebras, homomorphisms, ideals, quotients and idempotent lifting."""

from fractions import Fraction

import pytest

from bfredholm.algebra import (
    FiniteAlgebra,
    Homomorphism,
    Ideal,
    build_algebra,
    invert_in_algebra,
    lift_idempotent,
    quotient,
)
from bfredholm.errors import (
    ClosureCapError,
    LiftingUnavailableError,
    NotAHomomorphismError,
    NotInAlgebraError,
)
from bfredholm.exact import ExactMatrix
from bfredholm.families import (
    block_diagonal_part_hom,
    diagonal_algebra,
    diagonal_part_hom,
    full_matrix_algebra,
    identity_hom,
    upper_triangular_algebra,
)


class TestFiniteAlgebra:
    def test_upper_triangular_dims(self):
        u3 = upper_triangular_algebra(3)
        assert u3.dim == 6
        assert u3.ambient_dim == 3
        assert u3.one().matrix == ExactMatrix.identity(3)

    def test_from_matrix_round_trip(self):
        u2 = upper_triangular_algebra(2)
        m = ExactMatrix([[2, -7], [0, 3]])
        a = u2.from_matrix(m)
        assert a.matrix == m

    def test_from_matrix_rejects_outsiders(self):
        u2 = upper_triangular_algebra(2)
        with pytest.raises(NotInAlgebraError):
            u2.from_matrix(ExactMatrix([[1, 0], [5, 1]]))
        assert not u2.contains_matrix(ExactMatrix([[1, 0], [5, 1]]))

    def test_rejects_dependent_basis(self):
        e = ExactMatrix.identity(2)
        with pytest.raises(ValueError, match="dependent"):
            FiniteAlgebra([e, e * 2])

    def test_rejects_non_closed_basis(self):
        basis = [
            ExactMatrix.identity(2),
            ExactMatrix.unit(2, 0, 1),
            ExactMatrix.unit(2, 1, 0),
        ]
        # E12 * E21 = E11 escapes span{I, E12, E21}.
        with pytest.raises(ValueError, match="closed"):
            FiniteAlgebra(basis)

    def test_requires_identity_in_span(self):
        with pytest.raises(ValueError, match="identity"):
            FiniteAlgebra([ExactMatrix.unit(2, 0, 0)])

    def test_product_stays_coordinatized(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix([[1, 2], [0, 3]]))
        b = u2.from_matrix(ExactMatrix([[0, 1], [0, -1]]))
        assert (a * b).matrix == a.matrix * b.matrix
        assert ((a * b) - (b * a)).matrix == ExactMatrix([[0, -4], [0, 0]])
        assert not a.commutes_with(b)

    def test_scalar_action_and_powers(self):
        d2 = diagonal_algebra(2)
        a = d2.from_matrix(ExactMatrix.diagonal([2, -1]))
        assert (Fraction(1, 2) * a).matrix == ExactMatrix.diagonal(
            [1, Fraction(-1, 2)]
        )
        assert (a**3).matrix == ExactMatrix.diagonal([8, -1])
        assert (a**0).matrix == ExactMatrix.identity(2)

    def test_element_equality_and_hash(self):
        d2 = diagonal_algebra(2)
        a = d2.element([1, 2])
        b = d2.from_matrix(ExactMatrix.diagonal([1, 2]))
        assert a == b
        assert hash(a) == hash(b)
        assert a != d2.element([2, 1])


class TestBuildAlgebra:
    def test_single_nilpotent_generator(self):
        alg = build_algebra([ExactMatrix.unit(2, 0, 1)])
        assert alg.dim == 2

    def test_full_matrix_closure(self):
        gens = [ExactMatrix.unit(2, 0, 1), ExactMatrix.unit(2, 1, 0)]
        alg = build_algebra(gens)
        assert alg.dim == 4

    def test_cap_is_enforced(self):
        gens = [ExactMatrix.unit(2, 0, 1), ExactMatrix.unit(2, 1, 0)]
        with pytest.raises(ClosureCapError):
            build_algebra(gens, cap=3)

    def test_closure_is_deterministic(self):
        gens = [ExactMatrix([[1, 1], [0, 2]])]
        a1 = build_algebra(gens)
        a2 = build_algebra(gens)
        assert a1.basis == a2.basis


class TestInvertInAlgebra:
    def test_inverse_found_inside(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix([[1, 1], [0, 1]]))
        inv = invert_in_algebra(a)
        assert inv is not None
        assert inv.matrix == ExactMatrix([[1, -1], [0, 1]])
        assert (a * inv) == u2.one()

    def test_singular_gives_marker(self):
        u2 = upper_triangular_algebra(2)
        a = u2.from_matrix(ExactMatrix.diagonal([1, 0]))
        assert invert_in_algebra(a) is None

    def test_algebra_inverse_matches_ambient(self):
        # For a unital subalgebra the ambient inverse is a polynomial in
        # the element, so invertibility never depends on the ambient space.
        m3 = full_matrix_algebra(3)
        a = m3.from_matrix(ExactMatrix([[1, 2, 0], [0, 1, 1], [1, 0, 1]]))
        inv = invert_in_algebra(a)
        assert inv is not None
        assert a.matrix * inv.matrix == ExactMatrix.identity(3)


class TestIdeal:
    def test_kernel_of_diagonal_part(self):
        hom = diagonal_part_hom(3)
        k = hom.kernel
        assert k.dim == 3
        assert k.nilpotency_index == 3
        assert k.is_nilpotent()
        e12 = hom.source.from_matrix(ExactMatrix.unit(3, 0, 1))
        assert k.contains(e12)
        assert not k.contains(hom.source.one())

    def test_rejects_one_sided_span(self):
        u2 = upper_triangular_algebra(2)
        e11 = u2.from_matrix(ExactMatrix.unit(2, 0, 0))
        with pytest.raises(ValueError, match="two-sided"):
            Ideal(u2, [e11])

    def test_idempotent_ideal_is_not_nilpotent(self):
        d2 = diagonal_algebra(2)
        e2 = d2.from_matrix(ExactMatrix.diagonal([0, 1]))
        ideal = Ideal(d2, [e2])
        assert ideal.nilpotency_index is None
        assert not ideal.is_nilpotent()


class TestHomomorphism:
    def test_diagonal_part_basics(self):
        hom = diagonal_part_hom(2)
        assert hom.source.dim == 3
        assert hom.target.dim == 2
        assert hom.kernel.dim == 1
        assert hom.is_surjective
        assert hom.kernel_is_nilpotent()
        assert hom.has_lifting
        a = hom.source.from_matrix(ExactMatrix([[5, 7], [0, -2]]))
        assert hom(a).matrix == ExactMatrix.diagonal([5, -2])

    def test_identity_hom(self):
        u2 = upper_triangular_algebra(2)
        hom = identity_hom(u2)
        assert hom.kernel.dim == 0
        assert hom.is_surjective
        a = u2.from_matrix(ExactMatrix([[1, 4], [0, 2]]))
        assert hom(a) == a

    def test_block_diagonal_part(self):
        hom = block_diagonal_part_hom((2, 1))
        assert hom.source.dim == 7
        assert hom.target.dim == 5
        assert hom.kernel.dim == 2
        assert hom.has_lifting

    def test_rejects_non_unital_map(self):
        d2 = diagonal_algebra(2)
        bad = ExactMatrix([[1, 1], [0, 1]])
        with pytest.raises(NotAHomomorphismError):
            Homomorphism(d2, d2, bad)

    def test_rejects_non_multiplicative_map(self):
        # Send E12 to the first diagonal unit: unital but T(E12)^2 != 0.
        u2 = upper_triangular_algebra(2)
        d2 = diagonal_algebra(2)
        bad = ExactMatrix([[1, 1, 0], [0, 0, 1]])
        with pytest.raises(NotAHomomorphismError):
            Homomorphism(u2, d2, bad)

    def test_preimage(self):
        hom = diagonal_part_hom(3)
        b = hom.target.from_matrix(ExactMatrix.diagonal([1, 2, 3]))
        pre = hom.preimage(b)
        assert pre is not None
        assert hom(pre) == b

    def test_preimage_marker_when_not_surjective(self):
        d2 = diagonal_algebra(2)
        scalars = FiniteAlgebra([ExactMatrix.identity(2)], name="scalars")
        embed = Homomorphism(scalars, d2, ExactMatrix([[1], [1]]))
        assert not embed.is_surjective
        target = d2.from_matrix(ExactMatrix.diagonal([1, 2]))
        assert embed.preimage(target) is None


class TestQuotient:
    def test_dimensions(self):
        hom = diagonal_part_hom(2)
        q = quotient(hom)
        assert q.algebra.dim == 2
        assert q.projection.source is hom.source
        assert q.projection.is_surjective

    def test_projection_kernel_matches(self):
        hom = diagonal_part_hom(3)
        q = quotient(hom)
        assert q.projection.kernel.dim == hom.kernel.dim
        for e in hom.kernel.basis:
            assert q.projection(e).is_zero()

    def test_quotient_of_injective_hom_is_isomorphic(self):
        u2 = upper_triangular_algebra(2)
        q = quotient(identity_hom(u2))
        assert q.algebra.dim == u2.dim


class TestLiftIdempotent:
    def test_clean_preimage_needs_no_iterations(self):
        hom = diagonal_part_hom(2)
        q = hom.target.from_matrix(ExactMatrix.diagonal([0, 1]))
        res = lift_idempotent(hom, q)
        assert res.idempotent.matrix == ExactMatrix.unit(2, 1, 1)
        assert res.iterations == 0

    def test_noisy_initial_converges(self):
        hom = diagonal_part_hom(3)
        q = hom.target.from_matrix(ExactMatrix.diagonal([0, 1, 0]))
        init = hom.source.from_matrix(
            ExactMatrix.unit(3, 1, 1) + ExactMatrix.unit(3, 0, 2)
        )
        assert (init * init) != init
        res = lift_idempotent(hom, q, initial=init)
        p = res.idempotent
        assert (p * p) == p
        assert hom(p) == q
        assert res.iterations == 1

    def test_defect_squares_each_step(self):
        # Kernel of the diagonal part of U4 has nilpotency index 4, so the
        # cubic refinement needs at most ceil(log2(4)) = 2 passes.
        hom = diagonal_part_hom(4)
        q = hom.target.from_matrix(ExactMatrix.diagonal([1, 0, 1, 0]))
        noise = hom.source.from_matrix(
            ExactMatrix(
                [[0, 2, 0, -1], [0, 0, 3, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
            )
        )
        pre = hom.preimage(q)
        assert pre is not None
        res = lift_idempotent(hom, q, initial=pre + noise)
        p = res.idempotent
        assert (p * p) == p
        assert hom(p) == q
        assert res.iterations <= 2

    def test_rejects_non_idempotent_target(self):
        hom = diagonal_part_hom(2)
        a = hom.target.from_matrix(ExactMatrix.diagonal([2, 0]))
        with pytest.raises(ValueError, match="idempotent"):
            lift_idempotent(hom, a)

    def test_requires_nilpotent_kernel(self):
        d2 = diagonal_algebra(2)
        scalars = FiniteAlgebra([ExactMatrix.identity(2)], name="scalars")
        first = Homomorphism(d2, scalars, ExactMatrix([[1, 0]]))
        q = scalars.one()
        with pytest.raises(LiftingUnavailableError):
            lift_idempotent(first, q)
