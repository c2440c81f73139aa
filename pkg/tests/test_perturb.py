"""Commuting perturbation probes and the spectral-idempotent pair toolkit."""

from fractions import Fraction

import pytest

from bfredholm.errors import InternalInconsistencyError
from bfredholm.exact import ExactMatrix
from bfredholm.families import block_diagonal_part_hom, diagonal_part_hom
from bfredholm.perturb import (
    CLASS_DRAZIN,
    CLASS_DRAZIN_SINGULAR,
    CLASS_KOLIHA,
    CLASS_KOLIHA_SINGULAR,
    build_pair,
    commutant_basis,
    nilpotent_perturbation,
    pcomm_probe,
    prop52_check,
    remark54_inverse_identity,
    riesz_equivalence,
    theorem53_check,
    theorem56_product,
)
from bfredholm.spectral import (
    Constant,
    DiagTail,
    Finite,
    diag,
    diag_classify,
    diag_constant,
    diag_tail,
    harmonic_rule,
)


@pytest.fixture(scope="module")
def hom2():
    return diagonal_part_hom(2)


@pytest.fixture(scope="module")
def worked_pair(hom2):
    """Rank-one-image pair: T(a1) = diag(2, 0), T(a2) = diag(3, 0)."""
    a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
    a2 = hom2.source.from_matrix(ExactMatrix([[3, 1], [0, 0]]))
    return build_pair(hom2, a1, a2)


def mat(e):
    return e.matrix


class TestCommutantBasis:
    def test_diagonal_with_distinct_entries(self, hom2):
        a = hom2.source.from_matrix(ExactMatrix.diagonal([1, 2]))
        comm = commutant_basis(a)
        assert len(comm) == 2
        for c in comm:
            assert c * a == a * c

    def test_scalar_commutes_with_everything(self, hom2):
        comm = commutant_basis(hom2.source.one())
        assert len(comm) == hom2.source.dim

    def test_strictly_upper_unit(self, hom2):
        e12 = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        comm = commutant_basis(e12)
        assert len(comm) == 2
        for c in comm:
            assert c * e12 == e12 * c


class TestPcommProbe:
    def test_kernel_element_consistent_for_singular_class(self, hom2):
        e12 = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        probe = pcomm_probe(e12, CLASS_DRAZIN_SINGULAR, trials=12, seed=3)
        assert probe.verdict == "consistent"
        assert probe.witness is None

    def test_identity_breaks_singular_class(self, hom2):
        probe = pcomm_probe(hom2.source.one(), CLASS_DRAZIN_SINGULAR, trials=12, seed=1)
        assert probe.verdict == "counterexample"
        s = probe.witness
        assert s * probe.candidate == probe.candidate * s

    def test_everything_consistent_for_full_classes(self, hom2):
        for tag in (CLASS_DRAZIN, CLASS_KOLIHA):
            probe = pcomm_probe(hom2.source.one(), tag, trials=8, seed=0)
            assert probe.verdict == "consistent"

    def test_relative_flag(self, hom2):
        e12 = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        assert pcomm_probe(e12, CLASS_DRAZIN, hom=hom2, trials=6, seed=0).relative
        assert not pcomm_probe(e12, CLASS_DRAZIN, trials=6, seed=0).relative

    def test_determinism(self, hom2):
        one = hom2.source.one()
        p1 = pcomm_probe(one, CLASS_KOLIHA_SINGULAR, trials=10, seed=7)
        p2 = pcomm_probe(one, CLASS_KOLIHA_SINGULAR, trials=10, seed=7)
        assert p1.verdict == p2.verdict == "counterexample"
        assert p1.witness == p2.witness

    def test_unknown_tag_rejected(self, hom2):
        with pytest.raises(ValueError, match="class tag"):
            pcomm_probe(hom2.source.one(), "weyl", trials=4, seed=0)


class TestNilpotentPerturbation:
    def test_kernel_perturbation_ok(self, hom2):
        a = hom2.source.from_matrix(ExactMatrix([[1, 0], [0, 2]]))
        b = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        report = nilpotent_perturbation(hom2, a, b)
        assert report.status == "ok"
        assert report.sum_in_class and report.spectra_equal

    def test_non_nilpotent_perturbation_refused(self, hom2):
        a = hom2.source.one()
        report = nilpotent_perturbation(hom2, a, a)
        assert report.status == "hypothesis-failed"
        assert "no power in the kernel" in report.reason

    def test_commutator_outside_kernel_refused(self):
        hom = block_diagonal_part_hom((2, 1))
        a = hom.source.from_matrix(ExactMatrix.unit(3, 0, 0))
        b = hom.source.from_matrix(ExactMatrix.unit(3, 0, 1))
        assert b * a == hom.source.zero()
        report = nilpotent_perturbation(hom, a, b)
        assert report.status == "hypothesis-failed"
        assert "commutator" in report.reason

    def test_diagonal_model_riesz_shift(self):
        d = diag(Constant(1), DiagTail(harmonic_rule(0, 1)))
        pert = diag(Constant(0), DiagTail(harmonic_rule(0, 1)))
        assert diag_classify(pert).riesz
        report = nilpotent_perturbation(None, d, pert)
        assert report.status == "ok"
        assert report.spectra_equal

    def test_diagonal_model_non_riesz_refused(self):
        d = diag_constant(1)
        report = nilpotent_perturbation(None, d, diag_constant(2))
        assert report.status == "hypothesis-failed"

    def test_diagonal_model_rejects_hom(self, hom2):
        with pytest.raises(ValueError, match="hom"):
            nilpotent_perturbation(hom2, diag_constant(1), diag_constant(0))


class TestRieszEquivalence:
    def test_kernel_element_all_four(self, hom2):
        d = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        report = riesz_equivalence(hom2, d, samples=3, seed=5)
        assert report.all_hold()
        assert report.algebraic and report.spectrum_empty

    def test_non_riesz_rejected(self, hom2):
        with pytest.raises(ValueError, match="Riesz"):
            riesz_equivalence(hom2, hom2.source.one())

    def test_diagonal_algebraic_riesz(self):
        d = diag(Finite(0, 3), Constant(0))
        report = riesz_equivalence(None, d, samples=2, seed=0)
        assert report.all_hold()

    def test_diagonal_tail_riesz_all_four(self):
        # A null tail is compact-like: its essential image is {0}, so the
        # element is Riesz with algebraic image.  Rieszness forces the
        # essential value set into {0}, so the non-algebraic branch of the
        # equivalence has no inhabitants in this model either.
        d = diag_tail(harmonic_rule(0, 1))
        report = riesz_equivalence(None, d, samples=2, seed=0)
        assert report.algebraic
        assert report.spectrum_empty
        assert report.all_hold()

    def test_diagonal_non_riesz_rejected(self):
        d = diag_tail(harmonic_rule(1, 1))
        with pytest.raises(ValueError, match="Riesz"):
            riesz_equivalence(None, d)


class TestBuildPair:
    def test_worked_values(self, hom2, worked_pair):
        pair = worked_pair
        e22 = ExactMatrix.unit(2, 1, 1)
        assert mat(pair.q) == e22
        assert mat(pair.p) == e22
        assert mat(pair.w1) == ExactMatrix([[Fraction(1, 2), 0], [0, 0]])
        assert mat(pair.w2) == ExactMatrix([[Fraction(1, 3), 0], [0, 0]])
        assert pair.pi_match

    def test_corner_identities(self, hom2, worked_pair):
        pair = worked_pair
        one = hom2.source.one()
        cp = one - pair.p
        for c in (cp * pair.a1 * pair.w1 - cp, pair.w1 * pair.a1 * cp - cp):
            assert hom2.kernel.contains(c)
            assert pair.corner(c) == c

    def test_invertible_a1_gives_zero_idempotent(self, hom2):
        a1 = hom2.source.one()
        a2 = hom2.source.from_matrix(ExactMatrix.diagonal([2, 3]))
        pair = build_pair(hom2, a1, a2)
        assert pair.q.is_zero() and pair.p.is_zero()
        assert mat(pair.w1) == ExactMatrix.diagonal([1, 1])

    def test_kernel_a1_gives_identity_idempotent(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix.unit(2, 0, 1))
        pair = build_pair(hom2, a1, a1)
        assert pair.q == hom2.target.one()
        assert pair.p == hom2.source.one()
        assert pair.w1.is_zero()

    def test_pi_mismatch_flagged(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        pair = build_pair(hom2, a1, hom2.source.one())
        assert not pair.pi_match


class TestProp52:
    def test_worked_example(self, hom2, worked_pair):
        report = prop52_check(worked_pair)
        assert mat(report.z) == ExactMatrix.diagonal([Fraction(3, 2), 1])
        assert report.z_invertible and report.shifted_fredholm
        assert report.corner_hypothesis
        assert report.corner_shifted_fredholm

    def test_zero_shift_gives_spectral_idempotent(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        pair = build_pair(hom2, a1, hom2.source.zero())
        report = prop52_check(pair)
        assert mat(report.z) == ExactMatrix.unit(2, 1, 1)
        assert not report.z_invertible
        assert not report.shifted_fredholm

    def test_identical_pair(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        pair = build_pair(hom2, a1, a1)
        report = prop52_check(pair)
        assert report.z == hom2.target.one()
        assert report.z_invertible


class TestTheorem53:
    def test_worked_example_all_equivalent(self, worked_pair):
        report = theorem53_check(worked_pair)
        assert report.conditions == (True, True, True, True)
        assert report.nilpotent_conditions == (True, True, True, True)
        assert report.holds and report.nilpotent_holds

    def test_pi_mismatch_all_fail_together(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        pair = build_pair(hom2, a1, hom2.source.one())
        report = theorem53_check(pair)
        assert report.conditions == (False, False, False, False)
        assert report.nilpotent_conditions == (False, False, False, False)


class TestRemark54:
    def test_worked_example_identities(self, worked_pair):
        report = remark54_inverse_identity(worked_pair)
        assert report.status == "ok"
        assert report.reciprocal_identity
        assert report.corner_products_inverse
        assert report.z_inverse_formula

    def test_hypothesis_failure(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        pair = build_pair(hom2, a1, hom2.source.one())
        report = remark54_inverse_identity(pair)
        assert report.status == "hypothesis-failed"
        assert "spectral idempotents differ" in report.reason


class TestTheorem56:
    def test_worked_example_product(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        a2 = hom2.source.from_matrix(ExactMatrix([[3, 1], [0, 0]]))
        report = theorem56_product(hom2, a1, a2)
        assert report.status == "ok"
        assert report.product_idempotent_matches
        assert mat(report.w12) == ExactMatrix([[Fraction(1, 6), 0], [0, 0]])
        assert report.defect.is_zero()
        assert report.identity_holds

    def test_pi_mismatch_refused(self, hom2):
        a1 = hom2.source.from_matrix(ExactMatrix([[2, 1], [0, 0]]))
        report = theorem56_product(hom2, a1, hom2.source.one())
        assert report.status == "hypothesis-failed"
        assert "spectral idempotents differ" in report.reason

    def test_commutator_outside_kernel_refused(self):
        hom = block_diagonal_part_hom((2, 1))
        a1 = hom.source.from_matrix(
            ExactMatrix([[1, 1, 0], [0, 2, 0], [0, 0, 0]])
        )
        a2 = hom.source.from_matrix(
            ExactMatrix([[2, 0, 0], [0, 1, 0], [0, 0, 0]])
        )
        comm = a1 * a2 - a2 * a1
        assert not hom.kernel.contains(comm)
        report = theorem56_product(hom, a1, a2)
        assert report.status == "hypothesis-failed"
        assert "commutator" in report.reason
