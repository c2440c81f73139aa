"""Commuting perturbations and equal-spectral-idempotent identities.

Two groups of operations live here.

The first probes commuting perturbation classes: for a class S, an
element b qualifies when every s in S commuting with b keeps s + b
inside S.  That quantifier ranges over the whole class, so a sampler can
only ever report "consistent after N trials" or hand back an exact
counterexample; both outcomes are data, never errors.

The second group builds, for a pair of elements whose quotient images
are (generalized) Drazin invertible, the shared lifted idempotent p and
corner inverses w1, w2 in (1-p)A(1-p), then verifies the identities
tying them together: invertibility of z = 1 + T(a1)^D T(a2 - a1) versus
Fredholmness of p + w1 a2, the four-way characterization of equal
spectral idempotents (in both the Riesz and the nilpotent flavor), the
reciprocal inverse identity for w2, and the product rule w12 = w2 w1
modulo the kernel.  Every identity is checked by exact coordinate
arithmetic; under verified hypotheses a failure is a defect and raises,
while unmet hypotheses are reported as such, never silently skipped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Element, Homomorphism, invert_in_algebra, lift_idempotent
from .errors import InternalInconsistencyError
from .exact import ExactMatrix, nullspace
from .fredholm import b_spectra, is_bfredholm, is_fredholm, is_riesz, is_t_nilpotent
from .geninv import drazin, koliha_drazin
from .spectral import DiagonalElement, diag_arith, diag_classify

CLASS_DRAZIN = "drazin"
CLASS_KOLIHA = "koliha"
CLASS_DRAZIN_SINGULAR = "drazin-not-invertible"
CLASS_KOLIHA_SINGULAR = "koliha-not-invertible"
_CLASS_TAGS = (
    CLASS_DRAZIN,
    CLASS_KOLIHA,
    CLASS_DRAZIN_SINGULAR,
    CLASS_KOLIHA_SINGULAR,
)


def commutant_basis(a: Element) -> list[Element]:
    """Basis of the commutant of a inside its own algebra."""
    alg = a.algebra
    am = a.matrix
    cols = [
        (alg.basis_element(i).matrix * am - am * alg.basis_element(i).matrix).vectorize()
        for i in range(alg.dim)
    ]
    m = ExactMatrix(list(zip(*cols)))
    out = []
    for vec in nullspace(m):
        coords = tuple(vec.entries[i][0] for i in range(alg.dim))
        out.append(Element(alg, coords))
    return out


def _class_member(tag: str, hom: Homomorphism | None):
    """Membership predicate for a perturbation class, absolute or
    relative to a homomorphism.

    Every element of a finite-dimensional algebra is algebraic, hence
    Drazin (and a fortiori Koliha-Drazin) invertible; the two plain
    classes are the whole algebra, checked definitionally.  The
    "not invertible" refinements carry the actual content here.
    """

    def membership(a: Element) -> bool:
        image = hom(a) if hom is not None else a
        if tag in (CLASS_DRAZIN, CLASS_KOLIHA):
            data = drazin(image) if tag == CLASS_DRAZIN else koliha_drazin(image)
            return data is not None
        if tag in (CLASS_DRAZIN_SINGULAR, CLASS_KOLIHA_SINGULAR):
            drazin(image) if tag == CLASS_DRAZIN_SINGULAR else koliha_drazin(image)
            return invert_in_algebra(image) is None
        raise ValueError(f"unknown class tag {tag!r}")

    return membership


@dataclass(frozen=True)
class PcommProbe:
    candidate: Element
    class_tag: str
    relative: bool
    trials: int
    verdict: str  # "consistent" | "counterexample"
    witness: Element | None

    def __post_init__(self):
        if self.verdict not in ("consistent", "counterexample"):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if (self.verdict == "counterexample") != (self.witness is not None):
            raise ValueError("counterexamples need a witness, consistency must not")


def pcomm_probe(
    candidate: Element,
    class_tag: str,
    hom: Homomorphism | None = None,
    trials: int = 24,
    seed: int = 0,
) -> PcommProbe:
    """Sample commuting class members s and test whether s + candidate
    stays in the class.

    Partners are polynomials in the candidate plus seeded combinations
    of its commutant basis, filtered to class members.  A witness s is
    re-verified before being reported: s in the class, s commuting with
    the candidate, s + candidate outside the class.
    """
    if class_tag not in _CLASS_TAGS:
        raise ValueError(f"unknown class tag {class_tag!r}")
    member = _class_member(class_tag, hom)
    alg = candidate.algebra
    rng = random.Random(seed)
    comm = commutant_basis(candidate)

    def partner_stream():
        one = alg.one()
        yield alg.zero()
        yield one
        yield -one
        yield candidate
        for e in comm:
            yield e
        while True:
            choice = rng.randrange(2)
            if choice == 0:
                s = alg.zero()
                power = one
                for _ in range(3):
                    s = s + rng.randint(-3, 3) * power
                    power = power * candidate
                yield s
            else:
                s = alg.zero()
                for e in comm:
                    s = s + rng.randint(-3, 3) * e
                yield s

    tested = 0
    attempts = 0
    for s in partner_stream():
        if tested >= trials or attempts > trials * 30:
            break
        attempts += 1
        if not s.commutes_with(candidate) or not member(s):
            continue
        tested += 1
        total = s + candidate
        if not member(total):
            assert member(s) and s.commutes_with(candidate) and not member(total)
            return PcommProbe(candidate, class_tag, hom is not None, tested, "counterexample", s)
    return PcommProbe(candidate, class_tag, hom is not None, tested, "consistent", None)


# ---------------------------------------------------------------------------
# perturbation by nilpotent / Riesz parts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PerturbationReport:
    status: str  # "ok" | "hypothesis-failed"
    reason: str | None
    sum_in_class: bool | None
    spectra_equal: bool | None


def nilpotent_perturbation(hom, a, b) -> PerturbationReport:
    """Adding an almost-commuting nilpotent-class element must preserve
    the Drazin-invertible-image class and its spectrum.

    Finite backend: a, b are algebra Elements, b with a power in the
    kernel and ab - ba in the kernel.  Diagonal model: a, b are
    DiagonalElements (pass hom=None), b with essential values inside
    {0}; there the comparison is genuine set equality of descriptions.
    """
    if isinstance(a, DiagonalElement):
        if hom is not None:
            raise ValueError("the diagonal model takes no homomorphism")
        if not diag_classify(b).riesz:
            return PerturbationReport(
                "hypothesis-failed", "perturbation is not Riesz", None, None
            )
        total = diag_arith(a, b, "+")
        rec_a, rec_t = diag_classify(a), diag_classify(total)
        equal = rec_t.sigma_bf == rec_a.sigma_bf
        if not equal:
            raise InternalInconsistencyError(
                "Riesz perturbation changed the shift-class spectrum: "
                f"{rec_a.sigma_bf} vs {rec_t.sigma_bf}"
            )
        return PerturbationReport("ok", None, True, True)

    bf_a, _ = is_bfredholm(hom, a)
    if not bf_a:  # pragma: no cover - unreachable in finite dimensions
        return PerturbationReport(
            "hypothesis-failed", "base element image is not Drazin invertible", None, None
        )
    if not is_t_nilpotent(hom, b):
        return PerturbationReport(
            "hypothesis-failed", "perturbation has no power in the kernel", None, None
        )
    if not hom.kernel.contains(a * b - b * a):
        return PerturbationReport(
            "hypothesis-failed", "commutator lies outside the kernel", None, None
        )
    bf_sum, _ = is_bfredholm(hom, a + b)
    if not bf_sum:
        raise InternalInconsistencyError(
            "nilpotent-class perturbation broke Drazin invertibility of the image"
        )
    equal = b_spectra(hom, a).bfredholm == b_spectra(hom, a + b).bfredholm
    if not equal:  # pragma: no cover - both sides empty by construction
        raise InternalInconsistencyError("perturbed spectra differ")
    return PerturbationReport("ok", None, True, True)


@dataclass(frozen=True)
class RieszEquivalenceReport:
    algebraic: bool
    kernel_commuting_preserved: bool
    commuting_preserved: bool
    spectrum_empty: bool
    samples: int

    def all_hold(self) -> bool:
        return (
            self.algebraic
            and self.kernel_commuting_preserved
            and self.commuting_preserved
            and self.spectrum_empty
        )


def riesz_equivalence(hom, d, samples: int = 4, seed: int = 0) -> RieszEquivalenceReport:
    """The four equivalent faces of a quasinilpotent-image element whose
    image is algebraic: algebraicity, spectrum preservation under
    kernel-commuting and under exactly-commuting perturbation, and
    emptiness of its own shift-class spectrum.

    All four must come out together; a split would be a defect and
    raises.  Raises ValueError when d is not Riesz to begin with.
    """
    if isinstance(d, DiagonalElement):
        rec = diag_classify(d)
        if not rec.riesz:
            raise ValueError("element is not Riesz")
        # the essential image is algebraic exactly when its spectrum,
        # the essential-value set, is finite
        algebraic = (
            rec.sigma_f.is_countable()
            and not rec.sigma_f.tails()
            and not rec.sigma_f.families()
        )
        empty = rec.sigma_bf.is_empty()
        preserved = []
        for other in (
            diag_arith(d, d, "+"),
            diag_arith(d, d, "*"),
        ):
            total = diag_arith(other, d, "+")
            preserved.append(
                diag_classify(total).sigma_bf == diag_classify(other).sigma_bf
            )
        report = RieszEquivalenceReport(
            algebraic, all(preserved), all(preserved), empty, len(preserved)
        )
    else:
        if not is_riesz(hom, d):
            raise ValueError("element is not Riesz")
        # every matrix satisfies its minimal polynomial
        algebraic = True
        empty = b_spectra(hom, d).bfredholm.root_count() == 0
        rng = random.Random(seed)
        alg = hom.source
        kb = list(hom.kernel.basis)
        exact_ok: list[bool] = []
        kernel_ok: list[bool] = []
        for _ in range(samples):
            a = alg.zero()
            power = alg.one()
            for _ in range(3):
                a = a + rng.randint(-2, 2) * power
                power = power * d
            exact_ok.append(
                b_spectra(hom, a + d).bfredholm == b_spectra(hom, a).bfredholm
            )
            noisy = a
            for e in kb:
                noisy = noisy + rng.randint(-2, 2) * e
            if hom.kernel.contains(noisy * d - d * noisy):
                kernel_ok.append(
                    b_spectra(hom, noisy + d).bfredholm
                    == b_spectra(hom, noisy).bfredholm
                )
        report = RieszEquivalenceReport(
            algebraic, all(kernel_ok), all(exact_ok), empty, samples
        )
    if not report.all_hold():
        raise InternalInconsistencyError(
            f"equivalent conditions split: {report}"
        )
    return report


# ---------------------------------------------------------------------------
# shared spectral idempotents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralIdempotentPair:
    """Both elements with the lifted idempotent p over q = T(a1)^pi and
    the corner inverses w1, w2 with T(wi) = T(ai)^D.

    w2 is compressed to (1-p)A(1-p) only when T(a2)^pi equals q; with
    mismatched idempotents compression would change its image, so the
    raw preimage is kept and `pi_match` records the situation.
    """

    hom: Homomorphism
    a1: Element
    a2: Element
    q: Element
    p: Element
    w1: Element
    w2: Element
    pi_match: bool

    def corner(self, x: Element) -> Element:
        cp = self.p.algebra.one() - self.p
        return cp * x * cp


def _corner_preimage(hom: Homomorphism, target: Element, p: Element) -> Element:
    raw = hom.preimage(target)
    if raw is None:
        raise ValueError("image element has no preimage; map is not surjective")
    cp = hom.source.one() - p
    compressed = cp * raw * cp
    if hom(compressed) != target:
        raise InternalInconsistencyError(
            "corner compression changed the image of a corner element"
        )
    return compressed


def build_pair(hom: Homomorphism, a1: Element, a2: Element) -> SpectralIdempotentPair:
    """Lift q = T(a1)^pi to p and build w1, w2 in the (1-p) corner.

    Verifies the construction exactly: T(p) = q, T(wi) = T(ai)^D, and
    the corner identities (1-p)a1w1 = (1-p) + c1, w1a1(1-p) = (1-p) + c2
    with c1, c2 in the kernel intersected with the corner.
    """
    ta1, ta2 = hom(a1), hom(a2)
    d1, d2 = drazin(ta1), drazin(ta2)
    q = d1.spectral_idempotent
    p = lift_idempotent(hom, q).idempotent
    if hom(p) != q:  # pragma: no cover - lift_idempotent already verifies
        raise InternalInconsistencyError("lifted idempotent has the wrong image")
    w1 = _corner_preimage(hom, d1.inverse, p)
    pi_match = d2.spectral_idempotent == q
    if pi_match:
        w2 = _corner_preimage(hom, d2.inverse, p)
    else:
        raw = hom.preimage(d2.inverse)
        if raw is None:
            raise ValueError("image element has no preimage; map is not surjective")
        w2 = raw
    cp = hom.source.one() - p
    kernel = hom.kernel
    for c in (cp * a1 * w1 - cp, w1 * a1 * cp - cp):
        if not kernel.contains(c) or cp * c * cp != c:
            raise InternalInconsistencyError(
                "corner inverse identity failed for the base element"
            )
    return SpectralIdempotentPair(hom, a1, a2, q, p, w1, w2, pi_match)


@dataclass(frozen=True)
class Prop52Report:
    z: Element
    z_invertible: bool
    shifted_fredholm: bool
    corner_hypothesis: bool
    corner_shifted_fredholm: bool | None


def prop52_check(pair: SpectralIdempotentPair) -> Prop52Report:
    """z = 1 + T(a1)^D T(a2 - a1) is invertible exactly when p + w1 a2
    is in the Fredholm class; same for the corner variant when T(a2)
    commutes with q.  The equivalences are unconditional: disagreement
    raises."""
    hom = pair.hom
    ta1, ta2 = hom(pair.a1), hom(pair.a2)
    one_t = ta1.algebra.one()
    z = one_t + drazin(ta1).inverse * (ta2 - ta1)
    z_inv = invert_in_algebra(z) is not None
    full = is_fredholm(hom, pair.p + pair.w1 * pair.a2)
    if full != z_inv:
        raise InternalInconsistencyError(
            "invertibility of z must match Fredholmness of p + w1*a2"
        )
    corner_hyp = ta2 * pair.q == pair.q * ta2
    corner_result: bool | None = None
    if corner_hyp:
        cp = pair.p.algebra.one() - pair.p
        corner_result = is_fredholm(hom, pair.p + pair.w1 * pair.a2 * cp)
        if corner_result != z_inv:
            raise InternalInconsistencyError(
                "invertibility of z must match Fredholmness of p + w1*a2*(1-p)"
            )
    return Prop52Report(z, z_inv, full, corner_hyp, corner_result)


@dataclass(frozen=True)
class Theorem53Report:
    """The four equivalent conditions, in the Riesz flavor and in the
    nilpotent flavor (the latter characterizes the plain rather than the
    generalized class)."""

    conditions: tuple[bool, bool, bool, bool]
    nilpotent_conditions: tuple[bool, bool, bool, bool]
    holds: bool
    nilpotent_holds: bool


def _four_conditions(pair: SpectralIdempotentPair, nil_flavor: bool):
    hom = pair.hom
    a2, p, q, w1, w2 = pair.a2, pair.p, pair.q, pair.w1, pair.w2
    alg = p.algebra
    cp = alg.one() - p
    kernel = hom.kernel
    ta2 = hom(a2)

    if nil_flavor:
        member = is_bfredholm(hom, a2)[0]
        compression_small = is_t_nilpotent(hom, p * a2 * p)
    else:
        member = koliha_drazin(ta2) is not None
        compression_small = is_riesz(hom, p * a2 * p)

    same_pi = drazin(ta2).spectral_idempotent == q
    cond_i = member and same_pi

    corners_in_kernel = kernel.contains(p * a2 * cp) and kernel.contains(cp * a2 * p)
    cond_ii = corners_in_kernel and compression_small and is_fredholm(hom, p + a2)
    cond_iii = (
        corners_in_kernel
        and compression_small
        and is_fredholm(hom, p + w1 * a2 * cp)
    )
    cond_iv = (
        member
        and is_fredholm(hom, p + w1 * a2)
        and kernel.contains(w1 - (p + w1 * a2) * w2)
    )
    return (cond_i, cond_ii, cond_iii, cond_iv)


def theorem53_check(pair: SpectralIdempotentPair) -> Theorem53Report:
    """Evaluate all four equal-spectral-idempotent conditions exactly.

    Within each flavor the four are equivalent unconditionally; a split
    raises.  Both flavors are computed through their own definitions.
    """
    riesz_conds = _four_conditions(pair, nil_flavor=False)
    nil_conds = _four_conditions(pair, nil_flavor=True)
    for name, conds in (("Riesz", riesz_conds), ("nilpotent", nil_conds)):
        if len(set(conds)) != 1:
            raise InternalInconsistencyError(
                f"{name}-flavor conditions split: {conds}"
            )
    return Theorem53Report(riesz_conds, nil_conds, riesz_conds[0], nil_conds[0])


@dataclass(frozen=True)
class Remark54Report:
    status: str  # "ok" | "hypothesis-failed"
    reason: str | None
    reciprocal_identity: bool | None
    corner_products_inverse: bool | None
    z_inverse_formula: bool | None


def remark54_inverse_identity(pair: SpectralIdempotentPair) -> Remark54Report:
    """Reciprocal identity w2 = w2 a1 (1-p) w1 + d with d in the corner
    kernel, plus the two-sided inverse facts behind it: the images of
    w2 a1 (1-p) and w1 a2 (1-p) multiply to 1 - q both ways, and
    q + T(w2 a1 (1-p)) inverts z.  Needs the equal-idempotent hypothesis.
    """
    check = theorem53_check(pair)
    if not check.holds:
        return Remark54Report(
            "hypothesis-failed", "spectral idempotents differ", None, None, None
        )
    hom = pair.hom
    a1, a2, p, q, w1, w2 = pair.a1, pair.a2, pair.p, pair.q, pair.w1, pair.w2
    alg = p.algebra
    cp = alg.one() - p
    kernel = hom.kernel

    d = w2 - w2 * a1 * cp * w1
    reciprocal = kernel.contains(d) and cp * d * cp == d

    target = hom(a1).algebra
    one_t = target.one()
    left = hom(w2 * a1 * cp)
    right = hom(w1 * a2 * cp)
    products = (left * right == one_t - q) and (right * left == one_t - q)

    z = one_t + drazin(hom(a1)).inverse * (hom(a2) - hom(a1))
    z_formula = z * (q + left) == one_t and (q + left) * z == one_t

    if not (reciprocal and products and z_formula):
        raise InternalInconsistencyError(
            "reciprocal corner-inverse identities failed under a verified hypothesis"
        )
    return Remark54Report("ok", None, reciprocal, products, z_formula)


@dataclass(frozen=True)
class ProductReport:
    status: str  # "ok" | "hypothesis-failed"
    reason: str | None
    product_idempotent_matches: bool | None
    w12: Element | None
    defect: Element | None
    identity_holds: bool | None


def theorem56_product(hom: Homomorphism, a1: Element, a2: Element) -> ProductReport:
    """For commuting-mod-kernel elements with the same image spectral
    idempotent q, the product keeps q and w12 = w2 w1 modulo the kernel."""
    ta1, ta2 = hom(a1), hom(a2)
    d1, d2 = drazin(ta1), drazin(ta2)
    q = d1.spectral_idempotent
    if d2.spectral_idempotent != q:
        return ProductReport(
            "hypothesis-failed", "spectral idempotents differ", None, None, None, None
        )
    if not hom.kernel.contains(a1 * a2 - a2 * a1):
        return ProductReport(
            "hypothesis-failed", "commutator lies outside the kernel", None, None, None, None
        )
    p = lift_idempotent(hom, q).idempotent
    w1 = _corner_preimage(hom, d1.inverse, p)
    w2 = _corner_preimage(hom, d2.inverse, p)
    d12 = drazin(hom(a1 * a2))
    if d12.spectral_idempotent != q:
        raise InternalInconsistencyError(
            "product lost the shared spectral idempotent"
        )
    w12 = _corner_preimage(hom, d12.inverse, p)
    defect = w12 - w2 * w1
    holds = hom.kernel.contains(defect)
    if not holds:
        raise InternalInconsistencyError(
            "product corner inverse differs from w2*w1 beyond the kernel"
        )
    return ProductReport("ok", None, True, w12, defect, True)
