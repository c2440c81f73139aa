"""Seeded verification suite over the theorem catalogue.

Every statement the library implements is re-checked here on randomly
generated instances: inclusion chains between the element classes, the
regularity and spectral-mapping properties of the generalized classes,
commuting perturbation results, and the spectral-idempotent machinery.
A run is fully determined by its TrialPlan; reports render byte for
byte identically for equal plans.

Checks are exact.  A failure record always carries a replayable witness
(family name plus the coordinate vectors of every element involved).
Statements whose hypothesis class has no members on these backends are
reported as skipped with a machine-readable reason, never silently
dropped: quasinilpotent coincides with nilpotent in finite dimension,
so anything that needs a quasinilpotent-not-nilpotent image is
unrealizable here.

Budget convention: `trials` is the per-statement instance budget,
divided evenly across the algebra families of the plan.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Element,
    FiniteAlgebra,
    Homomorphism,
    build_algebra,
    invert_in_algebra,
    lift_idempotent,
)
from .errors import DiagonalAlignmentError, InternalInconsistencyError
from .exact import ExactMatrix, ExactPolynomial, GR, GaussianRational, bezout, solve_linear
from .exact.matrix import apply_poly, char_poly, minimal_polynomial
from .families import block_diagonal_part_hom, diagonal_part_hom
from .fredholm import (
    b_spectra,
    gbf_characterization_check,
    is_bfredholm,
    is_browder,
    is_fredholm,
    is_gbf,
    is_riesz,
    is_t_nilpotent,
    is_weyl,
    kernel_commutant_basis,
    spectrum,
)
from .geninv import drazin, is_nilpotent, is_quasinilpotent, koliha_drazin
from .perturb import (
    CLASS_DRAZIN,
    CLASS_DRAZIN_SINGULAR,
    CLASS_KOLIHA,
    CLASS_KOLIHA_SINGULAR,
    build_pair,
    nilpotent_perturbation,
    pcomm_probe,
    prop52_check,
    remark54_inverse_identity,
    riesz_equivalence,
    theorem53_check,
    theorem56_product,
)
from .spectral import (
    Constant,
    DiagTail,
    DiagonalElement,
    Finite,
    acc,
    bivariate,
    diag,
    diag_arith,
    diag_classify,
    diag_family,
    diag_tail,
    harmonic_rule,
)

__all__ = [
    "ALL_TAGS",
    "FailureRecord",
    "SkipRecord",
    "SuiteReport",
    "TheoremResult",
    "TrialPlan",
    "generate_commuting_pair",
    "generate_element",
    "generate_idempotent",
    "generate_kernel_element",
    "render_report",
    "run_suite",
]


# ---------------------------------------------------------------------------
# plans, results, reports
# ---------------------------------------------------------------------------


MATRIX_FAMILIES = ("u2", "u3", "block", "random_closed")
ALL_FAMILIES = MATRIX_FAMILIES + ("diagonal_model",)

ALL_TAGS = tuple(
    [f"R2.5({r})" for r in "i ii iii iv v vi vii viii ix x".split()]
    + [f"T3.2({r})" for r in "i ii iii iv v vi vii".split()]
    + [f"T3.3({r})" for r in "i ii".split()]
    + [f"T3.4({r})" for r in "i ii iii iv v vi vii viii ix x xi xii xiii xiv xv".split()]
    + [f"T3.5({r})" for r in "i ii iii iv v vi vii viii ix".split()]
    + ["P4.1", "T4.2", "C4.3", "R4.4", "T4.5", "T4.6", "C4.7", "C4.8", "T4.9"]
    + ["R5.1", "P5.2", "T5.3", "R5.4", "T5.5", "T5.6"]
)


@dataclass(frozen=True)
class TrialPlan:
    """Everything that determines a suite run.

    families may mix matrix families (u2, u3, block, random_closed) with
    the diagonal_model; statements consume the family kinds they apply
    to.  theorem_filter, when nonempty, restricts the run to exactly the
    listed tags.
    """

    seed: int = 0
    trials: int = 24
    max_ambient_dim: int = 6
    families: tuple[str, ...] = ("u2", "u3", "block")
    theorem_filter: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        object.__setattr__(self, "theorem_filter", tuple(self.theorem_filter))
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        for f in self.families:
            if f not in ALL_FAMILIES:
                raise ValueError(f"unknown algebra family {f!r}")
        for t in self.theorem_filter:
            if t not in ALL_TAGS:
                raise ValueError(f"unknown theorem tag {t!r}")


@dataclass(frozen=True)
class FailureRecord:
    """One refuted instance; witness maps element names to coordinate dumps."""

    family: str
    detail: str
    witness: tuple[tuple[str, tuple[str, ...]], ...]


@dataclass(frozen=True)
class SkipRecord:
    reason: str  # machine-readable slug
    detail: str


@dataclass(frozen=True)
class TheoremResult:
    tag: str
    instances: int
    failures: tuple[FailureRecord, ...]
    skipped: tuple[SkipRecord, ...]

    @property
    def failed(self) -> bool:
        return bool(self.failures)


@dataclass(frozen=True)
class SuiteReport:
    plan: TrialPlan
    results: tuple[TheoremResult, ...]
    family_notes: tuple[str, ...]

    @property
    def total_instances(self) -> int:
        return sum(r.instances for r in self.results)

    @property
    def total_failures(self) -> int:
        return sum(len(r.failures) for r in self.results)

    @property
    def all_passed(self) -> bool:
        return self.total_failures == 0


def _dump(e: Element) -> tuple[str, ...]:
    return tuple(str(c) for c in e.coords)


class _Run:
    """Accumulator for one tag."""

    def __init__(self, tag: str):
        self.tag = tag
        self.instances = 0
        self.failures: list[FailureRecord] = []
        self.skips: list[SkipRecord] = []

    def ok(self, n: int = 1) -> None:
        self.instances += n

    def check(self, cond: bool, family: str, detail: str, **elements: Element) -> None:
        self.instances += 1
        if not cond:
            witness = tuple(
                (name, _dump(e)) for name, e in sorted(elements.items())
            )
            self.failures.append(FailureRecord(family, detail, witness))

    def fail(self, family: str, detail: str, **elements: Element) -> None:
        witness = tuple((name, _dump(e)) for name, e in sorted(elements.items()))
        self.failures.append(FailureRecord(family, detail, witness))

    def skip(self, reason: str, detail: str) -> None:
        self.skips.append(SkipRecord(reason, detail))

    def result(self) -> TheoremResult:
        return TheoremResult(
            self.tag, self.instances, tuple(self.failures), tuple(self.skips)
        )


# ---------------------------------------------------------------------------
# families and generators
# ---------------------------------------------------------------------------


def _random_closed_hom(seed: int) -> Homomorphism:
    """Diagonal-part homomorphism restricted to a random closed subalgebra
    of the 4x4 upper triangular matrices (generated from seeded sparse
    matrices, closed under products, containing the identity)."""
    rng = random.Random(f"{seed}|random_closed")
    n = 4
    gens = []
    for _ in range(2):
        entries = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if rng.random() < 0.4:
                    entries[i][j] = rng.randint(-2, 2)
        gens.append(ExactMatrix(entries))
    source = build_algebra(gens, name="R4")
    diag_parts = [
        ExactMatrix.diagonal([b[i, i] for i in range(n)]) for b in source.basis
    ]
    target = build_algebra(diag_parts, name="R4diag")
    cols = [
        target.from_matrix(
            ExactMatrix.diagonal([b[i, i] for i in range(n)])
        ).coords
        for b in source.basis
    ]
    return Homomorphism(
        source, target, ExactMatrix(list(zip(*cols))), name="R4->diag"
    )


def _build_hom(name: str, plan: TrialPlan) -> Homomorphism:
    if name == "u2":
        return diagonal_part_hom(2)
    if name == "u3":
        return diagonal_part_hom(3)
    if name == "block":
        return block_diagonal_part_hom((2, 1))
    if name == "random_closed":
        return _random_closed_hom(plan.seed)
    raise ValueError(f"unknown matrix family {name!r}")


def _scalar_draw(rng: random.Random) -> GaussianRational:
    re = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
    if rng.random() < 0.2:
        return GaussianRational(re, Fraction(rng.randint(-2, 2)))
    return GaussianRational(re, Fraction(0))


def generate_element(rng: random.Random, algebra: FiniteAlgebra) -> Element:
    """Random element with small exact coordinates (re in {-3..3}/{1,2},
    occasional small imaginary parts)."""
    return algebra.element([_scalar_draw(rng) for _ in range(algebra.dim)])


def generate_kernel_element(rng: random.Random, hom: Homomorphism) -> Element:
    c = hom.source.zero()
    for b in hom.kernel.basis:
        c = c + rng.randint(-3, 3) * b
    return c


def generate_idempotent(rng: random.Random, hom: Homomorphism) -> Element:
    """Idempotent in the source algebra: a lift of the spectral idempotent
    of the image of a random draw (occasionally 0 or 1)."""
    roll = rng.random()
    if roll < 0.1:
        return hom.source.zero()
    if roll < 0.2:
        return hom.source.one()
    q = drazin(hom(generate_element(rng, hom.source))).spectral_idempotent
    return lift_idempotent(hom, q).idempotent


def generate_commuting_pair(
    rng: random.Random, algebra: FiniteAlgebra
) -> tuple[Element, Element]:
    """(a, b) with ab = ba: b is a random polynomial in a."""
    a = generate_element(rng, algebra)
    b = _poly_element(_random_poly(rng, max_degree=2), a)
    return a, b


def _random_poly(rng: random.Random, max_degree: int = 2) -> ExactPolynomial:
    coeffs = [GR.coerce(rng.randint(-3, 3)) for _ in range(max_degree + 1)]
    return ExactPolynomial(coeffs)


def _poly_element(p: ExactPolynomial, a: Element) -> Element:
    out = a.algebra.zero()
    for k in range(p.degree + 1):
        c = p.coeff(k)
        if not c.is_zero():
            out = out + c * (a**k)
    return out


def _diag_samples(rng: random.Random, count: int) -> list[DiagonalElement]:
    """Seeded diagonal-model elements drawn from a structured catalogue."""
    out: list[DiagonalElement] = []
    for _ in range(count):
        c = Fraction(rng.randint(-3, 3))
        roll = rng.randrange(5)
        if roll == 0:
            out.append(diag_tail(harmonic_rule(c, 1)))
        elif roll == 1:
            out.append(diag(Constant(c), DiagTail(harmonic_rule(0, 1))))
        elif roll == 2:
            out.append(diag_family(bivariate({(1, 0): 1, (0, 1): 1})))
        elif roll == 3:
            out.append(diag(Finite(c, rng.randint(1, 3)), Constant(rng.randint(-2, 2))))
        else:
            out.append(diag_tail(harmonic_rule(c, rng.choice((1, -1, 2)))))
    return out


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------


def _rng_for(plan: TrialPlan, tag: str, family: str) -> random.Random:
    return random.Random(f"{plan.seed}|{tag}|{family}")


def _subset(s1, s2) -> bool:
    """Exact subset test for spectral sets via normalized unions.

    Sound: a True answer always means containment.  Complete on the sets
    this suite produces (closures and accumulation sets of the catalogue
    grammar), where the canonical normal form recognizes absorption."""
    return (s1 | s2) == s2


def _sigma_d_empty_at_rational_points(a: Element) -> bool:
    one = a.algebra.one()
    for lam, _ in spectrum(a).explicit_points():
        drazin(a - lam * one)
    return True


def _left_inverse(a: Element) -> Element | None:
    """Solve x a = 1 inside the algebra; exact linear system in coords."""
    alg = a.algebra
    cols = [(alg.basis_element(i) * a).matrix.vectorize() for i in range(alg.dim)]
    m = ExactMatrix(list(zip(*cols)))
    rhs = ExactMatrix.column(alg.one().matrix.vectorize())
    sol = solve_linear(m, rhs)
    if sol is None:
        return None
    return alg.element([sol.particular[i, 0] for i in range(alg.dim)])


def _right_inverse(a: Element) -> Element | None:
    alg = a.algebra
    cols = [(a * alg.basis_element(i)).matrix.vectorize() for i in range(alg.dim)]
    m = ExactMatrix(list(zip(*cols)))
    rhs = ExactMatrix.column(alg.one().matrix.vectorize())
    sol = solve_linear(m, rhs)
    if sol is None:
        return None
    return alg.element([sol.particular[i, 0] for i in range(alg.dim)])


_QNIL_EMPTY = (
    "empty-hypothesis-class",
    "quasinilpotent equals nilpotent in finite dimension, so the class "
    "of quasinilpotent-not-nilpotent images has no members",
)


# ---------------------------------------------------------------------------
# checkers: chapter 2 inclusions
# ---------------------------------------------------------------------------


def _iterate(plan: TrialPlan, homs, run: _Run):
    """Yield (family, hom, rng, budget) for each matrix family."""
    if not homs:
        return
    per = max(1, plan.trials // len(homs))
    for fam, hom in homs:
        yield fam, hom, _rng_for(plan, run.tag, fam), per


def _check_r25(item: str, plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            c = generate_kernel_element(rng, hom)
            if item == "i":
                fred = is_fredholm(hom, a)
                bf = is_bfredholm(hom, a)[0]
                gbf = is_gbf(hom, a)
                run.check(
                    (not fred or bf) and (not bf or gbf),
                    fam,
                    "class inclusion F <= BF <= GBF violated",
                    a=a,
                )
            elif item == "ii":
                run.check(
                    is_bfredholm(hom, a + c)[0] and is_bfredholm(hom, (a + c) - c)[0],
                    fam,
                    "BF class not stable under kernel translation",
                    a=a,
                    c=c,
                )
            elif item == "iii":
                wd = is_weyl(hom, a, seed=rng.randrange(1000))
                ok = True
                if wd.member:
                    b, k = wd.witness
                    # the witness regular part must be Drazin (hence KD)
                    drazin(b)
                    koliha_drazin(b)
                    ok = hom.kernel.contains(k)
                run.check(ok, fam, "Weyl witness fails the BW/GBW ladder", a=a)
            elif item == "iv":
                drazin(a)
                koliha_drazin(a)
                run.check(
                    is_bfredholm(hom, a)[0] and is_gbf(hom, a),
                    fam,
                    "Drazin/KD element escapes the generalized classes",
                    a=a,
                )
            elif item == "v":
                run.check(
                    is_gbf(hom, a + c) and is_gbf(hom, (a + c) - c),
                    fam,
                    "GBF class not stable under kernel translation",
                    a=a,
                    c=c,
                )
            elif item == "vi":
                drazin(a)
                koliha_drazin(a)
                run.check(
                    is_gbf(hom, a),
                    fam,
                    "KD element not generalized B-Fredholm",
                    a=a,
                )
            elif item in ("vii", "viii", "ix", "x"):
                rec = b_spectra(hom, a, seed=rng.randrange(1000), samples=1)
                empty = all(
                    s.is_empty()
                    for s in (rec.bfredholm, rec.bweyl, rec.bbrowder, rec.gbf, rec.gbw, rec.gbb)
                )
                run.check(
                    empty and _sigma_d_empty_at_rational_points(a),
                    fam,
                    "generalized spectra chain not empty on a finite backend",
                    a=a,
                )
    if item in ("vii", "x") and diags is not None:
        for d in diags:
            rec = diag_classify(d)
            if item == "vii":
                cond = _subset(rec.sigma_gbf, rec.sigma_bf) and _subset(
                    rec.sigma_bf, rec.sigma_f
                )
            else:
                kd = acc(d.sigma())
                cond = _subset(rec.sigma_gbf, kd)
            run.instances += 1
            if not cond:
                run.failures.append(
                    FailureRecord(
                        "diagonal_model",
                        "spectral inclusion chain violated",
                        (("d", (str(d),)),),
                    )
                )


# ---------------------------------------------------------------------------
# checkers: chapter 3 statements
# ---------------------------------------------------------------------------


def _check_t32(item: str, plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            if item == "i":
                # regularity: power property plus the Bezout product property
                for n in (2, 3):
                    run.check(
                        is_bfredholm(hom, a)[0] == is_bfredholm(hom, a**n)[0]
                        and is_gbf(hom, a) == is_gbf(hom, a**n),
                        fam,
                        f"power property fails at exponent {n}",
                        a=a,
                    )
                alpha, beta = rng.sample(range(-2, 3), 2)
                p = ExactPolynomial([-alpha, 1]) ** rng.randint(1, 2)
                q = ExactPolynomial([-beta, 1])
                u, v = bezout(p, q)
                x = generate_element(rng, hom.source)
                pa, qa = _poly_element(p, x), _poly_element(q, x)
                ua, va = _poly_element(u, x), _poly_element(v, x)
                run.check(
                    pa * ua + qa * va == hom.source.one()
                    and is_bfredholm(hom, pa * qa)[0]
                    == (is_bfredholm(hom, pa)[0] and is_bfredholm(hom, qa)[0]),
                    fam,
                    "Bezout product property fails",
                    x=x,
                )
            elif item == "ii":
                # polynomial spectral mapping of the Fredholm spectrum;
                # the generalized spectra are empty and map to empty
                f = _random_poly(rng, max_degree=2)
                if f.degree < 1:
                    f = f + ExactPolynomial.x()
                fa = _poly_element(f, a)
                ta, tfa = hom(a).matrix, hom(fa).matrix
                img = sorted(
                    {str(f.evaluate(lam)) for lam, _ in spectrum(ta).explicit_points()}
                )
                direct = sorted(
                    {str(lam) for lam, _ in spectrum(tfa).explicit_points()}
                )
                rational_only = (
                    sum(m for _, m in spectrum(ta).explicit_points())
                    == char_poly(ta).degree
                    and sum(m for _, m in spectrum(tfa).explicit_points())
                    == char_poly(tfa).degree
                )
                run.check(
                    (not rational_only) or img == direct,
                    fam,
                    "polynomial image of the Fredholm spectrum disagrees",
                    a=a,
                )
            elif item == "vi":
                b = generate_element(rng, hom.source)
                run.check(
                    char_poly(hom(a * b).matrix) == char_poly(hom(b * a).matrix)
                    and is_bfredholm(hom, a * b)[0] == is_bfredholm(hom, b * a)[0],
                    fam,
                    "product commutation of the spectra fails",
                    a=a,
                    b=b,
                )
            elif item == "iv":
                rec = b_spectra(hom, a, seed=0, samples=1)
                mp = minimal_polynomial(hom(a).matrix)
                run.check(
                    rec.bfredholm.is_empty()
                    and apply_poly(mp, hom(a).matrix).is_zero(),
                    fam,
                    "empty degree spectrum must match an algebraic image",
                    a=a,
                )
            elif item in ("iii", "v", "vii"):
                rec = b_spectra(hom, a, seed=0, samples=1)
                run.check(
                    rec.bfredholm.is_empty() and rec.gbf.is_empty(),
                    fam,
                    "generalized spectra not empty on a finite backend",
                    a=a,
                )
    if diags is None:
        return
    for idx, d in enumerate(diags):
        rec = diag_classify(d)
        label = (("d", (str(d),)),)
        if item == "i":
            try:
                sq = diag_arith(d, d, "*")
            except DiagonalAlignmentError:
                continue
            run.instances += 1
            if diag_classify(sq).bfredholm_at_0 != rec.bfredholm_at_0:
                run.failures.append(
                    FailureRecord(
                        "diagonal_model", "power property fails at 0", label
                    )
                )
        elif item == "iii":
            run.instances += 1
            if not (
                _subset(acc(rec.sigma_bf), rec.sigma_bf)
                and _subset(acc(rec.sigma_gbf), rec.sigma_gbf)
            ):
                run.failures.append(
                    FailureRecord(
                        "diagonal_model", "degree spectra are not closed", label
                    )
                )
        elif item == "iv":
            finite_f = (
                rec.sigma_f.is_countable()
                and not rec.sigma_f.tails()
                and not rec.sigma_f.families()
            )
            run.instances += 1
            if rec.sigma_bf.is_empty() != finite_f:
                run.failures.append(
                    FailureRecord(
                        "diagonal_model",
                        "empty degree spectrum must match finite essential values",
                        label,
                    )
                )
        elif item == "v":
            run.instances += 1
            if rec.sigma_gbf.is_empty() != acc(rec.sigma_f).is_empty():
                run.failures.append(
                    FailureRecord(
                        "diagonal_model",
                        "generalized emptiness must match accumulation emptiness",
                        label,
                    )
                )
        elif item == "vi":
            other = diags[(idx + 1) % len(diags)]
            try:
                ab = diag_arith(d, other, "*")
                ba = diag_arith(other, d, "*")
            except DiagonalAlignmentError:
                continue
            run.instances += 1
            if diag_classify(ab).sigma_bf != diag_classify(ba).sigma_bf:
                run.failures.append(
                    FailureRecord(
                        "diagonal_model", "product commutation fails", label
                    )
                )
        elif item == "vii":
            run.instances += 1
            flags = {
                rec.sigma_bf.is_countable(),
                rec.sigma_gbf.is_countable(),
                rec.sigma_f.is_countable(),
            }
            if len(flags) != 1:
                run.failures.append(
                    FailureRecord(
                        "diagonal_model", "countability transfer fails", label
                    )
                )


def _check_t33(item: str, plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        if not hom.has_lifting:
            run.skip(
                "no-lifting",
                f"family {fam}: homomorphism has no lifting property",
            )
            continue
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            rep = gbf_characterization_check(hom, a)
            if item == "i":
                run.check(
                    rep.member and rep.forward_holds and rep.converse_holds,
                    fam,
                    "idempotent criterion (Riesz flavor) fails",
                    a=a,
                )
            else:
                run.check(
                    rep.member and all(rep.nilpotent_conditions.values()),
                    fam,
                    "idempotent criterion (nilpotent flavor) fails",
                    a=a,
                )


def _check_t34(item: str, plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        one = hom.source.one()
        zero = hom.source.zero()
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            c = generate_kernel_element(rng, hom)
            if item == "i":
                tc = hom(c)
                run.check(
                    tc.is_zero() and is_bfredholm(hom, c)[0],
                    fam,
                    "kernel element escapes T^{-1}(idempotents) or BF",
                    c=c,
                )
            elif item == "ii":
                p = generate_idempotent(rng, hom)
                tp = hom(p)
                run.check(
                    p * p == p and tp * tp == tp and is_bfredholm(hom, p)[0],
                    fam,
                    "idempotent fails the image-idempotent/BF chain",
                    p=p,
                )
            elif item == "iii":
                run.check(
                    (not is_fredholm(hom, a) or is_bfredholm(hom, a)[0])
                    and is_bfredholm(hom, zero)[0]
                    and not is_fredholm(hom, zero),
                    fam,
                    "F subset of BF not proper",
                    a=a,
                )
            elif item == "iv":
                run.check(
                    not is_weyl(hom, zero).member,
                    fam,
                    "zero must separate BW from W",
                    a=a,
                )
            elif item == "v":
                run.check(
                    not is_browder(hom, zero).member,
                    fam,
                    "zero must separate BB from B",
                    a=a,
                )
            elif item == "vi":
                p = generate_idempotent(rng, hom)
                if hom(p) == hom.target.one():
                    continue
                run.check(
                    is_bfredholm(hom, p)[0] and not is_fredholm(hom, p),
                    fam,
                    "idempotent with non-identity image must be BF-not-F",
                    p=p,
                )
            elif item == "vii":
                run.check(
                    hom.kernel.contains(a * c - c * a)
                    and is_bfredholm(hom, a * c)[0],
                    fam,
                    "kernel-commuting product escapes BF",
                    a=a,
                    c=c,
                )
            elif item == "viii":
                b = a - c
                ok = True
                for n in (2, 3):
                    ok = ok and hom.kernel.contains(a**n - b**n)
                run.check(ok, fam, "power of a BW decomposition drifts", a=a, c=c)
            elif item == "ix":
                # commuting decomposition: a is a polynomial in the kernel
                # element c, so c itself is a commuting kernel part
                ap = _poly_element(_random_poly(rng, 2), c)
                b = ap - c
                ok = b * c == c * b
                for n in (2, 3):
                    z = ap**n - b**n
                    ok = ok and hom.kernel.contains(z) and b**n * z == z * b**n
                run.check(ok, fam, "power of a BB decomposition drifts", c=c)
            elif item in ("x", "xi"):
                p = generate_idempotent(rng, hom)
                for cand in (zero, p * a, a):
                    dec = (
                        is_weyl(hom, cand, seed=rng.randrange(1000))
                        if item == "x"
                        else is_browder(hom, cand, seed=rng.randrange(1000))
                    )
                    if dec.member:
                        continue
                    run.check(
                        is_bfredholm(hom, cand)[0] and not is_fredholm(hom, cand),
                        fam,
                        "BW/BB-not-W/B element must be BF-not-F",
                        cand=cand,
                    )
            elif item == "xii":
                if drazin(hom(a)).index > 1:
                    continue
                pi = drazin(a).spectral_idempotent
                b = a * (one - pi)
                cc = a * pi
                run.check(
                    b + cc == a
                    and b * cc == cc * b
                    and hom.kernel.contains(cc)
                    and drazin(b).index <= 1,
                    fam,
                    "group-index element lacks a degree-one Browder split",
                    a=a,
                )
            elif item in ("xiii", "xiv"):
                if item == "xiv":
                    kc = kernel_commutant_basis(hom, a)
                    cc = zero
                    for e in kc:
                        cc = cc + rng.randint(-2, 2) * e
                else:
                    cc = c
                run.check(
                    _sigma_d_empty_at_rational_points(a + cc),
                    fam,
                    "shifted element has nonempty Drazin spectrum",
                    a=a,
                )
            elif item == "xv":
                rec = b_spectra(hom, a, seed=0, samples=1)
                run.check(
                    rec.bweyl.is_empty() and rec.bbrowder.is_empty(),
                    fam,
                    "BW/BB spectra must be empty here",
                    a=a,
                )


def _check_t35(item: str, plan, homs, diags, run: _Run) -> None:
    if item == "i":
        run.skip(*_QNIL_EMPTY)
        return
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        zero = hom.source.zero()
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            c = generate_kernel_element(rng, hom)
            if item == "ii":
                run.check(
                    hom.kernel.contains(a * c - c * a) and is_gbf(hom, a * c),
                    fam,
                    "kernel-commuting product escapes GBF",
                    a=a,
                    c=c,
                )
            elif item == "iii":
                b = a - c
                koliha_drazin(b)
                ok = all(hom.kernel.contains(a**n - b**n) for n in (2, 3))
                run.check(ok, fam, "power of a GBW decomposition drifts", a=a, c=c)
            elif item == "iv":
                ap = _poly_element(_random_poly(rng, 2), c)
                b = ap - c
                koliha_drazin(b)
                ok = b * c == c * b and all(
                    hom.kernel.contains(ap**n - b**n) for n in (2, 3)
                )
                run.check(ok, fam, "power of a GBB decomposition drifts", c=c)
            elif item in ("v", "vi"):
                p = generate_idempotent(rng, hom)
                for cand in (zero, p * a, a):
                    dec = (
                        is_weyl(hom, cand, seed=rng.randrange(1000))
                        if item == "v"
                        else is_browder(hom, cand, seed=rng.randrange(1000))
                    )
                    if dec.member:
                        continue
                    run.check(
                        is_gbf(hom, cand) and not is_fredholm(hom, cand),
                        fam,
                        "GBW/GBB-not-W/B element must be GBF-not-F",
                        cand=cand,
                    )
            elif item in ("vii", "viii"):
                if item == "viii":
                    kc = kernel_commutant_basis(hom, a)
                    cc = zero
                    for e in kc:
                        cc = cc + rng.randint(-2, 2) * e
                else:
                    cc = c
                shifted = a + cc
                one = hom.source.one()
                for lam, _ in spectrum(shifted).explicit_points():
                    koliha_drazin(shifted - lam * one)
                run.ok()
            elif item == "ix":
                rec = b_spectra(hom, a, seed=0, samples=1)
                run.check(
                    rec.gbw.is_empty() and rec.gbb.is_empty(),
                    fam,
                    "GBW/GBB spectra must be empty here",
                    a=a,
                )


# ---------------------------------------------------------------------------
# checkers: chapter 4 perturbation statements
# ---------------------------------------------------------------------------


def _check_p41(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            c = generate_kernel_element(rng, hom)
            qn = is_quasinilpotent(c)
            nil = is_nilpotent(c)
            mp = minimal_polynomial(c.matrix)
            pure_power = all(
                mp.coeff(k).is_zero() for k in range(mp.degree)
            )
            run.check(
                qn == nil and (not qn or pure_power),
                fam,
                "algebraic quasinilpotent must be nilpotent with power minimal polynomial",
                c=c,
            )
            a = generate_element(rng, hom.source)
            run.check(
                is_quasinilpotent(a) == is_nilpotent(a),
                fam,
                "quasinilpotent and nilpotent split on an algebraic element",
                a=a,
            )


def _check_t42(plan, homs, diags, run: _Run) -> None:
    budget_per = 4
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(max(1, budget // budget_per)):
            b = generate_kernel_element(rng, hom)
            for tag_cls in (CLASS_DRAZIN, CLASS_KOLIHA, CLASS_DRAZIN_SINGULAR, CLASS_KOLIHA_SINGULAR):
                probe = pcomm_probe(b, tag_cls, trials=8, seed=rng.randrange(10**6))
                run.check(
                    probe.verdict == "consistent",
                    fam,
                    f"nilpotent element leaves the commuting perturbation class of {tag_cls}",
                    b=b,
                )


def _check_c43(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(max(1, budget // 2)):
            b = generate_kernel_element(rng, hom)
            if not is_quasinilpotent(b):
                raise InternalInconsistencyError("kernel draw must be nilpotent here")
            probe = pcomm_probe(b, CLASS_DRAZIN, trials=8, seed=rng.randrange(10**6))
            run.check(
                probe.verdict == "consistent",
                fam,
                "algebraic quasinilpotent perturbs a Drazin element out of the class",
                b=b,
            )


def _check_r44(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            li = _left_inverse(a)
            ri = _right_inverse(a)
            inv = invert_in_algebra(a)
            run.check(
                (li is None) == (ri is None) == (inv is None)
                and (inv is None or (li == inv and ri == inv)),
                fam,
                "one-sided invertibility fails to collapse",
                a=a,
            )


def _check_t45(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            d = generate_kernel_element(rng, hom)
            a, _ = generate_commuting_pair(rng, hom.source)
            partner = _poly_element(_random_poly(rng, 2), d)
            ok = (
                _sigma_d_empty_at_rational_points(partner + d)
                and _sigma_d_empty_at_rational_points(partner)
                and _sigma_d_empty_at_rational_points(a)
            )
            run.check(
                ok,
                fam,
                "commuting quasinilpotent shift changed the Drazin spectrum",
                d=d,
            )


def _check_t46(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            b = generate_kernel_element(rng, hom)
            if not is_t_nilpotent(hom, b) or not is_riesz(hom, b):
                run.fail(fam, "kernel draw must be T-nilpotent and Riesz", b=b)
                continue
            a = _poly_element(_random_poly(rng, 2), b)
            ok = is_bfredholm(hom, a + b)[0] and is_gbf(hom, a + b)
            ta_sing = invert_in_algebra(hom(a)) is None
            if ta_sing:
                ok = ok and invert_in_algebra(hom(a + b)) is None
            run.check(
                ok,
                fam,
                "T-nilpotent commuting shift leaves the degree classes",
                a=a,
                b=b,
            )


def _check_c47(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a = generate_element(rng, hom.source)
            b = generate_kernel_element(rng, hom)
            rep = nilpotent_perturbation(hom, a, b)
            run.check(
                rep.status == "ok" and rep.sum_in_class and rep.spectra_equal,
                fam,
                "kernel-commuting nilpotent shift broke the class or spectrum",
                a=a,
                b=b,
            )


def _check_c48(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(max(1, budget // 2)):
            a = generate_kernel_element(rng, hom)
            probe = pcomm_probe(
                a, CLASS_DRAZIN, hom=hom, trials=8, seed=rng.randrange(10**6)
            )
            run.check(
                probe.verdict == "consistent",
                fam,
                "Riesz element with algebraic image perturbs out of the BF class",
                a=a,
            )


def _check_t49(plan, homs, diags, run: _Run) -> None:
    run.skip(
        "empty-hypothesis-class",
        "non-algebraic branch: every Riesz element here has an algebraic "
        "image, so the equivalence is only exercised on the algebraic side",
    )
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            d = generate_kernel_element(rng, hom)
            rep = riesz_equivalence(hom, d, samples=2, seed=rng.randrange(10**6))
            run.check(
                rep.all_hold(),
                fam,
                "the four equivalent conditions split",
                d=d,
            )


# ---------------------------------------------------------------------------
# checkers: chapter 5 spectral-idempotent machinery
# ---------------------------------------------------------------------------


def _gen_pair(rng: random.Random, hom: Homomorphism) -> tuple[Element, Element]:
    """(a1, a2) with matching image spectral idempotents: a2 is a nonzero
    scalar multiple of a1 plus kernel noise."""
    a1 = generate_element(rng, hom.source)
    s = rng.choice((1, 2, 3, -1, Fraction(1, 2)))
    a2 = s * a1 + generate_kernel_element(rng, hom)
    return a1, a2


def _check_r51(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        one = hom.source.one()
        for _ in range(budget):
            a1, a2 = _gen_pair(rng, hom)
            pair = build_pair(hom, a1, a2)
            cp = one - pair.p
            c1 = cp * a1 * pair.w1 - cp
            c2 = pair.w1 * a1 * cp - cp
            noisy = pair.w1 + cp * generate_kernel_element(rng, hom) * cp
            d1 = cp * a1 * noisy - cp
            ok = (
                hom.kernel.contains(c1)
                and hom.kernel.contains(c2)
                and pair.corner(c1) == c1
                and pair.corner(c2) == c2
                and pair.corner(pair.w1) == pair.w1
                and hom.kernel.contains(d1)
                and hom.kernel.contains(noisy - pair.w1)
            )
            run.check(ok, fam, "corner inverse identities fail", a1=a1, a2=a2)


def _check_p52(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a1, a2 = _gen_pair(rng, hom)
            pair = build_pair(hom, a1, a2)
            try:
                prop52_check(pair)
            except InternalInconsistencyError as exc:
                run.fail(fam, f"shift criterion broke: {exc}", a1=a1, a2=a2)
                continue
            run.ok()


def _check_t53(flavor: str, plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        for _ in range(budget):
            a1, a2 = _gen_pair(rng, hom)
            pair = build_pair(hom, a1, a2)
            try:
                rep = theorem53_check(pair)
            except InternalInconsistencyError as exc:
                run.fail(fam, f"equivalence split: {exc}", a1=a1, a2=a2)
                continue
            conds = rep.conditions if flavor == "riesz" else rep.nilpotent_conditions
            run.check(
                len(set(conds)) == 1,
                fam,
                "four conditions must agree",
                a1=a1,
                a2=a2,
            )


def _check_r54(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        produced = 0
        for _ in range(budget):
            a1, a2 = _gen_pair(rng, hom)
            pair = build_pair(hom, a1, a2)
            try:
                rep = remark54_inverse_identity(pair)
            except InternalInconsistencyError as exc:
                run.fail(fam, f"inverse identities broke: {exc}", a1=a1, a2=a2)
                continue
            if rep.status != "ok":
                continue
            produced += 1
            run.check(
                rep.reciprocal_identity
                and rep.corner_products_inverse
                and rep.z_inverse_formula,
                fam,
                "explicit inverse formula fails",
                a1=a1,
                a2=a2,
            )
        if produced == 0:
            run.skip(
                "no-hypothesis-instances",
                f"family {fam}: no generated pair satisfied the hypotheses",
            )


def _check_t56(plan, homs, diags, run: _Run) -> None:
    for fam, hom, rng, budget in _iterate(plan, homs, run):
        produced = 0
        for _ in range(budget):
            a1, a2 = _gen_pair(rng, hom)
            try:
                rep = theorem56_product(hom, a1, a2)
            except InternalInconsistencyError as exc:
                run.fail(fam, f"product identity broke: {exc}", a1=a1, a2=a2)
                continue
            if rep.status != "ok":
                continue
            produced += 1
            run.check(
                rep.product_idempotent_matches and rep.identity_holds,
                fam,
                "product corner inverse fails",
                a1=a1,
                a2=a2,
            )
        if produced == 0:
            run.skip(
                "no-hypothesis-instances",
                f"family {fam}: no generated pair satisfied the hypotheses",
            )


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------


def _dispatch(tag: str, plan, homs, diags, run: _Run) -> None:
    group, _, item = tag.partition("(")
    item = item.rstrip(")")
    if group == "R2.5":
        _check_r25(item, plan, homs, diags, run)
    elif group == "T3.2":
        _check_t32(item, plan, homs, diags, run)
    elif group == "T3.3":
        _check_t33(item, plan, homs, diags, run)
    elif group == "T3.4":
        _check_t34(item, plan, homs, diags, run)
    elif group == "T3.5":
        _check_t35(item, plan, homs, diags, run)
    elif tag == "P4.1":
        _check_p41(plan, homs, diags, run)
    elif tag == "T4.2":
        _check_t42(plan, homs, diags, run)
    elif tag == "C4.3":
        _check_c43(plan, homs, diags, run)
    elif tag == "R4.4":
        _check_r44(plan, homs, diags, run)
    elif tag == "T4.5":
        _check_t45(plan, homs, diags, run)
    elif tag == "T4.6":
        _check_t46(plan, homs, diags, run)
    elif tag == "C4.7":
        _check_c47(plan, homs, diags, run)
    elif tag == "C4.8":
        _check_c48(plan, homs, diags, run)
    elif tag == "T4.9":
        _check_t49(plan, homs, diags, run)
    elif tag == "R5.1":
        _check_r51(plan, homs, diags, run)
    elif tag == "P5.2":
        _check_p52(plan, homs, diags, run)
    elif tag == "T5.3":
        _check_t53("riesz", plan, homs, diags, run)
    elif tag == "T5.5":
        _check_t53("nilpotent", plan, homs, diags, run)
    elif tag == "R5.4":
        _check_r54(plan, homs, diags, run)
    elif tag == "T5.6":
        _check_t56(plan, homs, diags, run)
    else:  # pragma: no cover
        raise ValueError(f"unhandled tag {tag!r}")


def run_suite(plan: TrialPlan) -> SuiteReport:
    """Run every statement of the catalogue (or plan.theorem_filter) on the
    plan's families and return the deterministic report.

    A zero-trial plan runs nothing: every tag is reported skipped, never
    vacuously passed."""
    if plan.trials == 0:
        zero = SkipRecord("zero-trial-budget", "the plan requests no trials")
        return SuiteReport(
            plan,
            tuple(
                TheoremResult(tag, 0, (), (zero,))
                for tag in (plan.theorem_filter or ALL_TAGS)
            ),
            (),
        )
    notes: list[str] = []
    homs: list[tuple[str, Homomorphism]] = []
    for fam in plan.families:
        if fam == "diagonal_model":
            continue
        hom = _build_hom(fam, plan)
        if hom.source.ambient_dim > plan.max_ambient_dim:
            notes.append(
                f"{fam}: ambient dimension {hom.source.ambient_dim} exceeds "
                f"the budget {plan.max_ambient_dim}; family excluded"
            )
            continue
        homs.append((fam, hom))
    diags = None
    if "diagonal_model" in plan.families:
        diags = _diag_samples(
            random.Random(f"{plan.seed}|diag-samples"),
            max(4, plan.trials // 4),
        )
    tags = plan.theorem_filter or ALL_TAGS
    results = []
    for tag in tags:
        run = _Run(tag)
        _dispatch(tag, plan, homs, diags, run)
        results.append(run.result())
    return SuiteReport(plan, tuple(results), tuple(notes))


def render_report(report: SuiteReport) -> str:
    """Stable text rendering; equal plans yield byte-identical output."""
    plan = report.plan
    lines = [
        "verification suite",
        f"seed={plan.seed} trials={plan.trials} max_ambient_dim={plan.max_ambient_dim}",
        "families=" + ",".join(plan.families),
    ]
    for note in report.family_notes:
        lines.append(f"note: {note}")
    for r in report.results:
        if r.failed:
            status = "FAIL"
        elif r.instances:
            status = "ok"
        else:
            status = "SKIP" if r.skipped else "none"
        lines.append(
            f"{r.tag:10s} {status:4s} instances={r.instances} failures={len(r.failures)}"
        )
        for s in r.skipped:
            lines.append(f"    skipped [{s.reason}]: {s.detail}")
        for f in r.failures:
            lines.append(f"    failure [{f.family}]: {f.detail}")
            for name, coords in f.witness:
                lines.append(f"        {name} = [{', '.join(coords)}]")
    lines.append(
        f"total: {report.total_instances} instances, "
        f"{report.total_failures} failures"
    )
    return "\n".join(lines) + "\n"
