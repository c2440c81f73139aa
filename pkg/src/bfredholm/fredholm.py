"""Classification of elements relative to a homomorphism.

For a unital homomorphism T from a finite matrix algebra into another,
the classes decided here are, with K = the kernel ideal of T:

  Fredholm   T(a) invertible in the target,
  Weyl       a = b + c with b invertible and c in K,
  Browder    additionally bc = cb,

together with the generalized-inverse variants (degree-k decompositions
where b is Drazin invertible of index k, and the Koliha-Drazin analogues)
and the associated point spectra.

Decision method for the additive classes: c = sum t_i c_i ranges over the
kernel (or over kernel-intersect-commutant for the Browder class, using
that (a - c) c = c (a - c) iff a c = c a), and a - c is invertible iff the
determinant of its ambient matrix, a polynomial in t, does not vanish.
The polynomial is expanded symbolically when the subspace dimension is
small; otherwise random evaluation hunts for a witness and a negative
answer is confirmed by the symbolic expansion before it is reported.
Found witnesses are always re-verified exactly, so the random source only
affects speed and which witness is found, never correctness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import Element, Homomorphism, invert_in_algebra, lift_idempotent
from .errors import InternalInconsistencyError, ScopeLimitError
from .exact import (
    AlgebraicPointSet,
    ExactMatrix,
    ExactPolynomial,
    ExtensionField,
    GR,
    GaussianRational,
    MultiPoly,
    char_poly,
    det_over_ring,
    ext_matrix_det,
    nullspace,
)
from .geninv import drazin, is_nilpotent, is_quasinilpotent, koliha_drazin

# Symbolic determinant expansion is used up to this many free directions;
# beyond it, random evaluation runs first and only negatives fall back to
# the (then expensive) symbolic certificate.
SYMBOLIC_DIM_LIMIT = 4
SAMPLE_COUNT = 24
SAMPLE_RANGE = 10**6
# Spectra at symbolic points are computed in Q(i)[x]/(f) only up to this
# degree of f; larger extensions are out of scope.
EXTENSION_DEGREE_LIMIT = 4


# ---------------------------------------------------------------------------
# affine invertibility: exists c in span(directions) with a - c invertible?
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineDecision:
    """Outcome of the determinant-nonvanishing decision.

    `coefficients` are the t-values of a found witness c = sum t_i c_i;
    `certificate` is the identically-zero symbolic determinant backing a
    negative answer.  `method` records which route decided: "origin"
    (a itself invertible), "symbolic", or "sampled".
    """

    exists: bool
    coefficients: tuple[GaussianRational, ...] | None
    method: str
    certificate: MultiPoly | None = None


def _affine_det_poly(
    base: ExactMatrix, directions: list[ExactMatrix], extra_vars: int = 0
) -> MultiPoly:
    """det(base - sum t_i D_i) as a polynomial in t (division-free).

    With extra_vars > 0, trailing variables are appended to the ring but
    left unused, so callers can subtract e.g. a lambda*I term themselves.
    """
    d = len(directions)
    nv = d + extra_vars
    n = base.rows
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            c = base.entries[i][j]
            if c:
                terms[(0,) * nv] = c
            for k, dm in enumerate(directions):
                e = dm.entries[i][j]
                if e:
                    expo = tuple(1 if v == k else 0 for v in range(nv))
                    terms[expo] = -e
            row.append(MultiPoly(nv, terms))
        grid.append(row)
    return det_over_ring(grid, MultiPoly(nv, {}), MultiPoly.constant(nv, 1))


def _nonvanishing_point(p: MultiPoly) -> tuple[GaussianRational, ...]:
    """An integer point where the nonzero polynomial p does not vanish.

    Fixes one variable at a time: some value in 0..deg_i keeps the partial
    substitution nonzero because a polynomial of degree deg_i cannot have
    deg_i + 1 roots.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no nonvanishing point")
    values: list[GaussianRational] = []
    current = p
    for var in range(p.nvars):
        deg = current.degree_in(var)
        for v in range(deg + 1):
            cand = current.substitute(var, v)
            if not cand.is_zero():
                values.append(GR.coerce(v))
                current = cand
                break
        else:  # pragma: no cover - contradicts the degree bound
            raise InternalInconsistencyError("no nonvanishing value found")
    if not current.constant_term():  # pragma: no cover
        raise InternalInconsistencyError("substitution lost the polynomial")
    return tuple(values)


def decide_affine_invertible(
    a: Element,
    directions: list[Element],
    rng: random.Random | None = None,
) -> AffineDecision:
    """Decide whether some c in span(directions) makes a - c invertible."""
    if invert_in_algebra(a) is not None:
        zeros = tuple(GR.zero() for _ in directions)
        return AffineDecision(True, zeros, "origin")
    d = len(directions)
    if d == 0:
        return AffineDecision(False, None, "symbolic", MultiPoly(0, {}))
    dmats = [e.matrix for e in directions]
    amat = a.matrix
    if d > SYMBOLIC_DIM_LIMIT:
        rng = rng if rng is not None else random.Random(0)
        from .exact import determinant

        for _ in range(SAMPLE_COUNT):
            t = [rng.randrange(SAMPLE_RANGE) for _ in range(d)]
            cand = amat
            for ti, dm in zip(t, dmats):
                cand = cand - dm * ti
            if determinant(cand):
                return AffineDecision(
                    True, tuple(GR.coerce(v) for v in t), "sampled"
                )
    p = _affine_det_poly(amat, dmats)
    if p.is_zero():
        return AffineDecision(False, None, "symbolic", p)
    return AffineDecision(True, _nonvanishing_point(p), "symbolic")


def _witness_elements(
    a: Element, directions: list[Element], coefficients
) -> tuple[Element, Element]:
    """Assemble and exactly re-verify the decomposition a = b + c."""
    c = a.algebra.zero()
    for t, e in zip(coefficients, directions):
        c = c + t * e
    b = a - c
    if invert_in_algebra(b) is None:
        raise InternalInconsistencyError("witness candidate is not invertible")
    if b + c != a:
        raise InternalInconsistencyError("witness does not sum to the element")
    return b, c


def kernel_commutant_basis(hom: Homomorphism, a: Element) -> list[Element]:
    """A basis of kernel(T) intersected with the commutant of a.

    The intersection is computed once per element: it does not depend on
    scalar shifts of a, since (a - l) c = c (a - l) iff a c = c a.
    """
    kb = list(hom.kernel.basis)
    if not kb:
        return []
    am = a.matrix
    cols = [(am * k.matrix - k.matrix * am).vectorize() for k in kb]
    m = ExactMatrix(list(zip(*cols)))
    combos = nullspace(m)
    out = []
    for vec in combos:
        e = hom.source.zero()
        for i, k in enumerate(kb):
            coeff = vec.entries[i][0]
            if coeff:
                e = e + coeff * k
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# the classical classes
# ---------------------------------------------------------------------------


def is_fredholm(hom: Homomorphism, a: Element) -> bool:
    """True iff T(a) is invertible in the target algebra."""
    return invert_in_algebra(hom(a)) is not None


@dataclass(frozen=True)
class AdditiveDecision:
    """Membership verdict for an additive class, with a verified witness.

    For a positive verdict, witness = (b, c) with a = b + c, b invertible
    and c in the kernel (and bc = cb for the Browder class).  Negative
    verdicts carry no witness; they rest on the symbolic certificate.
    """

    member: bool
    witness: tuple[Element, Element] | None
    method: str


def is_weyl(hom: Homomorphism, a: Element, seed: int = 0) -> AdditiveDecision:
    """Decide a = b + c with b invertible, c in kernel(T)."""
    directions = list(hom.kernel.basis)
    dec = decide_affine_invertible(a, directions, random.Random(seed))
    if not dec.exists:
        return AdditiveDecision(False, None, dec.method)
    b, c = _witness_elements(a, directions, dec.coefficients)
    if not hom.kernel.contains(c):
        raise InternalInconsistencyError("witness kernel part escaped the kernel")
    return AdditiveDecision(True, (b, c), dec.method)


def is_browder(hom: Homomorphism, a: Element, seed: int = 0) -> AdditiveDecision:
    """Decide a = b + c with b invertible, c in kernel(T), bc = cb."""
    directions = kernel_commutant_basis(hom, a)
    dec = decide_affine_invertible(a, directions, random.Random(seed))
    if not dec.exists:
        return AdditiveDecision(False, None, dec.method)
    b, c = _witness_elements(a, directions, dec.coefficients)
    if not hom.kernel.contains(c):
        raise InternalInconsistencyError("witness kernel part escaped the kernel")
    if b * c != c * b:
        raise InternalInconsistencyError("witness pair does not commute")
    return AdditiveDecision(True, (b, c), dec.method)


# ---------------------------------------------------------------------------
# generalized-inverse classes and degree sets
# ---------------------------------------------------------------------------


def is_bfredholm(hom: Homomorphism, a: Element) -> tuple[bool, int]:
    """(True, index of T(a)); every element here is Drazin invertible."""
    return True, drazin(hom(a)).index


@dataclass(frozen=True)
class DegreeWitness:
    """A decomposition a = regular + kernel_part with ind(regular) = index."""

    regular: Element
    kernel_part: Element
    index: int


@dataclass(frozen=True)
class DegreeSetReport:
    """Degrees k for which a witness decomposition was found.

    Membership claims are exact (every witness re-verified); absence of a
    degree is NOT a non-membership claim, as flagged by `completeness`.
    """

    degrees: tuple[int, ...]
    witnesses: dict[int, DegreeWitness] = field(repr=False)
    completeness: str = "witnesses-only"


def _degree_search(
    a: Element,
    hom: Homomorphism,
    directions: list[Element],
    trials: int,
    rng: random.Random,
    extra: list[Element],
    require_commuting: bool,
) -> DegreeSetReport:
    found: dict[int, DegreeWitness] = {}

    def record(c: Element) -> None:
        if require_commuting and a.matrix * c.matrix != c.matrix * a.matrix:
            return
        b = a - c
        data = drazin(b)
        k = data.index
        if k in found:
            return
        if not hom.kernel.contains(c):
            raise InternalInconsistencyError("candidate kernel part escaped")
        if b + c != a:
            raise InternalInconsistencyError("decomposition does not sum back")
        found[k] = DegreeWitness(b, c, k)

    record(a.algebra.zero())
    if hom.kernel.contains(a):
        record(a)  # b = 0 with index 1 by the zero-element convention
    for e in extra:
        record(e)
    for e in directions:
        for s in (1, -1, 2):
            record(s * e)
    for _ in range(trials):
        c = a.algebra.zero()
        for e in directions:
            c = c + rng.randint(-3, 3) * e
        record(c)
    return DegreeSetReport(tuple(sorted(found)), found)


def bweyl_degrees(
    hom: Homomorphism,
    a: Element,
    trials: int = 16,
    seed: int = 0,
    extra: list[Element] | None = None,
) -> DegreeSetReport:
    """Degrees k with a found decomposition a = b + c, ind(b) = k, c in kernel."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    return _degree_search(
        a,
        hom,
        list(hom.kernel.basis),
        trials,
        random.Random(seed),
        list(extra or ()),
        require_commuting=False,
    )


def bbrowder_degrees(
    hom: Homomorphism,
    a: Element,
    trials: int = 16,
    seed: int = 0,
    extra: list[Element] | None = None,
) -> DegreeSetReport:
    """As bweyl_degrees, with c restricted to commute with a (hence with b)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    return _degree_search(
        a,
        hom,
        kernel_commutant_basis(hom, a),
        trials,
        random.Random(seed),
        list(extra or ()),
        require_commuting=True,
    )


def is_gbf(hom: Homomorphism, a: Element) -> bool:
    """T(a) Koliha-Drazin invertible; unconditional here, still verified."""
    koliha_drazin(hom(a))
    return True


def is_gbw(hom: Homomorphism, a: Element) -> tuple[bool, tuple[Element, Element]]:
    """a = b + c with b Koliha-Drazin invertible, c in kernel; b = a works."""
    koliha_drazin(a)
    return True, (a, a.algebra.zero())


def is_gbb(hom: Homomorphism, a: Element) -> tuple[bool, tuple[Element, Element]]:
    """As is_gbw with bc = cb; c = 0 commutes with everything."""
    koliha_drazin(a)
    return True, (a, a.algebra.zero())


def is_riesz(hom: Homomorphism, a: Element) -> bool:
    """T(a) quasinilpotent.  Quasinilpotent = nilpotent in finite dimension,
    so this coincides with is_t_nilpotent on these backends."""
    return is_quasinilpotent(hom(a))


def is_t_nilpotent(hom: Homomorphism, a: Element) -> bool:
    """T(a) nilpotent."""
    return is_nilpotent(hom(a))


# ---------------------------------------------------------------------------
# idempotent characterization of the generalized classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterizationReport:
    """Both directions of the idempotent criterion, checked against each other.

    `conditions` is the quasinilpotent-flavored set: a + p Fredholm, both
    off-diagonal corners p a (1-p) and (1-p) a p in the kernel, and the
    compression p a p Riesz.  `nilpotent_conditions` replaces the last item
    with T-nilpotence of the compression.
    """

    member: bool
    idempotent: Element
    conditions: dict[str, bool]
    nilpotent_conditions: dict[str, bool]
    forward_holds: bool
    converse_holds: bool


def gbf_characterization_check(
    hom: Homomorphism, a: Element
) -> CharacterizationReport:
    """Construct the witnessing idempotent and check the criterion both ways.

    Forward: membership yields p = (a lift of) the spectral idempotent of
    T(a), satisfying the four conditions.  Converse: any p satisfying them
    certifies membership.  The two verdicts must agree; disagreement is an
    internal defect, not an input condition.
    """
    koliha_drazin(hom(a))  # definitional membership; raises on defect
    member = True

    q = drazin(hom(a)).spectral_idempotent
    p = lift_idempotent(hom, q).idempotent
    one = a.algebra.one()

    upper = p * a * (one - p)
    lower = (one - p) * a * p
    compression = p * a * p
    conditions = {
        "shift_fredholm": is_fredholm(hom, a + p),
        "upper_corner_in_kernel": hom.kernel.contains(upper),
        "lower_corner_in_kernel": hom.kernel.contains(lower),
        "compression_riesz": is_riesz(hom, compression),
    }
    nilpotent_conditions = dict(conditions)
    del nilpotent_conditions["compression_riesz"]
    nilpotent_conditions["compression_t_nilpotent"] = is_t_nilpotent(
        hom, compression
    )

    forward = all(conditions.values())
    # Converse: conditions imply membership.  Vacuous when they fail.
    converse = (not forward) or member
    if forward != member:
        raise InternalInconsistencyError(
            "idempotent criterion disagrees with the definitional verdict"
        )
    return CharacterizationReport(
        member=member,
        idempotent=p,
        conditions=conditions,
        nilpotent_conditions=nilpotent_conditions,
        forward_holds=forward,
        converse_holds=converse,
    )


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


def _block_cuts(m: ExactMatrix) -> tuple[int, ...]:
    """Cut positions of the finest consecutive block-upper-triangular
    partition of m; the trivial partition yields just (n,)."""
    n = m.rows
    cuts = []
    reach = 0
    for j in range(n):
        for i in range(n - 1, j, -1):
            if not m.entries[i][j].is_zero():
                reach = max(reach, i)
                break
        if reach <= j:
            cuts.append(j + 1)
    return tuple(cuts)


def spectrum(a: Element | ExactMatrix) -> AlgebraicPointSet:
    """Eigenvalues of the ambient matrix as an exact algebraic point set.

    The matrix is first split along its finest block-triangular structure
    (in whichever orientation cuts finer; the spectrum ignores
    transposition), so the factoring work happens blockwise.
    """
    m = a.matrix if isinstance(a, Element) else a
    cuts = _block_cuts(m)
    flipped = _block_cuts(m.transpose())
    if len(flipped) > len(cuts):
        m, cuts = m.transpose(), flipped
    out = AlgebraicPointSet.empty()
    start = 0
    for end in cuts:
        block = ExactMatrix([row[start:end] for row in m.entries[start:end]])
        if end - start == 1:
            part = AlgebraicPointSet.from_points((block.entries[0][0],))
        else:
            part = AlgebraicPointSet.from_poly(char_poly(block))
        out = out.merged_with(part)
        start = end
    return out


def fredholm_spectrum(hom: Homomorphism, a: Element) -> AlgebraicPointSet:
    """Points where a - l fails to be Fredholm: exactly the spectrum of T(a)."""
    return spectrum(hom(a))


def _symbolic_point_member(
    a: Element, directions: list[Element], modulus: ExactPolynomial, seed: int
) -> bool:
    """Weyl/Browder membership of a - l at a symbolic root l of the modulus.

    The verdict is uniform across the conjugate roots: working modulo an
    irreducible f, a reduced value is nonzero iff f fails to divide it,
    which is the same statement at every root.
    """
    fld = ExtensionField(modulus)
    lam = fld.generator()
    n = a.algebra.ambient_dim
    amat = a.matrix
    dmats = [e.matrix for e in directions]
    d = len(dmats)
    rng = random.Random(seed)

    def shifted_grid(tvals):
        grid = []
        for i in range(n):
            row = []
            for j in range(n):
                entry = fld.scalar(amat.entries[i][j])
                if i == j:
                    entry = entry - lam
                for tv, dm in zip(tvals, dmats):
                    coeff = dm.entries[i][j]
                    if coeff and tv:
                        entry = entry - fld.scalar(coeff * tv)
                row.append(entry)
            grid.append(row)
        return grid

    if not ext_matrix_det(shifted_grid([0] * d), fld).is_zero():
        return True
    for _ in range(SAMPLE_COUNT if d else 0):
        t = [rng.randrange(SAMPLE_RANGE) for _ in range(d)]
        if not ext_matrix_det(shifted_grid(t), fld).is_zero():
            return True
    # Symbolic confirmation: det as a polynomial in (t, lam), reduced mod f
    # one t-monomial at a time.
    p = _affine_det_poly(amat, dmats + [ExactMatrix.identity(n)])
    lam_var = d  # the identity direction plays the role of lambda
    buckets: dict[tuple[int, ...], dict[int, GaussianRational]] = {}
    for expo, coeff in p.terms.items():
        t_part = expo[:d]
        buckets.setdefault(t_part, {})[expo[lam_var]] = coeff
    for lam_coeffs in buckets.values():
        top = max(lam_coeffs)
        dense = [lam_coeffs.get(k, GR.zero()) for k in range(top + 1)]
        if not (ExactPolynomial(dense) % modulus).is_zero():
            return True
    return False


def _shift_class_spectrum(
    hom: Homomorphism, a: Element, directions: list[Element], seed: int
) -> AlgebraicPointSet:
    # These are point sets, not root multisets: multiplicities collapse to 1.
    pts = spectrum(a)
    one = a.algebra.one()
    kept = []
    for f, _mult in pts.factors:
        if f.degree == 1:
            lam = -f.coeffs[0]
            dec = decide_affine_invertible(
                a - lam * one, directions, random.Random(seed)
            )
            if not dec.exists:
                kept.append((f, 1))
            continue
        if f.degree > EXTENSION_DEGREE_LIMIT:
            raise ScopeLimitError(
                f"symbolic spectral point of degree {f.degree} exceeds the "
                f"supported extension degree {EXTENSION_DEGREE_LIMIT}"
            )
        if not _symbolic_point_member(a, directions, f, seed):
            kept.append((f, 1))
    return AlgebraicPointSet(tuple(kept))


def weyl_spectrum(hom: Homomorphism, a: Element, seed: int = 0) -> AlgebraicPointSet:
    """Points l with a - l not Weyl; a subset of the spectrum of a."""
    return _shift_class_spectrum(hom, a, list(hom.kernel.basis), seed)


def browder_spectrum(
    hom: Homomorphism, a: Element, seed: int = 0
) -> AlgebraicPointSet:
    """Points l with a - l not Browder; the commutant constraint is shift
    independent, so one subspace serves every l."""
    return _shift_class_spectrum(hom, a, kernel_commutant_basis(hom, a), seed)


@dataclass(frozen=True)
class BSpectraRecord:
    """The six generalized spectra; all empty on these backends."""

    bfredholm: AlgebraicPointSet
    bweyl: AlgebraicPointSet
    bbrowder: AlgebraicPointSet
    gbf: AlgebraicPointSet
    gbw: AlgebraicPointSet
    gbb: AlgebraicPointSet


def b_spectra(
    hom: Homomorphism, a: Element, seed: int = 0, samples: int = 3
) -> BSpectraRecord:
    """Assert emptiness of the generalized spectra and return the record.

    Every element of a finite-dimensional algebra is algebraic, hence
    Drazin (and Koliha-Drazin) invertible after any scalar shift, so all
    six sets are empty.  Rather than returning empties blindly, the
    assertion recomputes Drazin data at every rational spectral point and
    on sampled kernel perturbations; any failure surfaces as an internal
    defect through the axiom re-verification inside the Drazin routines.
    """
    ta = hom(a)
    one_t = ta.algebra.one()
    for lam, _ in spectrum(ta).explicit_points():
        drazin(ta - lam * one_t)
        koliha_drazin(ta - lam * one_t)
    one_s = a.algebra.one()
    for lam, _ in spectrum(a).explicit_points():
        drazin(a - lam * one_s)
    rng = random.Random(seed)
    kb = list(hom.kernel.basis)
    for _ in range(samples if kb else 0):
        c = a.algebra.zero()
        for e in kb:
            c = c + rng.randint(-2, 2) * e
        perturbed = a + c
        for lam, _ in spectrum(perturbed).explicit_points():
            drazin(perturbed - lam * one_s)
    empty = AlgebraicPointSet.empty()
    return BSpectraRecord(empty, empty, empty, empty, empty, empty)


# ---------------------------------------------------------------------------
# one-stop classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Full membership record for one element relative to one homomorphism.

    Containment chain enforced at construction: browder => weyl =>
    fredholm => bfredholm => gbf, and a nonempty degree set requires
    bfredholm.  A violation raises InternalInconsistencyError because it
    can only come from a defect in the deciders, never from the input.
    """

    fredholm: bool
    weyl: bool
    weyl_witness: tuple[Element, Element] | None
    browder: bool
    browder_witness: tuple[Element, Element] | None
    bfredholm: bool
    bfredholm_degree: int
    bweyl: DegreeSetReport
    bbrowder: DegreeSetReport
    gbf: bool
    gbw: bool
    gbb: bool
    riesz: bool
    t_nilpotent: bool

    def __post_init__(self):
        chain = (
            (self.browder <= self.weyl),
            (self.weyl <= self.fredholm),
            (self.fredholm <= self.bfredholm),
            (self.bfredholm <= self.gbf),
            (not self.bweyl.degrees) or self.bfredholm,
            (not self.bbrowder.degrees) or self.bfredholm,
        )
        if not all(chain):
            raise InternalInconsistencyError(
                "classification violates the containment chain"
            )


def classify(
    hom: Homomorphism, a: Element, trials: int = 16, seed: int = 0
) -> ClassificationReport:
    """Run every decider on one element and cross-check the results."""
    fred = is_fredholm(hom, a)
    wd = is_weyl(hom, a, seed)
    bd = is_browder(hom, a, seed)
    _, degree = is_bfredholm(hom, a)

    extra_w = [wd.witness[1]] if wd.witness else []
    extra_b = [bd.witness[1]] if bd.witness else []
    bw = bweyl_degrees(hom, a, trials, seed, extra=extra_w)
    bb = bbrowder_degrees(hom, a, trials, seed, extra=extra_b)

    report = ClassificationReport(
        fredholm=fred,
        weyl=wd.member,
        weyl_witness=wd.witness,
        browder=bd.member,
        browder_witness=bd.witness,
        bfredholm=True,
        bfredholm_degree=degree,
        bweyl=bw,
        bbrowder=bb,
        gbf=is_gbf(hom, a),
        gbw=is_gbw(hom, a)[0],
        gbb=is_gbb(hom, a)[0],
        riesz=is_riesz(hom, a),
        t_nilpotent=is_t_nilpotent(hom, a),
    )
    if hom.kernel_is_nilpotent():
        # With a nilpotent kernel the three classical classes coincide
        # (the inverse of T(a) is a polynomial in T(a), so a Fredholm
        # element differs from an invertible one by a nilpotent summand).
        if not (report.fredholm == report.weyl == report.browder):
            raise InternalInconsistencyError(
                "classical classes split despite a nilpotent kernel"
            )
    if report.weyl and 0 not in report.bweyl.degrees:
        raise InternalInconsistencyError(
            "Weyl witness missing from the degree-0 record"
        )
    if report.browder and 0 not in report.bbrowder.degrees:
        raise InternalInconsistencyError(
            "Browder witness missing from the degree-0 record"
        )
    return report
