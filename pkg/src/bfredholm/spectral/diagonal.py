"""Diagonal-operator model where shift-class spectra are genuinely nonempty.

A DiagonalElement stands for a bounded diagonal operator on a sequence
space, described block-by-block by atoms:

  Finite(value, multiplicity)   finitely many equal entries;
  Constant(value)               an infinite constant block;
  DiagTail(rule, start)         one entry rule.value(n) per index n >= start;
  DiagFamily(poly, ...)         one entry B(u_m, w_n) per grid index.

The relevant quotient map sends a diagonal operator to its image modulo
compacts, and in this commutative semisimple quotient everything is
decided by limit structure:

  sigma     closure of the entry set;
  sigma_F   essential values: entries of infinite multiplicity together
            with all accumulation points of the entry set;
  sigma_BF  acc(sigma_F): the quotient image minus lambda fails to be
            Drazin invertible exactly when lambda accumulates in the
            essential values;
  sigma_GBF equal to sigma_BF here; computed through an independent
            route and asserted equal rather than assumed.

Riesz elements coincide with the compact (kernel) part in this model:
sigma_F inside {0}.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DiagonalAlignmentError, InternalInconsistencyError
from ..exact import ExactPolynomial, GR, GaussianRational, MultiPoly
from .rules import GeneratorKind, Harmonic, TailRule, scalar
from .sets import (
    FinitePoints,
    SpectralSet,
    Tail,
    TailFamily,
    acc,
    empty_set,
    finite,
)


@dataclass(frozen=True)
class Finite:
    value: GaussianRational
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "value", scalar(self.value))
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class Constant:
    value: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "value", scalar(self.value))


@dataclass(frozen=True)
class DiagTail:
    rule: TailRule
    start: int = 1

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("tail start must be >= 1")
        if self.rule.is_constant():
            raise ValueError("constant blocks must use the Constant atom")


@dataclass(frozen=True)
class DiagFamily:
    poly: MultiPoly
    kind_m: GeneratorKind
    kind_n: GeneratorKind
    start_m: int = 1
    start_n: int = 1

    def __post_init__(self):
        if self.poly.nvars != 2:
            raise ValueError("family rule must have exactly two variables")
        if self.start_m < 1 or self.start_n < 1:
            raise ValueError("family starts must be >= 1")
        if self.poly.degree_in(0) < 1 or self.poly.degree_in(1) < 1:
            raise ValueError(
                "a rule without both grid variables is not a two-index block"
            )

    def as_primitive(self) -> TailFamily:
        return TailFamily(
            self.poly, self.kind_m, self.kind_n, self.start_m, self.start_n
        )


Atom = Finite | Constant | DiagTail | DiagFamily


@dataclass(frozen=True)
class DiagonalElement:
    atoms: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise ValueError("a diagonal element needs at least one atom")
        for a in self.atoms:
            if not isinstance(a, (Finite, Constant, DiagTail, DiagFamily)):
                raise TypeError(f"unknown atom {a!r}")

    def entries(self, horizon: int = 25) -> tuple[GaussianRational, ...]:
        """A finite prefix of the diagonal entries, for oracles and
        display: infinite blocks are truncated at the horizon."""
        out: list[GaussianRational] = []
        for a in self.atoms:
            if isinstance(a, Finite):
                out.extend([a.value] * a.multiplicity)
            elif isinstance(a, Constant):
                out.extend([a.value] * horizon)
            elif isinstance(a, DiagTail):
                out.extend(
                    a.rule.value(n) for n in range(a.start, a.start + horizon)
                )
            else:
                prim = a.as_primitive()
                for m in range(a.start_m, a.start_m + horizon):
                    out.extend(
                        prim.value(m, n)
                        for n in range(a.start_n, a.start_n + horizon)
                    )
        return tuple(out)

    def sigma(self) -> SpectralSet:
        """Closure of the entry set."""
        prims: list = []
        for a in self.atoms:
            if isinstance(a, Finite):
                prims.append(FinitePoints((a.value,)))
            elif isinstance(a, Constant):
                prims.append(FinitePoints((a.value,)))
            elif isinstance(a, DiagTail):
                prims.append(Tail(a.rule, a.start))
            else:
                prims.append(a.as_primitive())
        return SpectralSet(tuple(prims))

    def essential_values(self) -> SpectralSet:
        """Entries of infinite multiplicity plus accumulation points of
        the entry set, assembled atom by atom."""
        parts = empty_set()
        for a in self.atoms:
            if isinstance(a, Finite):
                continue
            if isinstance(a, Constant):
                parts = parts | finite(a.value)
            elif isinstance(a, DiagTail):
                parts = parts | finite(a.rule.limit())
            else:
                parts = parts | acc(SpectralSet((a.as_primitive(),)))
        return parts

    def __str__(self) -> str:
        names = []
        for a in self.atoms:
            if isinstance(a, Finite):
                names.append(
                    a.value.literal()
                    if a.multiplicity == 1
                    else f"{a.value.literal()} (x{a.multiplicity})"
                )
            elif isinstance(a, Constant):
                names.append(f"const {a.value.literal()}")
            elif isinstance(a, DiagTail):
                names.append(str(Tail(a.rule, a.start)))
            else:
                names.append(str(a.as_primitive()))
        return "diag[" + " ; ".join(names) + "]"


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagClassification:
    sigma: SpectralSet
    sigma_f: SpectralSet
    sigma_bf: SpectralSet
    sigma_gbf: SpectralSet
    fredholm_at_0: bool
    bfredholm_at_0: bool
    riesz: bool


def diag_classify(d: DiagonalElement) -> DiagClassification:
    """Spectra of a diagonal element through two independent routes.

    The essential values are assembled atom-locally; a second route goes
    through the global closure (acc of sigma, plus the infinite constant
    blocks).  Disagreement would mean a defect in the derived-set
    machinery, and raises rather than returning one of the candidates.
    """
    sigma = d.sigma()
    sigma_f = d.essential_values()
    constants = [a.value for a in d.atoms if isinstance(a, Constant)]
    global_route = acc(sigma)
    if constants:
        global_route = global_route | finite(*constants)
    if sigma_f != global_route:
        raise InternalInconsistencyError(
            "atom-local essential values disagree with the closure route: "
            f"{sigma_f} vs {global_route}"
        )
    sigma_bf = acc(sigma_f)
    sigma_gbf = acc(global_route)
    if sigma_gbf != sigma_bf:
        raise InternalInconsistencyError(
            "generalized and ordinary shift-class spectra must coincide "
            "in the diagonal model"
        )
    if sigma_f.is_countable() != sigma_bf.is_countable():
        raise InternalInconsistencyError(
            "countability must transfer between the essential and "
            "shift-class spectra"
        )
    zero = GR.zero()
    riesz = sigma_f.is_empty() or sigma_f == finite(zero)
    return DiagClassification(
        sigma=sigma,
        sigma_f=sigma_f,
        sigma_bf=sigma_bf,
        sigma_gbf=sigma_gbf,
        fredholm_at_0=not sigma_f.contains(zero),
        bfredholm_at_0=not sigma_bf.contains(zero),
        riesz=riesz,
    )


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def _shift_rule(rule: TailRule, c: GaussianRational, op: str) -> TailRule:
    f = (
        ExactPolynomial((c, GR.one()))
        if op == "+"
        else ExactPolynomial((GR.zero(), c))
    )
    return rule.after(f)


def _combine_atoms(x: Atom, y: Atom, op: str) -> Atom:
    if isinstance(x, Constant) and isinstance(y, Constant):
        return Constant(_apply(x.value, y.value, op))
    if isinstance(x, Constant) or isinstance(y, Constant):
        c, other = (x.value, y) if isinstance(x, Constant) else (y.value, x)
        if isinstance(other, Finite):
            return Finite(_apply(other.value, c, op), other.multiplicity)
        if isinstance(other, DiagTail):
            rule = _shift_rule(other.rule, c, op)
            if rule.is_constant():
                return Constant(rule.limit())
            return DiagTail(rule, other.start)
        shifted = (
            other.poly + MultiPoly.constant(2, c)
            if op == "+"
            else other.poly * MultiPoly.constant(2, c)
        )
        return _family_result(shifted, other)
    if isinstance(x, Finite) and isinstance(y, Finite):
        if x.multiplicity != y.multiplicity:
            raise DiagonalAlignmentError(
                "finite blocks of different lengths do not align"
            )
        return Finite(_apply(x.value, y.value, op), x.multiplicity)
    if isinstance(x, DiagTail) and isinstance(y, DiagTail):
        if x.start != y.start:
            raise DiagonalAlignmentError("tail blocks start at different indices")
        try:
            rule = x.rule.combine(y.rule, op)
        except ValueError as exc:
            raise DiagonalAlignmentError(str(exc)) from exc
        if rule.is_constant():
            return Constant(rule.limit())
        return DiagTail(rule, x.start)
    if isinstance(x, DiagFamily) and isinstance(y, DiagFamily):
        if (
            x.kind_m != y.kind_m
            or x.kind_n != y.kind_n
            or x.start_m != y.start_m
            or x.start_n != y.start_n
        ):
            raise DiagonalAlignmentError("grid blocks have different index structure")
        poly = x.poly + y.poly if op == "+" else x.poly * y.poly
        return _family_result(poly, x)
    raise DiagonalAlignmentError(
        f"blocks {type(x).__name__} and {type(y).__name__} do not align"
    )


def _family_result(poly: MultiPoly, template: DiagFamily) -> Atom:
    if poly.total_degree() < 1:
        return Constant(poly.evaluate([GR.zero(), GR.zero()]))
    if poly.degree_in(0) < 1 or poly.degree_in(1) < 1:
        raise DiagonalAlignmentError(
            "the combination collapses a grid variable; each remaining "
            "value would repeat infinitely often, which these atoms "
            "cannot express"
        )
    return DiagFamily(
        poly,
        template.kind_m,
        template.kind_n,
        template.start_m,
        template.start_n,
    )


def _apply(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    return a + b if op == "+" else a * b


def diag_arith(d1: DiagonalElement, d2: DiagonalElement, op: str) -> DiagonalElement:
    """Pointwise sum or product of two diagonal elements.

    Atoms combine positionally; a single Constant block broadcasts over
    every block of the other element.  Anything whose entries would not
    line up index-by-index raises DiagonalAlignmentError.
    """
    if op not in ("+", "*"):
        raise ValueError(f"unsupported operation {op!r}")
    a1, a2 = d1.atoms, d2.atoms
    if len(a1) == 1 and isinstance(a1[0], Constant) and len(a2) != 1:
        pairs = [(a1[0], y) for y in a2]
    elif len(a2) == 1 and isinstance(a2[0], Constant) and len(a1) != 1:
        pairs = [(x, a2[0]) for x in a1]
    elif len(a1) == len(a2):
        pairs = list(zip(a1, a2))
    else:
        raise DiagonalAlignmentError(
            f"elements have {len(a1)} and {len(a2)} blocks and neither "
            "is a single constant"
        )
    return DiagonalElement(tuple(_combine_atoms(x, y, op) for x, y in pairs))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def diag(*atoms: Atom) -> DiagonalElement:
    return DiagonalElement(tuple(atoms))


def diag_constant(value) -> DiagonalElement:
    return DiagonalElement((Constant(scalar(value)),))


def diag_zero() -> DiagonalElement:
    return diag_constant(0)


def diag_tail(rule: TailRule, start: int = 1) -> DiagonalElement:
    return DiagonalElement((DiagTail(rule, start),))


def diag_family(
    poly: MultiPoly,
    kind_m: GeneratorKind | None = None,
    kind_n: GeneratorKind | None = None,
    start_m: int = 1,
    start_n: int = 1,
) -> DiagonalElement:
    km = kind_m if kind_m is not None else Harmonic()
    kn = kind_n if kind_n is not None else Harmonic()
    return DiagonalElement((DiagFamily(poly, km, kn, start_m, start_n),))
