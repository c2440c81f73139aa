"""Symbolic spectral sets with exact derived-set computation.

A SpectralSet is a finite union of primitives, each a closed set:

  FinitePoints  explicit Gaussian-rational points;
  Tail          {P(u_n) : n >= start} plus its limit P(0), where u_n is a
                vanishing generator (1/n or r^n with |r| < 1);
  TailFamily    a two-index grid {B(u_m, w_n)} together with both
                one-sided limit tails {B(u_m, 0)}, {B(0, w_n)} and the
                outer limit B(0, 0), which make the union closed;
  Disk/Segment/Circle   regions with exact rational data (radii are
                stored squared so affine images stay representable).

plus a finite list of removed isolated points, which is what makes the
set difference "sigma minus poles" representable.  Accumulation points
can never be removed.

Equality is decided on a canonical normal form (points absorbed into
tail heads, duplicates and subsumed points dropped, primitives sorted).
Equal normal forms always mean equal sets; distinct descriptions of the
same set normalize together for the rule grammar used throughout this
package.  Membership tests are exact, with one documented bound: a
two-index family decides interior grid values by scanning rows up to
MEMBERSHIP_HORIZON (solving each row exactly), so a point that first
appears beyond that many rows is reported absent.  Limit structure is
always decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ScopeLimitError
from ..exact import (
    ExactPolynomial,
    GR,
    GaussianRational,
    MultiPoly,
    apply_univariate,
    gaussian_roots,
)
from .rules import GeneratorKind, Harmonic, TailRule, scalar

MEMBERSHIP_HORIZON = 128


def _pkey(x: GaussianRational):
    return (x.re, x.im)


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinitePoints:
    points: tuple[GaussianRational, ...]

    def __post_init__(self):
        cleaned = sorted({_pkey(scalar(p)): scalar(p) for p in self.points}.values(), key=_pkey)
        object.__setattr__(self, "points", tuple(cleaned))

    def contains(self, x: GaussianRational) -> bool:
        return any(p == x for p in self.points)

    def __str__(self) -> str:
        return "{" + ", ".join(p.literal() for p in self.points) + "}"


@dataclass(frozen=True)
class Tail:
    """Values of a nonconstant rule from `start` on, plus the limit."""

    rule: TailRule
    start: int = 1

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("tail start must be >= 1")
        if self.rule.is_constant():
            raise ValueError("constant tails must collapse to a point")

    def limit(self) -> GaussianRational:
        return self.rule.limit()

    def value(self, n: int) -> GaussianRational:
        return self.rule.value(n)

    def contains(self, x: GaussianRational) -> bool:
        if x == self.limit():
            return True
        return bool(self.rule.indices_of(x, self.start))

    def sort_key(self):
        return (self.rule.sort_key(), self.start)

    def __str__(self) -> str:
        head = f"tail {self.rule} -> {self.limit().literal()}"
        return head if self.start == 1 else f"{head} (from {self.start})"


@dataclass(frozen=True)
class TailFamily:
    """Closed two-index grid B(u_m, w_n) with all its limit structure.

    The closure of the raw grid adds three layers: row limits B(u_m, 0)
    (n to infinity), column limits B(0, w_n) (m to infinity), and the
    outer limit B(0, 0); all are part of the represented set.
    """

    poly: MultiPoly  # two variables: 0 = u (index m), 1 = w (index n)
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
            raise ValueError("degenerate families must collapse to tails")

    def value(self, m: int, n: int) -> GaussianRational:
        return self.poly.evaluate(
            [self.kind_m.value(m), self.kind_n.value(n)]
        )

    def row_rule(self) -> TailRule:
        return TailRule(self.kind_m, self.poly.substitute(1, 0).to_univariate(0))

    def col_rule(self) -> TailRule:
        return TailRule(self.kind_n, self.poly.substitute(0, 0).to_univariate(1))

    def outer_limit(self) -> GaussianRational:
        return self.poly.evaluate([GR.zero(), GR.zero()])

    def _row_poly(self, m: int) -> ExactPolynomial:
        return self.poly.substitute(0, self.kind_m.value(m)).to_univariate(1)

    def contains(self, x: GaussianRational) -> bool:
        if x == self.outer_limit():
            return True
        for rule, start in (
            (self.row_rule(), self.start_m),
            (self.col_rule(), self.start_n),
        ):
            if rule.is_constant():
                if rule.limit() == x:
                    return True
            elif x == rule.limit() or rule.indices_of(x, start):
                return True
        for m in range(self.start_m, self.start_m + MEMBERSHIP_HORIZON):
            row = self._row_poly(m) - ExactPolynomial((x,))
            if row.is_zero():  # pragma: no cover - degenerate rows excluded
                return True
            if row.degree < 1:
                continue
            for root in gaussian_roots(row):
                n = self.kind_n.index_of(root)
                if n is not None and n >= self.start_n:
                    return True
        return False

    def dominates(self, other: "TailFamily") -> bool:
        return (
            self.poly == other.poly
            and self.kind_m == other.kind_m
            and self.kind_n == other.kind_n
            and self.start_m <= other.start_m
            and self.start_n <= other.start_n
        )

    def sort_key(self):
        return (
            self.kind_m.sort_key(),
            self.kind_n.sort_key(),
            tuple(sorted((e, (c.re, c.im)) for e, c in self.poly.terms.items())),
            self.start_m,
            self.start_n,
        )

    def __str__(self) -> str:
        # Generator texts are "1/n" or "(r)^n"; swapping the final letter
        # gives the m-axis form (literals never end in 'n').
        gen_m = str(self.kind_m)[:-1] + "m"
        gen_n = str(self.kind_n)
        bits = []
        for expo in sorted(self.poly.terms, reverse=True):
            c = self.poly.terms[expo]
            lit = c.literal()
            if ("+" in lit[1:] or "-" in lit[1:] or "*" in lit) and expo != (0, 0):
                lit = f"({lit})"
            parts = [] if c.is_one() and expo != (0, 0) else [lit]
            for gen, k in ((gen_m, expo[0]), (gen_n, expo[1])):
                if k == 1:
                    parts.append(gen)
                elif k > 1:
                    parts.append(f"{gen}^{k}")
            bits.append("*".join(parts))
        text = bits[0]
        for bit in bits[1:]:
            text += f" - {bit[1:]}" if bit.startswith("-") else f" + {bit}"
        head = f"family ({text})"
        if self.start_m != 1 or self.start_n != 1:
            head += f" (from m={self.start_m}, n={self.start_n})"
        return head


@dataclass(frozen=True)
class Disk:
    center: GaussianRational
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", scalar(self.center))
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError("disk radius must be positive")

    def contains(self, x: GaussianRational) -> bool:
        return (x - self.center).norm_sq() <= self.radius_sq

    def sort_key(self):
        return (_pkey(self.center), self.radius_sq)

    def __str__(self) -> str:
        return f"disk({self.center.literal()}, r^2={self.radius_sq})"


@dataclass(frozen=True)
class Segment:
    a: GaussianRational
    b: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "a", scalar(self.a))
        object.__setattr__(self, "b", scalar(self.b))
        if self.a == self.b:
            raise ValueError("segment endpoints must differ")

    def contains(self, x: GaussianRational) -> bool:
        t = (x - self.a) / (self.b - self.a)
        return t.im == 0 and 0 <= t.re <= 1

    def sort_key(self):
        return (_pkey(self.a), _pkey(self.b))

    def __str__(self) -> str:
        return f"segment({self.a.literal()}, {self.b.literal()})"


@dataclass(frozen=True)
class Circle:
    center: GaussianRational
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", scalar(self.center))
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError("circle radius must be positive")

    def contains(self, x: GaussianRational) -> bool:
        return (x - self.center).norm_sq() == self.radius_sq

    def sort_key(self):
        return (_pkey(self.center), self.radius_sq)

    def __str__(self) -> str:
        return f"circle({self.center.literal()}, r^2={self.radius_sq})"


Primitive = FinitePoints | Tail | TailFamily | Disk | Segment | Circle
_REGIONS = (Disk, Segment, Circle)


def _tail_or_point(rule: TailRule, start: int):
    """A Tail, collapsed to a point when the rule is constant."""
    if rule.is_constant():
        return FinitePoints((rule.limit(),))
    return Tail(rule, start)


def _acc_primitives(prims) -> list:
    """Primitives describing the accumulation points of a primitive union.

    Finite unions commute with the derived-set operator, so this is
    computed primitive-wise: finite sets contribute nothing, a tail its
    limit, a family both one-sided limit tails (whose own limits cover
    the outer limit), and a region itself.
    """
    out = []
    for p in prims:
        if isinstance(p, FinitePoints):
            continue
        if isinstance(p, Tail):
            out.append(FinitePoints((p.limit(),)))
        elif isinstance(p, TailFamily):
            out.append(_tail_or_point(p.row_rule(), p.start_m))
            out.append(_tail_or_point(p.col_rule(), p.start_n))
            out.append(FinitePoints((p.outer_limit(),)))
        else:
            out.append(p)
    return out


def _any_contains(prims, x: GaussianRational) -> bool:
    return any(p.contains(x) for p in prims)


def _normalize(primitives, removed):
    finite: dict = {}
    tails: list[Tail] = []
    families: list[TailFamily] = []
    regions: list = []

    def add_point(x):
        finite[_pkey(x)] = x

    for p in primitives:
        if isinstance(p, FinitePoints):
            for x in p.points:
                add_point(x)
        elif isinstance(p, Tail):
            if p.rule.is_constant():  # pragma: no cover - Tail rejects these
                add_point(p.limit())
            else:
                tails.append(p)
        elif isinstance(p, TailFamily):
            du = p.poly.degree_in(0)
            dw = p.poly.degree_in(1)
            if du < 1 and dw < 1:
                add_point(p.outer_limit())
            elif du < 1:
                rule = p.col_rule()
                collapsed = _tail_or_point(rule, p.start_n)
                if isinstance(collapsed, FinitePoints):
                    add_point(collapsed.points[0])
                else:
                    tails.append(collapsed)
            elif dw < 1:
                rule = p.row_rule()
                collapsed = _tail_or_point(rule, p.start_m)
                if isinstance(collapsed, FinitePoints):
                    add_point(collapsed.points[0])
                else:
                    tails.append(collapsed)
            else:
                families.append(p)
        elif isinstance(p, _REGIONS):
            regions.append(p)
        else:
            raise TypeError(f"unknown primitive {p!r}")

    # merge identical-rule tails to the smallest start
    merged: dict = {}
    for t in tails:
        k = (t.rule.kind, t.rule.poly)
        if k not in merged or t.start < merged[k].start:
            merged[k] = t
    tails = list(merged.values())

    # family domination dedupe
    kept_families: list[TailFamily] = []
    for f in families:
        if any(g.dominates(f) for g in kept_families):
            continue
        kept_families = [g for g in kept_families if not f.dominates(g)]
        kept_families.append(f)
    families = kept_families

    # exact duplicate regions
    regions = list(dict.fromkeys(regions))

    # drop finite points subsumed by an infinite primitive
    infinite = tails + families + regions
    finite = {
        k: v for k, v in finite.items() if not _any_contains(infinite, v)
    }

    # absorb finite points that extend a tail downward
    changed = True
    while changed:
        changed = False
        for i, t in enumerate(tails):
            while t.start > 1:
                prev = t.rule.value(t.start - 1)
                if _pkey(prev) not in finite:
                    break
                finite.pop(_pkey(prev))
                t = Tail(t.rule, t.start - 1)
                tails[i] = t
                changed = True

    # resolve removals
    final_removed: dict = {}
    for x in removed:
        x = scalar(x)
        if _pkey(x) in finite:
            finite.pop(_pkey(x))
            continue
        bumping = True
        while bumping:
            bumping = False
            for i, t in enumerate(tails):
                if t.value(t.start) == x and t.limit() != x:
                    tails[i] = Tail(t.rule, t.start + 1)
                    bumping = True
        if _any_contains(tails + families + regions, x):
            final_removed[_pkey(x)] = x

    if final_removed:
        accp = _acc_primitives(tails + families + regions)
        for x in final_removed.values():
            if _any_contains(accp, x):
                raise ValueError(
                    f"cannot remove accumulation point {x.literal()}"
                )

    prims_out: list = []
    if finite:
        prims_out.append(FinitePoints(tuple(finite.values())))
    prims_out.extend(sorted(tails, key=Tail.sort_key))
    prims_out.extend(sorted(families, key=TailFamily.sort_key))
    for cls in _REGIONS:
        prims_out.extend(
            sorted((r for r in regions if isinstance(r, cls)), key=cls.sort_key)
        )
    removed_out = tuple(sorted(final_removed.values(), key=_pkey))
    return tuple(prims_out), removed_out


# ---------------------------------------------------------------------------
# the set type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralSet:
    """A closed set of the primitive grammar, minus finitely many
    removed isolated points.  Always held in normal form, so dataclass
    equality is set equality for this grammar."""

    primitives: tuple = ()
    removed: tuple = ()

    def __post_init__(self):
        prims, removed = _normalize(self.primitives, self.removed)
        object.__setattr__(self, "primitives", prims)
        object.__setattr__(self, "removed", removed)

    # -- membership and views -------------------------------------------

    def contains(self, x) -> bool:
        x = scalar(x)
        if any(r == x for r in self.removed):
            return False
        return _any_contains(self.primitives, x)

    def is_empty(self) -> bool:
        return not self.primitives

    def is_countable(self) -> bool:
        return not any(isinstance(p, _REGIONS) for p in self.primitives)

    def finite_points(self) -> tuple[GaussianRational, ...]:
        for p in self.primitives:
            if isinstance(p, FinitePoints):
                return p.points
        return ()

    def tails(self) -> tuple[Tail, ...]:
        return tuple(p for p in self.primitives if isinstance(p, Tail))

    def families(self) -> tuple[TailFamily, ...]:
        return tuple(p for p in self.primitives if isinstance(p, TailFamily))

    def regions(self) -> tuple:
        return tuple(p for p in self.primitives if isinstance(p, _REGIONS))

    def sample_values(self, horizon: int = 50) -> tuple[GaussianRational, ...]:
        """Deterministic point sample: all finite points, tail values and
        limits, and the family grid with its limit layers, up to the
        horizon.  Regions are not sampled; their presence raises."""
        if self.regions():
            raise ScopeLimitError("cannot enumerate a region primitive")
        out: dict = {}
        for x in self.finite_points():
            out[_pkey(x)] = x
        for t in self.tails():
            out[_pkey(t.limit())] = t.limit()
            for n in range(t.start, t.start + horizon):
                v = t.value(n)
                out[_pkey(v)] = v
        for f in self.families():
            layer = [f.outer_limit()]
            for rule, start in (
                (f.row_rule(), f.start_m),
                (f.col_rule(), f.start_n),
            ):
                layer.append(rule.limit())
                if not rule.is_constant():
                    layer.extend(
                        rule.value(n) for n in range(start, start + horizon)
                    )
            for m in range(f.start_m, f.start_m + horizon):
                for n in range(f.start_n, f.start_n + horizon):
                    layer.append(f.value(m, n))
            for v in layer:
                out[_pkey(v)] = v
        for r in self.removed:
            out.pop(_pkey(r), None)
        return tuple(sorted(out.values(), key=_pkey))

    # -- algebra -----------------------------------------------------------

    def union(self, other: "SpectralSet") -> "SpectralSet":
        keep = [x for x in self.removed if not other.contains(x)]
        keep += [x for x in other.removed if not self.contains(x)]
        return SpectralSet(self.primitives + other.primitives, tuple(keep))

    def __or__(self, other: "SpectralSet") -> "SpectralSet":
        return self.union(other)

    def remove_points(self, points) -> "SpectralSet":
        """Set difference by finitely many isolated points.

        Removing a point that is absent is an error here (unlike the
        lenient constructor), and removing an accumulation point is
        always an error: the result would not be closed.
        """
        pts = [scalar(p) for p in points]
        for p in pts:
            if not self.contains(p):
                raise ValueError(f"{p.literal()} is not in the set")
        return SpectralSet(self.primitives, self.removed + tuple(pts))

    def __str__(self) -> str:
        if not self.primitives:
            return "{}"
        body = " ; ".join(str(p) for p in self.primitives)
        if self.removed:
            body += " minus {" + ", ".join(r.literal() for r in self.removed) + "}"
        return body


# ---------------------------------------------------------------------------
# derived sets
# ---------------------------------------------------------------------------


def acc(s: SpectralSet) -> SpectralSet:
    """Accumulation points.  Removed points are isolated by invariant,
    so they never affect the result."""
    return SpectralSet(tuple(_acc_primitives(s.primitives)))


@dataclass(frozen=True)
class IsoView:
    """The isolated points of a set, reported structurally.

    `points` lists the explicit isolated points.  `tails` and `families`
    are the infinite primitives whose values are isolated, except any
    individual value that happens to land on an accumulation point; the
    per-point test `contains` resolves such coincidences exactly.
    """

    points: tuple[GaussianRational, ...]
    tails: tuple[Tail, ...]
    families: tuple[TailFamily, ...]
    source: SpectralSet
    accumulation: SpectralSet

    def contains(self, x) -> bool:
        x = scalar(x)
        return self.source.contains(x) and not self.accumulation.contains(x)

    def is_empty_description(self) -> bool:
        return not (self.points or self.tails or self.families)

    def __str__(self) -> str:
        parts = []
        if self.points:
            parts.append(
                "{" + ", ".join(p.literal() for p in self.points) + "}"
            )
        parts.extend(f"values of ({t})" for t in self.tails)
        parts.extend(f"grid values of ({f})" for f in self.families)
        return " ; ".join(parts) if parts else "{}"


def iso(s: SpectralSet) -> IsoView:
    """Isolated points: the set minus its accumulation points."""
    accumulation = acc(s)
    pts = tuple(
        p for p in s.finite_points() if not accumulation.contains(p)
    )
    return IsoView(pts, s.tails(), s.families(), s, accumulation)


# ---------------------------------------------------------------------------
# polynomial spectral mapping
# ---------------------------------------------------------------------------


def poly_map(f: ExactPolynomial, s: SpectralSet) -> SpectralSet:
    """The exact image f(s).

    Point, tail and family primitives map exactly for every nonconstant
    f: rules are polynomials in a vanishing generator, and that class is
    closed under post-composition.  Region primitives map under affine f
    only (a nonaffine image of a disk is not a disk); anything beyond is
    out of scope, not silently approximated.

    Removed points x map to removed f(x) unless some other member of s
    has the same image, in which case the image point stays.
    """
    if f.degree < 1:
        raise ValueError("spectral mapping requires a nonconstant polynomial")
    has_regions = any(isinstance(p, _REGIONS) for p in s.primitives)
    if has_regions and f.degree > 1:
        raise ScopeLimitError(
            "nonaffine polynomial images of region primitives are not representable"
        )
    parts: list = []
    for p in s.primitives:
        if isinstance(p, FinitePoints):
            parts.append(FinitePoints(tuple(f.evaluate(x) for x in p.points)))
        elif isinstance(p, Tail):
            parts.append(_tail_or_point(p.rule.after(f), p.start))
        elif isinstance(p, TailFamily):
            parts.append(
                TailFamily(
                    apply_univariate(f, p.poly),
                    p.kind_m,
                    p.kind_n,
                    p.start_m,
                    p.start_n,
                )
            )
        elif isinstance(p, Disk):
            alpha, beta = f.coeffs[1], f.coeffs[0]
            parts.append(
                Disk(alpha * p.center + beta, alpha.norm_sq() * p.radius_sq)
            )
        elif isinstance(p, Circle):
            alpha, beta = f.coeffs[1], f.coeffs[0]
            parts.append(
                Circle(alpha * p.center + beta, alpha.norm_sq() * p.radius_sq)
            )
        elif isinstance(p, Segment):
            parts.append(Segment(f.evaluate(p.a), f.evaluate(p.b)))
    removed_img = []
    for x in s.removed:
        fx = f.evaluate(x)
        fiber = gaussian_roots(f - ExactPolynomial((fx,)))
        if any(z != x and s.contains(z) for z in fiber):
            continue
        removed_img.append(fx)
    return SpectralSet(tuple(parts), tuple(removed_img))


# ---------------------------------------------------------------------------
# spectral elements: a spectrum plus its poles
# ---------------------------------------------------------------------------


class _AllIso:
    """Sentinel: every isolated spectral point is a pole."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALL_ISO"


ALL_ISO = _AllIso()


@dataclass(frozen=True)
class SpectralElement:
    """An abstract element known only through its spectrum and poles.

    `poles` is either the ALL_ISO sentinel (every isolated point is a
    pole, the normal-operator situation) or an explicit tuple of
    isolated points of sigma.
    """

    sigma: SpectralSet
    poles: tuple = ()

    def __post_init__(self):
        if isinstance(self.poles, _AllIso):
            return
        pts = tuple(scalar(p) for p in self.poles)
        object.__setattr__(self, "poles", pts)
        accumulation = acc(self.sigma)
        for p in pts:
            if not self.sigma.contains(p):
                raise ValueError(f"pole {p.literal()} is not a spectral point")
            if accumulation.contains(p):
                raise ValueError(f"pole {p.literal()} is not isolated")


def sigma_d(e: SpectralElement) -> SpectralSet:
    """Spectrum minus poles, closed by construction.

    Removing the poles from sigma leaves (iso minus poles) union acc,
    since poles are isolated; with ALL_ISO poles this is exactly acc."""
    if isinstance(e.poles, _AllIso):
        return acc(e.sigma)
    return e.sigma.remove_points(e.poles)


def sigma_kd(e: SpectralElement) -> SpectralSet:
    """Accumulation points of the spectrum."""
    return acc(e.sigma)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def empty_set() -> SpectralSet:
    return SpectralSet()


def finite(*points) -> SpectralSet:
    return SpectralSet((FinitePoints(tuple(scalar(p) for p in points)),))


def tail(rule: TailRule, start: int = 1) -> SpectralSet:
    return SpectralSet((_tail_or_point(rule, start),))


def bivariate(terms: dict) -> MultiPoly:
    """Two-variable rule polynomial from {(i, j): coefficient}; variable
    0 is the row generator u, variable 1 the column generator w."""
    return MultiPoly(2, {e: scalar(c) for e, c in terms.items()})


def family(
    poly: MultiPoly,
    kind_m: GeneratorKind | None = None,
    kind_n: GeneratorKind | None = None,
    start_m: int = 1,
    start_n: int = 1,
) -> SpectralSet:
    kind_m = kind_m if kind_m is not None else Harmonic()
    kind_n = kind_n if kind_n is not None else Harmonic()
    du, dw = poly.degree_in(0), poly.degree_in(1)
    if du < 1 or dw < 1:
        # degenerate: hand the collapse to the normalizer via a plain tail
        if du < 1 and dw < 1:
            return finite(poly.evaluate([GR.zero(), GR.zero()]))
        if du < 1:
            rule = TailRule(kind_n, poly.substitute(0, 0).to_univariate(1))
            return tail(rule, start_n)
        rule = TailRule(kind_m, poly.substitute(1, 0).to_univariate(0))
        return tail(rule, start_m)
    return SpectralSet(
        (TailFamily(poly, kind_m, kind_n, start_m, start_n),)
    )


def disk(center, radius) -> SpectralSet:
    r = Fraction(radius)
    if r <= 0:
        raise ValueError("disk radius must be positive")
    return SpectralSet((Disk(scalar(center), r * r),))


def segment(a, b) -> SpectralSet:
    return SpectralSet((Segment(scalar(a), scalar(b)),))


def circle(center, radius) -> SpectralSet:
    r = Fraction(radius)
    if r <= 0:
        raise ValueError("circle radius must be positive")
    return SpectralSet((Circle(scalar(center), r * r),))
