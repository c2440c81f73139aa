"""Spectra of matrices as exact algebraic point sets.

A spectrum over the Gaussian rationals is stored as the monic irreducible
factors (with multiplicities) of a characteristic polynomial.  Roots lying
in Q(i) appear through linear factors and are explicit points; roots of
higher-degree irreducible factors are kept symbolically, factor and all.

Factorization into irreducibles over Q(i) is handled directly for degrees
one and two (a quadratic splits over Q(i) exactly when its discriminant is
a square there) and delegated to sympy's QQ_I domain above that;
everything around sympy stays in this package's exact types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable

import sympy

from .gaussian import GR, GaussianRational
from .poly import ExactPolynomial

_X = sympy.Symbol("x")


def _to_sympy_expr(p: ExactPolynomial):
    expr = sympy.Integer(0)
    for k, c in enumerate(p.coeffs):
        coeff = sympy.Rational(c.re.numerator, c.re.denominator)
        if c.im:
            coeff = coeff + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        expr = expr + coeff * _X**k
    return expr


def _from_sympy_number(value) -> GaussianRational:
    re_part = sympy.re(value)
    im_part = sympy.im(value)
    return GaussianRational(
        Fraction(int(re_part.p), int(re_part.q)),
        Fraction(int(im_part.p), int(im_part.q)),
    )


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact nonnegative square root of x in Q, or None if none exists."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def gaussian_sqrt(z: GaussianRational) -> GaussianRational | None:
    """A square root of z in Q(i), or None if z is not a square there.

    Writing z = x + yi and w = u + vi with w^2 = z forces u^2 + v^2 to be
    the rational square root of x^2 + y^2 and u^2 = (x + that)/2, so the
    existence test reduces to two rational-square checks.
    """
    if z.is_zero():
        return GR.coerce(0)
    r = rational_sqrt(z.norm_sq())
    if r is None:
        return None
    u = rational_sqrt((z.re + r) / 2)
    if u is None:
        return None
    if u == 0:
        v = rational_sqrt((r - z.re) / 2)
        if v is None:
            return None
    else:
        v = z.im / (2 * u)
    w = GaussianRational(u, v)
    return w if w * w == z else None


def _quadratic_roots(
    q: ExactPolynomial,
) -> tuple[GaussianRational, GaussianRational] | None:
    """Roots of a monic quadratic when they lie in Q(i), else None."""
    c, b = q.coeffs[0], q.coeffs[1]
    s = gaussian_sqrt(b * b - 4 * c)
    if s is None:
        return None
    return (-b + s) / 2, (-b - s) / 2


def factor_gaussian(p: ExactPolynomial) -> tuple[tuple[ExactPolynomial, int], ...]:
    """Monic irreducible factors of p over Q(i), with multiplicities.

    The factor order is canonical (degree, then coefficient literals), so
    the result is deterministic regardless of sympy's internal ordering.
    Degrees one and two are split in closed form; sympy only sees higher
    degrees.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return ()
    work = p.monic()
    if work.degree == 1:
        return ((work, 1),)
    if work.degree == 2:
        roots = _quadratic_roots(work)
        if roots is None:
            return ((work, 1),)
        r1, r2 = roots
        if r1 == r2:
            return ((ExactPolynomial((-r1, 1)), 2),)
        out = [(ExactPolynomial((-r1, 1)), 1), (ExactPolynomial((-r2, 1)), 1)]
        out.sort(key=lambda fm: _factor_key(fm[0]))
        return tuple(out)
    poly = sympy.Poly(_to_sympy_expr(work), _X, domain="QQ_I")
    _, raw = poly.factor_list()
    out = []
    for fac, mult in raw:
        coeffs = [_from_sympy_number(c) for c in reversed(fac.all_coeffs())]
        out.append((ExactPolynomial(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: _factor_key(fm[0]))
    return tuple(out)


def _factor_key(f: ExactPolynomial):
    return (f.degree, tuple(str(c) for c in f.coeffs))


def gaussian_roots(p: ExactPolynomial) -> tuple[GaussianRational, ...]:
    """All roots of p lying in Q(i), each listed once."""
    return tuple(-f.coeffs[0] for f, _ in factor_gaussian(p) if f.degree == 1)


@dataclass(frozen=True)
class AlgebraicPointSet:
    """Root multiset of a product of monic irreducible polynomials."""

    factors: tuple[tuple[ExactPolynomial, int], ...]

    def __post_init__(self):
        for f, mult in self.factors:
            if not f.is_monic() or f.degree < 1:
                raise ValueError("factors must be monic of degree >= 1")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
        ordered = tuple(sorted(self.factors, key=lambda fm: _factor_key(fm[0])))
        object.__setattr__(self, "factors", ordered)

    @staticmethod
    def from_poly(p: ExactPolynomial) -> "AlgebraicPointSet":
        return AlgebraicPointSet(factor_gaussian(p))

    @staticmethod
    def from_points(points: Iterable[GaussianRational]) -> "AlgebraicPointSet":
        counts: dict[GaussianRational, int] = {}
        for pt in points:
            counts[pt] = counts.get(pt, 0) + 1
        return AlgebraicPointSet(
            tuple((ExactPolynomial((-pt, 1)), mult) for pt, mult in counts.items())
        )

    @staticmethod
    def empty() -> "AlgebraicPointSet":
        return AlgebraicPointSet(())

    def merged_with(self, other: "AlgebraicPointSet") -> "AlgebraicPointSet":
        """Multiset union: the root set of the product of the two
        defining polynomials, with multiplicities added."""
        counts: dict[ExactPolynomial, int] = {}
        for f, mult in self.factors + other.factors:
            counts[f] = counts.get(f, 0) + mult
        return AlgebraicPointSet(tuple(counts.items()))

    # -- views ------------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.factors

    def explicit_points(self) -> tuple[tuple[GaussianRational, int], ...]:
        """(point, multiplicity) for every factor of degree 1."""
        return tuple(
            (-f.coeffs[0], mult) for f, mult in self.factors if f.degree == 1
        )

    def symbolic_factors(self) -> tuple[tuple[ExactPolynomial, int], ...]:
        return tuple((f, mult) for f, mult in self.factors if f.degree >= 2)

    def root_count(self) -> int:
        """Number of roots counted with multiplicity and algebraic degree."""
        return sum(f.degree * mult for f, mult in self.factors)

    def contains(self, point: GaussianRational) -> bool:
        return any(
            f.degree == 1 and f.coeffs[0] == -point for f, _ in self.factors
        )

    def support(self) -> tuple[ExactPolynomial, ...]:
        """The distinct irreducible factors, multiplicities forgotten."""
        return tuple(f for f, _ in self.factors)

    def same_support(self, other: "AlgebraicPointSet") -> bool:
        return self.support() == other.support()

    def filtered(
        self, keep: Callable[[ExactPolynomial, int], bool]
    ) -> "AlgebraicPointSet":
        return AlgebraicPointSet(
            tuple((f, mult) for f, mult in self.factors if keep(f, mult))
        )

    def shifted(self, offset: GaussianRational) -> "AlgebraicPointSet":
        """The point set translated by offset (roots of f(x - offset))."""
        shift = ExactPolynomial((-offset, 1))
        return AlgebraicPointSet(
            tuple((f.compose(shift).monic(), mult) for f, mult in self.factors)
        )

    def __str__(self) -> str:
        if not self.factors:
            return "{}"
        bits = []
        for f, mult in self.factors:
            if f.degree == 1:
                root = -f.coeffs[0]
                bits.append(str(root) if mult == 1 else f"{root} (x{mult})")
            else:
                bits.append(f"roots of {f}" + ("" if mult == 1 else f" (x{mult})"))
        return "{" + ", ".join(bits) + "}"
