"""Sequence rules for symbolic spectral sets.

A rule is a polynomial P applied to a generator sequence u_n that tends
to zero: u_n = 1/n (harmonic) or u_n = r^n with 0 < |r| < 1 (geometric).
The n-th value is P(u_n) and the limit is P(0), the constant term.

Polynomials in a vanishing generator are closed under post-composition
with any polynomial f: f(P(u_n)) = (f o P)(u_n).  That closure is what
keeps the polynomial spectral mapping exact on tail sets, with no
enumeration horizon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact import ExactPolynomial, GR, GaussianRational, gaussian_roots


def scalar(value) -> GaussianRational:
    """Coerce an int/Fraction/GaussianRational or exact literal string."""
    if isinstance(value, str):
        return GaussianRational.parse(value)
    return GR.coerce(value)


@dataclass(frozen=True)
class Harmonic:
    """Generator u_n = 1/n for n >= 1."""

    def value(self, n: int) -> GaussianRational:
        if n < 1:
            raise ValueError("harmonic generator needs n >= 1")
        return GR.coerce(Fraction(1, n))

    def index_of(self, u: GaussianRational) -> int | None:
        """The n with u = 1/n, or None."""
        if u.im != 0 or u.re <= 0:
            return None
        if u.re.numerator != 1:
            return None
        return u.re.denominator

    def sort_key(self):
        return ("harmonic",)

    def __str__(self) -> str:
        return "1/n"


@dataclass(frozen=True)
class Geometric:
    """Generator u_n = r^n for n >= 1, with 0 < |r| < 1 exactly."""

    ratio: GaussianRational

    def __post_init__(self):
        r = GR.coerce(self.ratio)
        object.__setattr__(self, "ratio", r)
        if r.is_zero() or r.norm_sq() >= 1:
            raise ValueError("geometric ratio must satisfy 0 < |r| < 1")

    def value(self, n: int) -> GaussianRational:
        if n < 1:
            raise ValueError("geometric generator needs n >= 1")
        return self.ratio**n

    def index_of(self, u: GaussianRational) -> int | None:
        """The n with u = r^n, or None.

        |r^n| is strictly decreasing, so the scan stops as soon as the
        norm drops below |u|; at most one index can match.
        """
        if u.is_zero():
            return None
        target = u.norm_sq()
        n = 1
        power = self.ratio
        while power.norm_sq() > target:
            power = power * self.ratio
            n += 1
        if power.norm_sq() == target and power == u:
            return n
        return None

    def sort_key(self):
        return ("geometric", self.ratio.re, self.ratio.im)

    def __str__(self) -> str:
        return f"({self.ratio.literal()})^n"


GeneratorKind = Harmonic | Geometric


@dataclass(frozen=True)
class TailRule:
    """A generator kind together with the polynomial applied to it."""

    kind: GeneratorKind
    poly: ExactPolynomial

    def value(self, n: int) -> GaussianRational:
        return self.poly.evaluate(self.kind.value(n))

    def limit(self) -> GaussianRational:
        return self.poly.evaluate(GR.zero())

    def is_constant(self) -> bool:
        return self.poly.degree < 1

    def after(self, f: ExactPolynomial) -> "TailRule":
        """The rule n -> f(value(n)); exact thanks to closure."""
        return TailRule(self.kind, f.compose(self.poly))

    def indices_of(self, x: GaussianRational, start: int) -> tuple[int, ...]:
        """All n >= start with value(n) = x, by exact root extraction."""
        shifted = self.poly - ExactPolynomial((x,))
        if shifted.is_zero():
            raise ValueError("constant rule matches every index")
        hits = []
        for root in gaussian_roots(shifted):
            n = self.kind.index_of(root)
            if n is not None and n >= start:
                hits.append(n)
        return tuple(sorted(set(hits)))

    def combine(self, other: "TailRule", op: str) -> "TailRule":
        if self.kind != other.kind:
            raise ValueError("rules over different generators do not combine")
        if op == "+":
            return TailRule(self.kind, self.poly + other.poly)
        if op == "*":
            return TailRule(self.kind, self.poly * other.poly)
        raise ValueError(f"unsupported rule operation {op!r}")

    def sort_key(self):
        return (
            self.kind.sort_key(),
            tuple((c.re, c.im) for c in self.poly.coeffs),
        )

    def __str__(self) -> str:
        u = str(self.kind)
        if self.poly.degree == 1:
            alpha, beta = self.poly.coeffs[1], self.poly.coeffs[0]
            text = f"{alpha.literal()}*{u}" if not alpha.is_one() else u
            if not beta.is_zero():
                text += f" + {beta.literal()}"
            return text
        terms = []
        for k in range(self.poly.degree, -1, -1):
            c = self.poly.coeffs[k] if k < len(self.poly.coeffs) else GR.zero()
            if c.is_zero():
                continue
            if k == 0:
                terms.append(c.literal())
            elif k == 1:
                terms.append(f"{c.literal()}*{u}")
            else:
                terms.append(f"{c.literal()}*({u})^{k}")
        return " + ".join(terms) if terms else "0"


def harmonic_rule(*coeffs) -> TailRule:
    """TailRule for P(1/n) with ascending coefficients."""
    return TailRule(Harmonic(), ExactPolynomial([scalar(c) for c in coeffs]))


def geometric_rule(ratio, *coeffs) -> TailRule:
    """TailRule for P(r^n) with ascending coefficients."""
    return TailRule(
        Geometric(scalar(ratio)), ExactPolynomial([scalar(c) for c in coeffs])
    )
