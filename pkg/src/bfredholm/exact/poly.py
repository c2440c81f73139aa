"""Dense univariate polynomials over the Gaussian rationals.

Coefficients are stored in ascending order and trailing zeros are trimmed,
so two polynomials are equal iff their coefficient tuples are equal.  The
zero polynomial has degree -1 by convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .gaussian import GR, GaussianRational, Scalarish

Coeffish = Union[int, Fraction, GaussianRational]


def _trim(coeffs: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    last = -1
    for idx, c in enumerate(coeffs):
        if c:
            last = idx
    return tuple(coeffs[: last + 1])


class ExactPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeffish] = ()):
        object.__setattr__(
            self, "coeffs", _trim([GR.coerce(c) for c in coeffs])
        )

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    # -- construction --------------------------------------------------

    @staticmethod
    def zero() -> "ExactPolynomial":
        return ExactPolynomial()

    @staticmethod
    def one() -> "ExactPolynomial":
        return ExactPolynomial((1,))

    @staticmethod
    def x() -> "ExactPolynomial":
        return ExactPolynomial((0, 1))

    @staticmethod
    def constant(c: Coeffish) -> "ExactPolynomial":
        return ExactPolynomial((c,))

    @staticmethod
    def monomial(degree: int, coeff: Coeffish = 1) -> "ExactPolynomial":
        return ExactPolynomial([0] * degree + [coeff])

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GR.zero()

    def monic(self) -> "ExactPolynomial":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead.is_one():
            return self
        return ExactPolynomial([c / lead for c in self.coeffs])

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for idx, c in enumerate(b):
            out[idx] = out[idx] + c
        return ExactPolynomial(out)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "ExactPolynomial":
        if isinstance(other, (int, Fraction, GaussianRational)):
            s = GR.coerce(other)
            return ExactPolynomial([c * s for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPolynomial()
        out = [GR.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactPolynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = ExactPolynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: "ExactPolynomial"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcoeffs = divisor.coeffs
        dn = len(dcoeffs) - 1
        lead_inv = GR.one() / dcoeffs[-1]
        if len(rem) - 1 < dn:
            return ExactPolynomial(), self
        quot = [GR.zero()] * (len(rem) - dn)
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if not c:
                continue
            factor = c * lead_inv
            quot[k - dn] = factor
            for j in range(dn + 1):
                rem[k - dn + j] = rem[k - dn + j] - factor * dcoeffs[j]
        return ExactPolynomial(quot), ExactPolynomial(rem)

    def __mod__(self, divisor: "ExactPolynomial") -> "ExactPolynomial":
        return divmod(self, divisor)[1]

    def __floordiv__(self, divisor: "ExactPolynomial") -> "ExactPolynomial":
        return divmod(self, divisor)[0]

    # -- calculus and evaluation ------------------------------------------

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(
            [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        )

    def evaluate(self, point: Scalarish) -> GaussianRational:
        z = GR.coerce(point)
        acc = GR.zero()
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def compose(self, inner: "ExactPolynomial") -> "ExactPolynomial":
        """self(inner(x)), by Horner in the polynomial ring."""
        acc = ExactPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + ExactPolynomial.constant(c)
        return acc

    def shift_scale(self, scale: Scalarish, shift: Scalarish) -> "ExactPolynomial":
        """self(scale*x + shift)."""
        return self.compose(ExactPolynomial((shift, scale)))

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append("x" if c.is_one() else f"({c})*x")
            else:
                parts.append(f"x^{k}" if c.is_one() else f"({c})*x^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"


def poly_gcd(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def poly_xgcd(a: ExactPolynomial, b: ExactPolynomial):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    u0, u1 = ExactPolynomial.one(), ExactPolynomial.zero()
    v0, v1 = ExactPolynomial.zero(), ExactPolynomial.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading()
    inv = GR.one() / lead
    return r0.monic(), u0 * inv, v0 * inv


def bezout(a: ExactPolynomial, b: ExactPolynomial):
    """(u, v) with u*a + v*b = 1; raises ValueError unless gcd(a, b) = 1."""
    g, u, v = poly_xgcd(a, b)
    if not g.is_one():
        raise ValueError(f"polynomials are not coprime; gcd = {g}")
    return u, v


def split_at_zero(p: ExactPolynomial):
    """Write p = x^k * q with q(0) != 0; returns (k, q).

    k is the multiplicity of the root 0, i.e. the number of trailing zero
    coefficients in ascending order.
    """
    if p.is_zero():
        raise ValueError("cannot split the zero polynomial at 0")
    k = 0
    while not p.coeffs[k]:
        k += 1
    return k, ExactPolynomial(p.coeffs[k:])
