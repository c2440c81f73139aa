"""Exact scalars: Gaussian rationals, i.e. numbers p/q + (r/s)*i.

Both parts are arbitrary-precision ``fractions.Fraction`` values, so every
scalar is stored in canonical reduced form and equality is structural.
There is no floating point anywhere in this package; these scalars are the
only numbers the rest of the code computes with.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rationalish = Union[int, Fraction]
Scalarish = Union[int, Fraction, "GaussianRational"]

_TERM = re.compile(
    r"""(?P<coef>\d+(?:/\d+)?)?      # optional rational coefficient
        (?P<imag>\*?i)?$             # optional imaginary marker""",
    re.VERBOSE,
)


class GaussianRational:
    """A number re + im*i with exact rational re and im."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction -------------------------------------------------

    @staticmethod
    def zero() -> "GaussianRational":
        return _ZERO

    @staticmethod
    def one() -> "GaussianRational":
        return _ONE

    @staticmethod
    def i() -> "GaussianRational":
        return _I

    @staticmethod
    def coerce(value: Scalarish) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse an exact literal like ``3``, ``-1/2``, ``i`` or ``3/2-2/5*i``.

        Decimal floats are rejected; only integers, fractions and an
        imaginary marker ``i`` (optionally ``*i``) are accepted.
        """
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty scalar literal")
        if "." in compact:
            raise ValueError(f"decimal floats are not accepted: {text!r}")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        saw_term = False
        while pos < len(compact):
            sign = 1
            if compact[pos] in "+-":
                if compact[pos] == "-":
                    sign = -1
                pos += 1
            nxt = len(compact)
            for j in range(pos, len(compact)):
                if compact[j] in "+-":
                    nxt = j
                    break
            term = compact[pos:nxt]
            pos = nxt
            m = _TERM.match(term)
            if term == "" or m is None or (m.group("coef") is None and m.group("imag") is None):
                raise ValueError(f"bad scalar literal: {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("imag"):
                im_part += sign * coef
            else:
                re_part += sign * coef
            saw_term = True
        if not saw_term:
            raise ValueError(f"bad scalar literal: {text!r}")
        return GaussianRational(re_part, im_part)

    # -- arithmetic ----------------------------------------------------
    # Binary operators return NotImplemented on foreign operands so that
    # richer types (matrices, algebra elements) get their reflected shot.

    @staticmethod
    def _try_coerce(value) -> "GaussianRational | None":
        if isinstance(value, (GaussianRational, int, Fraction)):
            return GaussianRational.coerce(value)
        return None

    def __add__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other: Scalarish) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            return _ONE / (self ** (-exponent))
        result = _ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        return _ONE / self

    # -- predicates and canonical form --------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def literal(self) -> str:
        """Canonical exact literal; parse(literal()) round-trips."""
        def imag_word(v: Fraction) -> str:
            if v == 1:
                return "i"
            if v == -1:
                return "-i"
            return f"{v}*i"

        if not self.im:
            return str(self.re)
        if not self.re:
            return imag_word(self.im)
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        tail = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{sign}{tail}"

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


_ZERO = GaussianRational(0, 0)
_ONE = GaussianRational(1, 0)
_I = GaussianRational(0, 1)

GR = GaussianRational
