"""Arithmetic in Q(i)[x]/(f) for a monic irreducible f.

Used to test Weyl/Browder membership at symbolic spectral points: a root
of an irreducible factor of a characteristic polynomial is represented by
the residue class of x, and all matrix work over the extension stays exact.
The field property rests on f being irreducible, which the factorization
layer guarantees for the moduli handed in here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .gaussian import GR, GaussianRational
from .poly import ExactPolynomial, poly_xgcd

Scalarish = Union[int, Fraction, GaussianRational]


class ExtensionField:
    def __init__(self, modulus: ExactPolynomial):
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.degree = modulus.degree

    def element(self, rep: ExactPolynomial) -> "ExtScalar":
        return ExtScalar(self, rep % self.modulus)

    def scalar(self, c: Scalarish) -> "ExtScalar":
        return self.element(ExactPolynomial.constant(GR.coerce(c)))

    def generator(self) -> "ExtScalar":
        """The residue class of x: the symbolic root itself."""
        return self.element(ExactPolynomial.x())

    def zero(self) -> "ExtScalar":
        return self.element(ExactPolynomial.zero())

    def one(self) -> "ExtScalar":
        return self.element(ExactPolynomial.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtensionField):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"ExtensionField(x mod {self.modulus})"


class ExtScalar:
    __slots__ = ("field", "rep")

    def __init__(self, field: ExtensionField, rep: ExactPolynomial):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    def _coerce(self, other) -> "ExtScalar":
        if isinstance(other, ExtScalar):
            if other.field != self.field:
                raise ValueError("extension field mismatch")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.field.scalar(other)
        raise TypeError(f"cannot coerce {type(other).__name__} into the extension")

    def __add__(self, other) -> "ExtScalar":
        o = self._coerce(other)
        return ExtScalar(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __sub__(self, other) -> "ExtScalar":
        o = self._coerce(other)
        return ExtScalar(self.field, self.rep - o.rep)

    def __rsub__(self, other) -> "ExtScalar":
        o = self._coerce(other)
        return ExtScalar(self.field, o.rep - self.rep)

    def __mul__(self, other) -> "ExtScalar":
        o = self._coerce(other)
        return ExtScalar(self.field, (self.rep * o.rep) % self.field.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(self.field, -self.rep)

    def inverse(self) -> "ExtScalar":
        if self.rep.is_zero():
            raise ZeroDivisionError("inverting zero in an extension field")
        g, u, _ = poly_xgcd(self.rep, self.field.modulus)
        if not g.is_one():
            # Cannot happen for an irreducible modulus; fail loudly otherwise.
            raise ValueError("modulus is not irreducible: found a zero divisor")
        return ExtScalar(self.field, u % self.field.modulus)

    def __truediv__(self, other) -> "ExtScalar":
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return not self.rep.is_zero()

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = self.field.scalar(other)
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self.field == other.field and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.field, self.rep))

    def __repr__(self) -> str:
        return f"ExtScalar({self.rep})"


def ext_matrix_det(grid: Sequence[Sequence[ExtScalar]], field: ExtensionField) -> ExtScalar:
    """Determinant over the extension by fraction-producing elimination."""
    n = len(grid)
    rows = [list(r) for r in grid]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square grid")
    det = field.one()
    for c in range(n):
        pivot = None
        for k in range(c, n):
            if rows[k][c]:
                pivot = k
                break
        if pivot is None:
            return field.zero()
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = rows[c][c].inverse()
        for k in range(c + 1, n):
            if rows[k][c]:
                f = rows[k][c] * inv
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[c])]
    return det
