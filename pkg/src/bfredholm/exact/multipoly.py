"""Sparse multivariate polynomials over the Gaussian rationals.

Used in two places: the symbolic determinant that decides Weyl/Browder
membership (variables = coefficients along a kernel basis) and the
two-index term rules of spectral tail families (two variables).  Terms
map exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

from .gaussian import GR, GaussianRational
from .poly import ExactPolynomial

Coeffish = Union[int, Fraction, GaussianRational]


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Coeffish] = ()):
        clean: dict[tuple[int, ...], GaussianRational] = {}
        for expo, coeff in dict(terms).items():
            c = GR.coerce(coeff)
            if not c:
                continue
            if len(expo) != nvars:
                raise ValueError("exponent tuple arity does not match nvars")
            clean[tuple(expo)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(nvars: int, c: Coeffish) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, index: int) -> "MultiPoly":
        expo = tuple(1 if k == index else 0 for k in range(nvars))
        return MultiPoly(nvars, {expo: 1})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.nvars, GR.zero())

    # -- arithmetic ------------------------------------------------------------

    def _require_same_arity(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch between multivariate polynomials")

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.nvars, other)
        self._require_same_arity(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            s = out.get(expo, GR.zero()) + c
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            s = GR.coerce(other)
            return MultiPoly(self.nvars, {e: c * s for e, c in self.terms.items()})
        self._require_same_arity(other)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(expo, GR.zero()) + ca * cb
                if s:
                    out[expo] = s
                else:
                    out.pop(expo, None)
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, point: Sequence[Coeffish]) -> GaussianRational:
        if len(point) != self.nvars:
            raise ValueError("evaluation point arity mismatch")
        vals = [GR.coerce(v) for v in point]
        acc = GR.zero()
        for expo, c in self.terms.items():
            term = c
            for v, e in zip(vals, expo):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def substitute(self, var: int, value: Coeffish) -> "MultiPoly":
        """Plug an exact scalar into one variable; arity is preserved."""
        v = GR.coerce(value)
        out = MultiPoly(self.nvars, {})
        for expo, c in self.terms.items():
            coeff = c * v ** expo[var] if expo[var] else c
            reduced = tuple(0 if k == var else e for k, e in enumerate(expo))
            out = out + MultiPoly(self.nvars, {reduced: coeff})
        return out

    def to_univariate(self, var: int) -> ExactPolynomial:
        """Collapse to a univariate polynomial; all other variables must be absent."""
        coeffs = [GR.zero()] * (self.degree_in(var) + 1 if self.terms else 0)
        for expo, c in self.terms.items():
            if any(e for k, e in enumerate(expo) if k != var):
                raise ValueError("polynomial involves more than the requested variable")
            coeffs[expo[var]] = c
        return ExactPolynomial(coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for expo in sorted(self.terms, reverse=True):
            c = self.terms[expo]
            mono = "*".join(
                f"t{k}^{e}" if e > 1 else f"t{k}" for k, e in enumerate(expo) if e
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def apply_univariate(f: ExactPolynomial, inner: MultiPoly) -> MultiPoly:
    """f(inner) by Horner; stays in the same multivariate ring."""
    acc = MultiPoly(inner.nvars, {})
    for c in reversed(f.coeffs):
        acc = acc * inner + MultiPoly.constant(inner.nvars, c)
    return acc


def det_over_ring(grid: Sequence[Sequence], zero, one):
    """Determinant of a square grid over any commutative ring.

    Division-free: dynamic programming over column subsets (expansion along
    successive rows), so it works for MultiPoly entries and for extension
    field elements alike.  Entries must support +, *, unary -, and truthiness.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("determinant of a non-square grid")
    if n == 0:
        return one
    minors = {0: one}
    for r in range(n):
        next_minors = {}
        row = grid[r]
        masks = [m for m in minors if True]
        for mask in masks:
            base = minors[mask]
            if not base:
                continue
            # extend the r-row minor by one more column
            pos = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    pos += 1
                    continue
                entry = row[j]
                if entry:
                    contrib = entry * base
                    if (r + pos) & 1:
                        contrib = -contrib
                    new_mask = mask | bit
                    if new_mask in next_minors:
                        next_minors[new_mask] = next_minors[new_mask] + contrib
                    else:
                        next_minors[new_mask] = contrib
        minors = next_minors
        if not minors:
            return zero
    full = (1 << n) - 1
    return minors.get(full, zero)
