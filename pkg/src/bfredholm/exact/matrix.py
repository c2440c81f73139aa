"""Dense exact matrices over the Gaussian rationals.

All decisions (rank, solvability, invertibility) are made by Gaussian
elimination over the exact scalar field, with the pivot always taken as
the first nonzero entry scanning down the column.  That makes every
reduction deterministic, so witnesses extracted from a reduction are
reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .gaussian import GR, GaussianRational, Scalarish
from .poly import ExactPolynomial

Entryish = Union[int, Fraction, GaussianRational, str]


def _coerce_entry(value: Entryish) -> GaussianRational:
    if isinstance(value, str):
        return GaussianRational.parse(value)
    return GR.coerce(value)


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Entryish]]):
        grid = tuple(tuple(_coerce_entry(v) for v in row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows in matrix literal")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return ExactMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def unit(n: int, i: int, j: int) -> "ExactMatrix":
        """The matrix unit E_ij in the n-by-n ambient space."""
        return ExactMatrix(
            [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)]
        )

    @staticmethod
    def diagonal(values: Sequence[Entryish]) -> "ExactMatrix":
        n = len(values)
        return ExactMatrix(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def column(values: Sequence[Entryish]) -> "ExactMatrix":
        return ExactMatrix([[v] for v in values])

    # -- arithmetic -------------------------------------------------------

    def _require_same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            s = GR.coerce(other)
            return ExactMatrix([[a * s for a in row] for row in self.entries])
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"product shape mismatch: {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = tuple(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = GR.zero()
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if exponent < 0:
            inv = self.inverse()
            if inv is None:
                raise ValueError("negative power of a singular matrix")
            return inv ** (-exponent)
        result = ExactMatrix.identity(self.rows)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)))

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = GR.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def scaled(self, s: Scalarish) -> "ExactMatrix":
        return self * GR.coerce(s)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not a for row in self.entries for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == ExactMatrix.identity(self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def vectorize(self) -> tuple[GaussianRational, ...]:
        """Row-major flattening, used to treat matrices as coordinate vectors."""
        return tuple(a for row in self.entries for a in row)

    def __str__(self) -> str:
        body = "; ".join(
            "[" + ", ".join(str(a) for a in row) + "]" for row in self.entries
        )
        return f"[{body}]"

    __repr__ = __str__


# -- elimination core --------------------------------------------------------


def _rref(rows: list[list[GaussianRational]]):
    """In-place reduced row echelon form; returns the pivot column list.

    Pivot selection: scan each column top to bottom and take the first
    nonzero entry.  No other pivoting strategy is ever used.
    """
    if not rows:
        return []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for k in range(r, n_rows):
            if rows[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = GR.one() / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for k in range(n_rows):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(m: ExactMatrix) -> int:
    rows = [list(row) for row in m.entries]
    return len(_rref(rows))


@dataclass(frozen=True)
class LinearSolution:
    """A particular solution together with a basis of the homogeneous kernel."""

    particular: ExactMatrix
    kernel_basis: tuple[ExactMatrix, ...]

    def is_unique(self) -> bool:
        return not self.kernel_basis


def solve_linear(m: ExactMatrix, rhs: ExactMatrix) -> LinearSolution | None:
    """Solve m*x = rhs exactly; None when the system is inconsistent.

    rhs may have several columns; the kernel basis consists of single
    columns of the homogeneous system regardless.
    """
    if m.rows != rhs.rows:
        raise ValueError("rhs row count does not match the matrix")
    width = m.cols
    rows = [list(mr) + list(rr) for mr, rr in zip(m.entries, rhs.entries)]
    pivots = _rref(rows)
    main_pivots = [c for c in pivots if c < width]
    if len(main_pivots) != len(pivots):
        return None  # a pivot in the augmented block: inconsistent
    pivot_row_of = {c: r for r, c in enumerate(main_pivots)}
    particular_cols = []
    for k in range(rhs.cols):
        col = [GR.zero()] * width
        for c, r in pivot_row_of.items():
            col[c] = rows[r][width + k]
        particular_cols.append(col)
    particular = ExactMatrix(list(zip(*particular_cols)))
    free_cols = [c for c in range(width) if c not in pivot_row_of]
    basis = []
    for fc in free_cols:
        col = [GR.zero()] * width
        col[fc] = GR.one()
        for c, r in pivot_row_of.items():
            col[c] = -rows[r][fc]
        basis.append(ExactMatrix.column(col))
    return LinearSolution(particular, tuple(basis))


def nullspace(m: ExactMatrix) -> tuple[ExactMatrix, ...]:
    sol = solve_linear(m, ExactMatrix.zeros(m.rows, 1))
    assert sol is not None
    return sol.kernel_basis


def inverse(m: ExactMatrix) -> ExactMatrix | None:
    """Exact inverse, or None as the not-invertible marker."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    sol = solve_linear(m, ExactMatrix.identity(m.rows))
    if sol is None or sol.kernel_basis:
        return None
    return sol.particular


def determinant(m: ExactMatrix) -> GaussianRational:
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    rows = [list(row) for row in m.entries]
    n = m.rows
    det = GR.one()
    for c in range(n):
        pivot_row = None
        for k in range(c, n):
            if rows[k][c]:
                pivot_row = k
                break
        if pivot_row is None:
            return GR.zero()
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = GR.one() / rows[c][c]
        for k in range(c + 1, n):
            if rows[k][c]:
                f = rows[k][c] * inv
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[c])]
    return det


# -- polynomial attachments ---------------------------------------------------


def apply_poly(p: ExactPolynomial, a: ExactMatrix) -> ExactMatrix:
    """p(a) by Horner's scheme."""
    if not a.is_square():
        raise ValueError("polynomial of a non-square matrix")
    acc = ExactMatrix.zeros(a.rows)
    eye = ExactMatrix.identity(a.rows)
    for c in reversed(p.coeffs):
        acc = acc * a + eye * c
    return acc


def _matvec(a: ExactMatrix, v: list[GaussianRational]) -> list[GaussianRational]:
    out = []
    for row in a.entries:
        acc = GR.zero()
        for m, c in zip(row, v):
            if m and c:
                acc = acc + m * c
        out.append(acc)
    return out


def _vector_minpoly(a: ExactMatrix, v: list[GaussianRational]) -> ExactPolynomial:
    """Monic p of least degree with p(a)v = 0, from the first dependence
    in the Krylov sequence v, av, a^2 v, ...

    The working vector carries the combination of Krylov vectors it
    stands for; reductions update both, so when the vector dies the
    combination is exactly the dependence, monic by construction.
    """
    n = a.rows
    # pivots: lead column -> (eliminated vector, its Krylov combination)
    pivots: dict[int, tuple[list[GaussianRational], list[GaussianRational]]] = {}
    w = list(v)
    comb = [GR.one()]
    for _ in range(n + 1):
        for j, (pivot_vec, pivot_comb) in pivots.items():
            factor = w[j]
            if factor:
                w = [x - factor * y for x, y in zip(w, pivot_vec)]
                for i, c in enumerate(pivot_comb):
                    comb[i] = comb[i] - factor * c
        lead = next((j for j, x in enumerate(w) if x), None)
        if lead is None:
            return ExactPolynomial(comb)
        inv = w[lead].inverse()
        pivots[lead] = ([x * inv for x in w], [c * inv for c in comb])
        w = _matvec(a, w)
        comb = [GR.zero()] + comb
    raise AssertionError("no Krylov dependence up to the ambient dimension")


def minimal_polynomial(a: ExactMatrix) -> ExactPolynomial:
    """Monic minimal polynomial.

    Accumulated as a product of vector-relative minimal polynomials: with
    p the product so far and w = p(a)e_j a nonzero residual, the minimal
    q with q(a)w = 0 satisfies p*q = lcm(p, minpoly of e_j), so the final
    product annihilates every basis vector and divides the true minimal
    polynomial's multiples minimally, hence equals it.
    """
    if not a.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = a.rows
    p = ExactPolynomial([GR.one()])
    for j in range(n):
        # w = p(a) e_j, by Horner on vectors.
        w = [GR.zero()] * n
        for c in reversed(p.coeffs):
            w = _matvec(a, w)
            if c:
                w[j] = w[j] + c
        if any(w):
            p = p * _vector_minpoly(a, w)
    return p


def char_poly(a: ExactMatrix) -> ExactPolynomial:
    """Characteristic polynomial det(xI - a) by the Faddeev-LeVerrier scheme."""
    if not a.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = a.rows
    coeffs = [GR.zero()] * (n + 1)
    coeffs[n] = GR.one()
    m = ExactMatrix.zeros(n)
    eye = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        m = a * m + eye * coeffs[n - k + 1]
        coeffs[n - k] = -(a * m).trace() / k
    return ExactPolynomial(coeffs)
