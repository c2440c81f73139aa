"""Finite-dimensional matrix algebras, their ideals and homomorphisms.

An algebra is given concretely: a linearly independent tuple of ambient
matrices whose span contains the identity and is closed under products.
Elements carry coordinates with respect to that basis; all membership and
mapping questions reduce to exact linear algebra over the Gaussian
rationals.

Homomorphisms are coordinate maps verified to be unital and multiplicative
at construction.  The lifting machinery (nilpotent kernels, cubic
idempotent refinement) lives here as well since it is pure algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import (
    ClosureCapError,
    InternalInconsistencyError,
    LiftingUnavailableError,
    NotAHomomorphismError,
    NotInAlgebraError,
)
from .exact.gaussian import GR, GaussianRational
from .exact.matrix import ExactMatrix, _rref, nullspace, rank, solve_linear

Scalarish = Union[int, Fraction, GaussianRational]


class _VecSolver:
    """Precomputed exact solver for a fixed full-column-rank system.

    Stores the row transform T with T*M in reduced echelon form, so each
    coordinate query is a single matrix-vector product plus a zero check.
    """

    def __init__(self, columns: Sequence[tuple[GaussianRational, ...]]):
        self.width = len(columns)
        self.length = len(columns[0]) if columns else 0
        rows = []
        for r in range(self.length):
            row = [columns[c][r] for c in range(self.width)]
            row.extend(
                GR.one() if k == r else GR.zero() for k in range(self.length)
            )
            rows.append(row)
        pivots = _rref(rows)
        main_pivots = [p for p in pivots if p < self.width]
        if len(main_pivots) != self.width:
            raise ValueError("columns are linearly dependent")
        self._transform = [row[self.width :] for row in rows]

    def solve(self, vec: Sequence[GaussianRational]) -> tuple[GaussianRational, ...] | None:
        out = []
        for r in range(self.length):
            acc = GR.zero()
            for t, v in zip(self._transform[r], vec):
                if t and v:
                    acc = acc + t * v
            out.append(acc)
        if any(out[self.width :]):
            return None
        return tuple(out[: self.width])


class _SpanTester:
    """Membership test for the span of a set of coordinate vectors."""

    def __init__(self, vectors: Iterable[tuple[GaussianRational, ...]]):
        self.rows: list[list[GaussianRational]] = []
        self.pivot_cols: list[int] = []
        for v in vectors:
            self.add(v)

    def _reduce(self, vec: Sequence[GaussianRational]) -> list[GaussianRational]:
        work = list(vec)
        for row, pc in zip(self.rows, self.pivot_cols):
            if work[pc]:
                f = work[pc]
                work = [a - f * b for a, b in zip(work, row)]
        return work

    def contains(self, vec: Sequence[GaussianRational]) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence[GaussianRational]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        work = self._reduce(vec)
        pivot = next((i for i, a in enumerate(work) if a), None)
        if pivot is None:
            return False
        inv = GR.one() / work[pivot]
        work = [a * inv for a in work]
        for i, (row, pc) in enumerate(zip(self.rows, self.pivot_cols)):
            if row[pivot]:
                f = row[pivot]
                self.rows[i] = [a - f * b for a, b in zip(row, work)]
        self.rows.append(work)
        self.pivot_cols.append(pivot)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


class FiniteAlgebra:
    """A unital subalgebra of n-by-n matrices with a fixed ordered basis."""

    def __init__(self, basis: Sequence[ExactMatrix], name: str | None = None):
        basis = tuple(basis)
        if not basis:
            raise ValueError("an algebra needs at least one basis matrix")
        n = basis[0].rows
        if any(not b.is_square() or b.rows != n for b in basis):
            raise ValueError("basis matrices must be square and of equal size")
        self.ambient_dim = n
        self.basis = basis
        self.name = name
        columns = [b.vectorize() for b in basis]
        try:
            self._solver = _VecSolver(columns)
        except ValueError:
            raise ValueError("algebra basis is linearly dependent") from None
        id_coords = self._solver.solve(ExactMatrix.identity(n).vectorize())
        if id_coords is None:
            raise ValueError("identity matrix does not lie in the algebra span")
        self._id_coords = id_coords
        # Closure check doubles as the structure-constant table.
        table = []
        for bi in basis:
            row = []
            for bj in basis:
                coords = self._solver.solve((bi * bj).vectorize())
                if coords is None:
                    raise ValueError("basis is not closed under products")
                row.append(coords)
            table.append(tuple(row))
        self.structure_constants = tuple(table)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- element construction ------------------------------------------------

    def element(self, coords: Sequence[Scalarish]) -> "Element":
        if len(coords) != self.dim:
            raise ValueError(
                f"expected {self.dim} coordinates, got {len(coords)}"
            )
        return Element(self, tuple(GR.coerce(c) for c in coords))

    def from_matrix(self, m: ExactMatrix) -> "Element":
        if m.rows != self.ambient_dim or m.cols != self.ambient_dim:
            raise NotInAlgebraError(
                f"matrix is {m.rows}x{m.cols}, ambient is {self.ambient_dim}"
            )
        coords = self._solver.solve(m.vectorize())
        if coords is None:
            raise NotInAlgebraError("matrix lies outside the algebra span")
        return Element(self, coords)

    def contains_matrix(self, m: ExactMatrix) -> bool:
        if m.rows != self.ambient_dim or m.cols != self.ambient_dim:
            return False
        return self._solver.solve(m.vectorize()) is not None

    def zero(self) -> "Element":
        return Element(self, tuple(GR.zero() for _ in range(self.dim)))

    def one(self) -> "Element":
        return Element(self, self._id_coords)

    def basis_element(self, index: int) -> "Element":
        coords = [GR.zero()] * self.dim
        coords[index] = GR.one()
        return Element(self, tuple(coords))

    def __repr__(self) -> str:
        label = self.name or "FiniteAlgebra"
        return f"<{label}: dim {self.dim} in M_{self.ambient_dim}>"


class Element:
    """An algebra element: coordinates plus a lazily realized matrix."""

    __slots__ = ("algebra", "coords", "_matrix")

    def __init__(self, algebra: FiniteAlgebra, coords: tuple[GaussianRational, ...]):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_matrix", None)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def matrix(self) -> ExactMatrix:
        m = self._matrix
        if m is None:
            n = self.algebra.ambient_dim
            m = ExactMatrix.zeros(n)
            for c, b in zip(self.coords, self.algebra.basis):
                if c:
                    m = m + b * c
            object.__setattr__(self, "_matrix", m)
        return m

    def _require_same_algebra(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._require_same_algebra(other)
        return Element(
            self.algebra,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )

    def __sub__(self, other: "Element") -> "Element":
        self._require_same_algebra(other)
        return Element(
            self.algebra,
            tuple(a - b for a, b in zip(self.coords, other.coords)),
        )

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            s = GR.coerce(other)
            return Element(self.algebra, tuple(a * s for a in self.coords))
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_algebra(other)
        product = self.matrix * other.matrix
        try:
            return self.algebra.from_matrix(product)
        except NotInAlgebraError:  # pragma: no cover - closure is verified
            raise InternalInconsistencyError(
                "product left the algebra despite verified closure"
            ) from None

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if exponent < 0:
            raise ValueError("negative element power; invert explicitly instead")
        result = self.algebra.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def commutes_with(self, other: "Element") -> bool:
        return (self * other - other * self).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coords))

    def __repr__(self) -> str:
        return f"Element({', '.join(str(c) for c in self.coords)})"


def invert_in_algebra(a: Element) -> Element | None:
    """Inverse inside the algebra, or None as the not-invertible marker.

    If the ambient matrix is invertible, the inverse is automatically a
    polynomial in the element (constant term of the minimal polynomial is
    nonzero), hence lies in the algebra; coordinatization cannot fail.
    """
    from .exact.matrix import inverse as matrix_inverse

    inv = matrix_inverse(a.matrix)
    if inv is None:
        return None
    try:
        return a.algebra.from_matrix(inv)
    except NotInAlgebraError:  # pragma: no cover - see docstring
        raise InternalInconsistencyError(
            "matrix inverse escaped the algebra; unital closure is broken"
        ) from None


class Ideal:
    """A two-sided ideal, given by a linearly independent basis of elements."""

    def __init__(self, algebra: FiniteAlgebra, basis: Sequence[Element]):
        self.algebra = algebra
        self.basis = tuple(basis)
        for e in self.basis:
            if e.algebra is not algebra:
                raise ValueError("ideal basis element from a different algebra")
        self._span = _SpanTester([e.coords for e in self.basis])
        if self._span.dim != len(self.basis):
            raise ValueError("ideal basis is linearly dependent")
        for b_idx in range(algebra.dim):
            b = algebra.basis_element(b_idx)
            for e in self.basis:
                if not self._span.contains((b * e).coords) or not self._span.contains(
                    (e * b).coords
                ):
                    raise ValueError("basis does not span a two-sided ideal")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: Element) -> bool:
        if a.algebra is not self.algebra:
            return False
        return self._span.contains(a.coords)

    @cached_property
    def nilpotency_index(self) -> int | None:
        """Least m with (ideal)^m = 0, or None if the ideal is not nilpotent.

        Ideal powers are nested (K^{m+1} is contained in K^m), so their
        dimensions strictly decrease until they stabilize; a stable nonzero
        power certifies non-nilpotence.
        """
        current: list[Element] = list(self.basis)
        m = 1
        while current:
            nxt_span = _SpanTester([])
            nxt: list[Element] = []
            for x in current:
                for e in self.basis:
                    prod = x * e
                    if nxt_span.add(prod.coords):
                        nxt.append(prod)
            if len(nxt) == len(current):
                return None
            current = nxt
            m += 1
        return m

    def is_nilpotent(self) -> bool:
        return self.nilpotency_index is not None


@dataclass(frozen=True)
class QuotientData:
    algebra: FiniteAlgebra
    projection: "Homomorphism"


class Homomorphism:
    """A unital algebra homomorphism given by its matrix on coordinates."""

    def __init__(
        self,
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        matrix: ExactMatrix,
        name: str | None = None,
    ):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise ValueError(
                f"coordinate matrix must be {target.dim}x{source.dim}, "
                f"got {matrix.rows}x{matrix.cols}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name
        self._verify()

    def _verify(self) -> None:
        one_image = self.apply(self.source.one())
        if one_image != self.target.one():
            raise NotAHomomorphismError("map does not send 1 to 1")
        images = [
            self.apply(self.source.basis_element(i))
            for i in range(self.source.dim)
        ]
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                lhs = images[i] * images[j]
                rhs_coords = self.source.structure_constants[i][j]
                rhs = self.apply(Element(self.source, rhs_coords))
                if lhs != rhs:
                    raise NotAHomomorphismError(
                        f"multiplicativity fails on basis pair ({i}, {j})"
                    )

    def apply(self, a: Element) -> Element:
        if a.algebra is not self.source:
            raise ValueError("element does not belong to the source algebra")
        out = []
        for r in range(self.target.dim):
            acc = GR.zero()
            for m, c in zip(self.matrix.entries[r], a.coords):
                if m and c:
                    acc = acc + m * c
            out.append(acc)
        return Element(self.target, tuple(out))

    def __call__(self, a: Element) -> Element:
        return self.apply(a)

    @cached_property
    def kernel(self) -> Ideal:
        basis = [
            Element(
                self.source,
                tuple(col.entries[i][0] for i in range(self.source.dim)),
            )
            for col in nullspace(self.matrix)
        ]
        return Ideal(self.source, basis)

    @cached_property
    def is_surjective(self) -> bool:
        return rank(self.matrix) == self.target.dim

    def kernel_is_nilpotent(self) -> bool:
        return self.kernel.is_nilpotent()

    @property
    def has_lifting(self) -> bool:
        """Constructive lifting oracle: surjective with nilpotent kernel."""
        return self.is_surjective and self.kernel_is_nilpotent()

    def preimage(self, b: Element) -> Element | None:
        """A deterministic particular preimage, or None if b is outside the range."""
        if b.algebra is not self.target:
            raise ValueError("element does not belong to the target algebra")
        sol = solve_linear(self.matrix, ExactMatrix.column(b.coords))
        if sol is None:
            return None
        coords = tuple(sol.particular.entries[i][0] for i in range(self.source.dim))
        return Element(self.source, coords)

    def __repr__(self) -> str:
        label = self.name or "Homomorphism"
        return f"<{label}: {self.source!r} -> {self.target!r}>"


def build_algebra(
    generators: Sequence[ExactMatrix],
    cap: int | None = None,
    name: str | None = None,
) -> FiniteAlgebra:
    """Unital algebra generated by the given matrices, closed under products.

    The closure loop is deterministic: candidates are processed in the
    order they were discovered.  `cap` bounds the dimension; exceeding it
    raises ClosureCapError (the ambient bound n^2 always applies).
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].rows
    if any(not g.is_square() or g.rows != n for g in generators):
        raise ValueError("generators must be square matrices of equal size")
    hard_cap = n * n if cap is None else min(cap, n * n)
    span = _SpanTester([])
    basis: list[ExactMatrix] = []

    def admit(m: ExactMatrix) -> bool:
        if span.add(m.vectorize()):
            basis.append(m)
            if len(basis) > hard_cap:
                raise ClosureCapError(
                    f"closure exceeded the dimension cap {hard_cap}"
                )
            return True
        return False

    admit(ExactMatrix.identity(n))
    for g in generators:
        admit(g)
    frontier = list(range(len(basis)))
    while frontier:
        new_frontier = []
        snapshot = len(basis)
        for i in range(snapshot):
            for j in frontier:
                for prod in (basis[i] * basis[j], basis[j] * basis[i]):
                    if admit(prod):
                        new_frontier.append(len(basis) - 1)
        frontier = new_frontier
    return FiniteAlgebra(tuple(basis), name=name)


def quotient(hom: Homomorphism) -> QuotientData:
    """The quotient source/kernel(hom), realized by its left regular
    representation, together with the canonical projection."""
    src = hom.source
    kernel = hom.kernel
    k = kernel.dim
    d = src.dim
    kernel_cols = [e.coords for e in kernel.basis]
    # Choose complement coordinates: positions that are not pivots of the
    # kernel's row space, so unit vectors there complete a basis.
    kr = [list(v) for v in kernel_cols]
    pivots = _rref(kr) if kr else []
    free = [j for j in range(d) if j not in pivots]
    m = len(free)
    assert m == d - k
    columns = [tuple(v) for v in kernel_cols]
    for f in free:
        columns.append(tuple(GR.one() if i == f else GR.zero() for i in range(d)))
    solver = _VecSolver(columns)

    def project(coords: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
        full = solver.solve(tuple(coords))
        assert full is not None
        return full[k:]

    def lift(qcoords: Sequence[GaussianRational]) -> Element:
        coords = [GR.zero()] * d
        for f, c in zip(free, qcoords):
            coords[f] = c
        return Element(src, tuple(coords))

    unit = [tuple(GR.one() if i == j else GR.zero() for i in range(m)) for j in range(m)]
    reg_basis = []
    for j in range(m):
        ej = lift(unit[j])
        cols = [project((ej * lift(unit[t])).coords) for t in range(m)]
        reg_basis.append(ExactMatrix(list(zip(*cols))))
    qalg = FiniteAlgebra(
        tuple(reg_basis),
        name=f"{src.name or 'A'}/ker",
    )
    proj_cols = [project(src.basis_element(j).coords) for j in range(d)]
    proj_matrix = ExactMatrix(list(zip(*proj_cols)))
    projection = Homomorphism(src, qalg, proj_matrix, name="projection")
    return QuotientData(qalg, projection)


@dataclass(frozen=True)
class LiftResult:
    idempotent: Element
    iterations: int


def lift_idempotent(
    hom: Homomorphism,
    q: Element,
    initial: Element | None = None,
) -> LiftResult:
    """Lift an idempotent q through hom to an exact idempotent preimage.

    Starting from any preimage x of q, the cubic refinement
    p <- 3p^2 - 2p^3 keeps T(p) = q and squares the idempotency defect,
    which lives in the kernel; a nilpotent kernel therefore forces exact
    convergence within ceil(log2(nilpotency index)) steps.
    """
    if (q * q) != q:
        raise ValueError("q is not idempotent")
    if not hom.kernel_is_nilpotent():
        raise LiftingUnavailableError(
            "kernel is not nilpotent: no lifting oracle for this homomorphism"
        )
    if initial is not None:
        if hom.apply(initial) != q:
            raise ValueError("initial point is not a preimage of q")
        p = initial
    else:
        p = hom.preimage(q)
        if p is None:
            raise LiftingUnavailableError("q is not in the range of the homomorphism")
    steps = 0
    limit = max(2, hom.source.ambient_dim + 2)
    while (p * p) != p:
        if steps >= limit:
            raise InternalInconsistencyError(
                "idempotent refinement failed to terminate over a nilpotent kernel"
            )
        p2 = p * p
        p = p2 * 3 - (p2 * p) * 2
        steps += 1
    if hom.apply(p) != q:
        raise InternalInconsistencyError("lifted idempotent no longer maps to q")
    return LiftResult(p, steps)
