"""Canonical algebra/homomorphism families.

The workhorse is the upper triangular algebra U_n with the diagonal-part
homomorphism onto the diagonal algebra D_n: surjective, nilpotent kernel
(the strictly upper triangle), so every lifting-based operation applies.
Block upper triangular variants give the same picture with a
noncommutative quotient.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .algebra import FiniteAlgebra, Homomorphism
from .exact.matrix import ExactMatrix


def _hom_from_entry_map(
    source: FiniteAlgebra,
    target: FiniteAlgebra,
    entry_map: Callable[[ExactMatrix], ExactMatrix],
    name: str | None = None,
) -> Homomorphism:
    cols = [target.from_matrix(entry_map(b)).coords for b in source.basis]
    return Homomorphism(source, target, ExactMatrix(list(zip(*cols))), name=name)


def upper_triangular_algebra(n: int) -> FiniteAlgebra:
    """All upper triangular n-by-n matrices; basis E_ij for i <= j."""
    basis = [
        ExactMatrix.unit(n, i, j) for i in range(n) for j in range(i, n)
    ]
    return FiniteAlgebra(basis, name=f"U{n}")


def diagonal_algebra(n: int) -> FiniteAlgebra:
    return FiniteAlgebra(
        [ExactMatrix.unit(n, i, i) for i in range(n)], name=f"D{n}"
    )


def diagonal_part_hom(n: int) -> Homomorphism:
    """U_n -> D_n, forgetting the strictly upper triangle."""
    source = upper_triangular_algebra(n)
    target = diagonal_algebra(n)

    def diag_part(m: ExactMatrix) -> ExactMatrix:
        return ExactMatrix.diagonal([m[i, i] for i in range(n)])

    return _hom_from_entry_map(source, target, diag_part, name=f"diag{n}")


def _block_of(sizes: Sequence[int]) -> list[int]:
    owner = []
    for b, s in enumerate(sizes):
        owner.extend([b] * s)
    return owner


def block_upper_algebra(sizes: Sequence[int]) -> FiniteAlgebra:
    """Block upper triangular matrices for the given diagonal block sizes."""
    n = sum(sizes)
    owner = _block_of(sizes)
    basis = [
        ExactMatrix.unit(n, i, j)
        for i in range(n)
        for j in range(n)
        if owner[i] <= owner[j]
    ]
    label = "x".join(str(s) for s in sizes)
    return FiniteAlgebra(basis, name=f"B[{label}]")


def block_diagonal_algebra(sizes: Sequence[int]) -> FiniteAlgebra:
    n = sum(sizes)
    owner = _block_of(sizes)
    basis = [
        ExactMatrix.unit(n, i, j)
        for i in range(n)
        for j in range(n)
        if owner[i] == owner[j]
    ]
    label = "x".join(str(s) for s in sizes)
    return FiniteAlgebra(basis, name=f"D[{label}]")


def block_diagonal_part_hom(sizes: Sequence[int]) -> Homomorphism:
    """Block upper triangular -> block diagonal, forgetting off-block entries.

    The quotient is noncommutative as soon as some block has size >= 2.
    """
    source = block_upper_algebra(sizes)
    target = block_diagonal_algebra(sizes)
    n = sum(sizes)
    owner = _block_of(sizes)

    def block_diag_part(m: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(
            [
                [m[i, j] if owner[i] == owner[j] else 0 for j in range(n)]
                for i in range(n)
            ]
        )

    label = "x".join(str(s) for s in sizes)
    return _hom_from_entry_map(source, target, block_diag_part, name=f"blockdiag[{label}]")


def full_matrix_algebra(n: int) -> FiniteAlgebra:
    basis = [ExactMatrix.unit(n, i, j) for i in range(n) for j in range(n)]
    return FiniteAlgebra(basis, name=f"M{n}")


def identity_hom(algebra: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(
        algebra,
        algebra,
        ExactMatrix.identity(algebra.dim),
        name="id",
    )
