"""Symbolic spectral sets and the diagonal-operator model."""

from .diagonal import (
    Atom,
    Constant,
    DiagClassification,
    DiagFamily,
    DiagTail,
    DiagonalElement,
    Finite,
    diag,
    diag_arith,
    diag_classify,
    diag_constant,
    diag_family,
    diag_tail,
    diag_zero,
)
from .rules import (
    GeneratorKind,
    Geometric,
    Harmonic,
    TailRule,
    geometric_rule,
    harmonic_rule,
    scalar,
)
from .sets import (
    ALL_ISO,
    Circle,
    Disk,
    FinitePoints,
    IsoView,
    MEMBERSHIP_HORIZON,
    Segment,
    SpectralElement,
    SpectralSet,
    Tail,
    TailFamily,
    acc,
    bivariate,
    circle,
    disk,
    empty_set,
    family,
    finite,
    iso,
    poly_map,
    segment,
    sigma_d,
    sigma_kd,
    tail,
)

__all__ = [
    "ALL_ISO",
    "Atom",
    "Circle",
    "Constant",
    "DiagClassification",
    "DiagFamily",
    "DiagTail",
    "DiagonalElement",
    "Disk",
    "Finite",
    "FinitePoints",
    "GeneratorKind",
    "Geometric",
    "Harmonic",
    "IsoView",
    "MEMBERSHIP_HORIZON",
    "Segment",
    "SpectralElement",
    "SpectralSet",
    "Tail",
    "TailFamily",
    "TailRule",
    "acc",
    "bivariate",
    "circle",
    "diag",
    "diag_arith",
    "diag_classify",
    "diag_constant",
    "diag_family",
    "diag_tail",
    "diag_zero",
    "disk",
    "empty_set",
    "family",
    "finite",
    "geometric_rule",
    "harmonic_rule",
    "iso",
    "poly_map",
    "scalar",
    "segment",
    "sigma_d",
    "sigma_kd",
    "tail",
]
