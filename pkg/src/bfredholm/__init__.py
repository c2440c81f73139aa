"""Exact-arithmetic workbench for B-Fredholm, B-Weyl and B-Browder elements
relative to an algebra homomorphism, on two backends: finite matrix algebras
over the Gaussian rationals and symbolic spectral-set models."""

__version__ = "0.1.0"
