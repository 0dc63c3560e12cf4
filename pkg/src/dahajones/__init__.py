"""Exact computations with rank-one double affine Hecke algebras."""

__version__ = "0.1.0"
