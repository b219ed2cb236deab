"""Exact Hochschild cohomology for finite-dimensional monomial path algebras."""

__version__ = "0.1.0"
