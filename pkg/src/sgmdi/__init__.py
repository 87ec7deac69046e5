"""Sparse-grid quadrature on [-1, 1]^d with multilevel dimension iteration."""

__version__ = "0.1.0"
