"""Exact enumeration of restricted column-strict plane partitions,
triangular shifted plane partitions and TSSCPPs, with their Pfaffian and
constant-term generating functions."""

from .exactmath import Poly, poly, var

__version__ = "0.1.0"

__all__ = ["Poly", "poly", "var", "__version__"]
