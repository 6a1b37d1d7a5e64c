"""Exact computations with finite simplicial sets and their 1-reductions."""

__version__ = "0.1.0"
