"""Exact stratification combinatorics and numerical elliptic algebras."""

__version__ = "0.1.0"
