"""Exact-arithmetic engine for cotilting-type predicates over
finite-dimensional quiver algebras."""

__version__ = "0.1.0"
