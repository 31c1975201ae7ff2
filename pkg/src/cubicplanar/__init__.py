"""Exact and asymptotic enumeration of labeled cubic planar graph families."""

__version__ = "0.1.0"
