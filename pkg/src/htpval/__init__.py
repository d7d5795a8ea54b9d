"""Exact machinery for diophantine models over function fields of valued fields."""

__version__ = "0.1.0"
