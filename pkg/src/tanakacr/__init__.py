"""Exact Tanaka prolongation, CR flags and the accidental CR catalog."""

__version__ = "0.1.0"
