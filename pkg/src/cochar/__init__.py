"""Multiplicities in the mixed trace cocharacter of two generic 3x3 matrices."""

__version__ = "0.1.0"
