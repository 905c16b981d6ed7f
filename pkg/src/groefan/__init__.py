"""Restricted Groebner fans over exact rationals: enumeration, regularity, certificates."""

__version__ = '0.1.0'
