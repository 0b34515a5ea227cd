"""Exact chromatic and list-coloring polynomials, NBC structures and gap-bound verification."""

__version__ = "0.1.0"
