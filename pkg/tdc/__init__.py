"""Exact solver and verification workbench for the total dominator chromatic number."""

__version__ = "0.1.0"
