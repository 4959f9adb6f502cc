"""Exact verification toolkit for group actions on degree 2 and 3 Del Pezzo surfaces."""

__version__ = "0.1.0"
