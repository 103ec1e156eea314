"""Certified path and cycle count bounds for graphs and multigraphs."""

__version__ = "0.1.0"
