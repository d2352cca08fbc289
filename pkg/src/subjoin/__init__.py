"""Spectra of subdivision-vertex and subdivision-edge joins of graphs."""

__version__ = "0.1.0"
