"""Finite-model workbench for four-valued algebraic structures."""

__version__ = "0.1.0"
