"""Computable geometry of the symmetrized bidisc and boundary Schwarz checks."""
__version__ = "0.1.0"
