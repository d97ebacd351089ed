"""Closed-form solutions of the n=5 Lane–Emden equation and their numerical checks."""

__version__ = "0.1.0"
