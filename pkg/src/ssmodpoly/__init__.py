"""Evaluation of modular polynomials through supersingular curves."""

__version__ = "0.1.0"
