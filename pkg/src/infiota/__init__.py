"""Proof kernel, translations and finite-model oracle for intuitionist negative
free logic with definite descriptions."""

__version__ = "0.1.0"
