"""zetakit: locate, cross-validate and audit zeros of zeta-family functions."""

__version__ = "0.1.0"
