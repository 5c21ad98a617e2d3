"""Exact verification of Picard-rank identities and rank certificates."""

__version__ = "0.1.0"
