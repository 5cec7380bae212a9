"""Exact verification engine for the PV connection moduli computations."""

__version__ = "0.1.0"
