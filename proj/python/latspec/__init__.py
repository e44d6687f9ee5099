"""Finite ideal lattices, their prime spectra and support data."""

from ._latspec import Error, IdealLattice, ParseError, ValidationError, run

__all__ = ["Error", "IdealLattice", "ParseError", "ValidationError", "run"]
