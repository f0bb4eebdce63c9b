"""Symmetric fourth Painleve equation: Backlund transformations, tau-functions
and the Okamoto / generalized Hermite polynomial families in exact arithmetic."""

__version__ = "0.1.0"
