"""Harish-Chandra homomorphism for symmetric superpairs."""

from ._hcsuper import (
    Error,
    ParseError,
    UnknownEntry,
    catalog,
    default_degree,
    gamma,
    invariants,
    membership,
    planted_jacobi_defect,
    roots,
    validate_algebra,
    verify,
)

__all__ = [
    "Error",
    "ParseError",
    "UnknownEntry",
    "catalog",
    "default_degree",
    "gamma",
    "invariants",
    "membership",
    "planted_jacobi_defect",
    "roots",
    "validate_algebra",
    "verify",
]
