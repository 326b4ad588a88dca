"""Exact enumeration of level-1 and level-3 Hodge representations of real Lie algebras."""

from ._core import (
    ConfigError,
    ConsistencyError,
    DomainError,
    InvalidTypeError,
    ParseError,
    ResourceError,
    ShapeError,
    analyze,
    analyze_product,
    canonicalize,
    classify,
    mu_plus_mu_star,
    verify_paper,
    weight_system,
    weyl_dim,
)

__all__ = [
    "ConfigError",
    "ConsistencyError",
    "DomainError",
    "InvalidTypeError",
    "ParseError",
    "ResourceError",
    "ShapeError",
    "analyze",
    "analyze_product",
    "canonicalize",
    "classify",
    "mu_plus_mu_star",
    "verify_paper",
    "weight_system",
    "weyl_dim",
]
