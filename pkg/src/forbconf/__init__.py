"""Forbidden configurations in (0,1)-matrices: containment, constructions,
exact extremal values and growth classification."""

from __future__ import annotations

from .catalog import make, make_constant_construction, parse_name
from .containment import Embedding, avoids_family, config_equal, contains, has_config
from .errors import (
    ContradictionError,
    DomainError,
    ForbConfError,
    HypothesisError,
    ParseError,
    PreconditionError,
    ShapeError,
    StabilityError,
)
from .graphs import SimpleGraph, ex_exact
from .growth import GrowthClass, classify_constant, classify_ones3_family, family_growth, pair_growth
from .matrix import BinMatrix, Family, complement, is_simple
from .products import ProductSpec, build_product, product, x_value
from .search import SearchResult, forb_exact

__all__ = [
    "BinMatrix", "Family", "Embedding", "SimpleGraph", "ProductSpec", "SearchResult", "GrowthClass",
    "ForbConfError", "ShapeError", "DomainError", "PreconditionError", "HypothesisError",
    "ContradictionError", "StabilityError", "ParseError",
    "make", "make_constant_construction", "parse_name", "complement", "is_simple",
    "has_config", "contains", "avoids_family", "config_equal",
    "product", "build_product", "x_value", "forb_exact", "ex_exact",
    "classify_constant", "classify_ones3_family", "pair_growth", "family_growth",
]
