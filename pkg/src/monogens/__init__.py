"""Minimal generators of products, powers and intersections of monomial ideals."""
from .core import (
    MonomialIdeal,
    contains,
    ideal,
    ideal_sum,
    intersect,
    maximal_ideal_power,
    minimalize,
    mu,
    power,
    powers,
    product,
    pure_power_ideal,
)
from .errors import (
    DegenerateIdealError,
    HypothesisError,
    InputError,
    MonogensError,
    ParseError,
    ResourceCeilingError,
)

__version__ = "0.1.0"

__all__ = [
    "MonomialIdeal", "contains", "ideal", "ideal_sum", "intersect", "maximal_ideal_power",
    "minimalize", "mu", "power", "powers", "product", "pure_power_ideal",
    "DegenerateIdealError", "HypothesisError", "InputError", "MonogensError", "ParseError",
    "ResourceCeilingError",
]
