"""Exact arithmetic for Hecke groups and their odd vanishing cycles in Z[ζ]."""

from .field import Context, CycInt, QLambda, ZLambda, make_context
from .group import (
    CanonicalTuple,
    Mat2,
    Word,
    canonical_tuple,
    eval_word,
    factor,
    generators,
    in_hecke_group,
    is_odd_vanishing_cycle,
    pseudo_euclid,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalTuple",
    "Context",
    "CycInt",
    "Mat2",
    "QLambda",
    "Word",
    "ZLambda",
    "canonical_tuple",
    "eval_word",
    "factor",
    "generators",
    "in_hecke_group",
    "is_odd_vanishing_cycle",
    "make_context",
    "pseudo_euclid",
]
