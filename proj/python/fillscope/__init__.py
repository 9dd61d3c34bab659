"""Exact chain filling volumes, isoperimetric profiles and Dehn functions."""

from ._core import (
    ChainComplex,
    FillscopeError,
    Presentation,
    SimplicialComplex,
    builtin_names,
    builtin_text,
    chain_profile,
    dehn_function,
    fill_volume,
    filling_volume_word,
    load,
    parse,
    quasi_equivalent_fit,
    verify_quasi_bound,
)

__all__ = [
    "ChainComplex",
    "FillscopeError",
    "Presentation",
    "SimplicialComplex",
    "builtin_names",
    "builtin_text",
    "chain_profile",
    "dehn_function",
    "fill_volume",
    "filling_volume_word",
    "load",
    "parse",
    "quasi_equivalent_fit",
    "verify_quasi_bound",
]
