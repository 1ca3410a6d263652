"""Component counts of twisted torus links T(p, q; r, s) and three-block T-links."""

from .core import (
    InvalidParameters,
    ParameterOverflow,
    TLink3Params,
    TTLParams,
    gcd_nn,
    residue,
    validate,
)
from .oracle import cycle_count, tlink_permutation, ttl_permutation
from .tlink import component_count3, standard_form
from .ttl import component_count, trace

__all__ = [
    "InvalidParameters",
    "ParameterOverflow",
    "TLink3Params",
    "TTLParams",
    "component_count",
    "component_count3",
    "cycle_count",
    "gcd_nn",
    "residue",
    "standard_form",
    "tlink_permutation",
    "trace",
    "ttl_permutation",
    "validate",
]
