"""Subword complexes, multitriangulations and fan realizations of multiassociahedra."""

from ._core import (
    __version__,
    certify,
    contains_longest,
    demazure_product,
    diagonal_to_position,
    facets,
    fan_stats,
    fattening_trace,
    k_triangulations,
    multiassociahedron_word,
    parse_word,
    rays,
    reproduce,
)

__all__ = [
    "__version__",
    "certify",
    "contains_longest",
    "demazure_product",
    "diagonal_to_position",
    "facets",
    "fan_stats",
    "fattening_trace",
    "k_triangulations",
    "multiassociahedron_word",
    "parse_word",
    "rays",
    "reproduce",
]
