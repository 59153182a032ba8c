"""Exact state-sum evaluation of gl(N|M) MOY graphs and link invariants."""

from .qlaurent import LaurentPoly, qint, qbinom, bar, cyclo_reduce, parse_poly
from .moy_core import SlicedDiagram, Piece, Kind, parse_diagram, expand_braid, validate

__all__ = [
    "LaurentPoly", "qint", "qbinom", "bar", "cyclo_reduce", "parse_poly",
    "SlicedDiagram", "Piece", "Kind", "parse_diagram", "expand_braid", "validate",
]
