"""Exact lattice widths, lattice sizes and Newton-polygon curve bounds."""

from .errors import (
    CoordinateGuardError,
    DegeneratePolygonError,
    EmptyPolygonError,
    InternalConsistencyError,
    LatsizeError,
    NotAnInteriorPolygonError,
    NotTwoDimensionalError,
    ZeroPolynomialError,
)
from .interior import OnionTrace, interior_hull, move_out, onion_skins
from .newton import (
    LaurentPolynomial,
    NewtonAnalysis,
    analyze,
    newton_polygon,
    parse_laurent,
    transform_support,
)
from .oracle import (
    ParetoSet,
    census,
    oracle_box_pareto,
    oracle_size,
    random_polygon,
    random_unimodular_map,
)
from .polygon import (
    EMPTY,
    AffineUnimodularMap,
    LatticePolygon,
    Measures,
    SpecialShape,
    apply_map,
    are_equivalent,
    hull,
    integral_length,
    interior_lattice_points,
    lattice_points,
    lawrence_prism,
    measures,
    rectangle,
    recognize_special,
    standard_triangle,
    upsilon,
)
from .size import (
    BoxCertificate,
    ParallelEdgeHit,
    SizeCertificate,
    SizeStep,
    fit_into,
    lattice_size_sigma,
    lattice_size_square,
    minimal_box,
    parallel_edge_exception,
)
from .width import WidthResult, WidthStep, lattice_width, lattice_width_recursive, width_along

__version__ = "0.1.0"

__all__ = [
    "AffineUnimodularMap",
    "BoxCertificate",
    "CoordinateGuardError",
    "DegeneratePolygonError",
    "EMPTY",
    "EmptyPolygonError",
    "InternalConsistencyError",
    "LatsizeError",
    "LatticePolygon",
    "LaurentPolynomial",
    "Measures",
    "NewtonAnalysis",
    "NotAnInteriorPolygonError",
    "NotTwoDimensionalError",
    "OnionTrace",
    "ParallelEdgeHit",
    "ParetoSet",
    "SizeCertificate",
    "SizeStep",
    "SpecialShape",
    "WidthResult",
    "WidthStep",
    "ZeroPolynomialError",
    "analyze",
    "apply_map",
    "are_equivalent",
    "census",
    "fit_into",
    "hull",
    "integral_length",
    "interior_hull",
    "interior_lattice_points",
    "lattice_points",
    "lattice_size_sigma",
    "lattice_size_square",
    "lattice_width",
    "lattice_width_recursive",
    "lawrence_prism",
    "measures",
    "minimal_box",
    "move_out",
    "newton_polygon",
    "onion_skins",
    "oracle_box_pareto",
    "oracle_size",
    "parallel_edge_exception",
    "parse_laurent",
    "random_polygon",
    "random_unimodular_map",
    "rectangle",
    "recognize_special",
    "standard_triangle",
    "transform_support",
    "upsilon",
    "width_along",
]
