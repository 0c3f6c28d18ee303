"""Exact lattice-point counting for irrational polygons whose Ehrhart
function is nevertheless a polynomial."""

from .constructions import (
    AssembledPolygon, CGLSParams, SectorData, SectorDatum, Label, assemble, base_pair,
    cgls_triangle, counterexample, cut_and_paste, fan_subdivide, pyramid, quad_Q,
    refine_step0, seed_data, seed_vertex_data,
)
from .counting import count, count_assembled, count_bruteforce, count_scanline, count_segment
from .ehrhart import (
    EhrhartSeries, QuasiPolynomial, closed_form, detect_quasi, fit_polynomial,
    sample_series, verify_collapse,
)
from .errors import (
    ConstraintError, ContextMismatchError, DomainError, ParseError, PeriodCollapseError,
)
from .field import FieldContext, QuadraticNumber, field, format_number, parse_number
from .geometry import (
    IntegralAffineMap, LatticeVector, Point, Polygon, Segment, apply_map, area,
    canonical_edges, contains, dilate, validate_simple,
)

__version__ = "0.1.0"
