"""knotlab: an engine and playground for knot and link diagrams.

Parse and validate PD codes, apply Reidemeister moves, compute
invariants (tricolor count, writhe, linking numbers, Kauffman bracket,
Jones polynomial), search for equivalences, and drive move puzzles and
coloring exercises through a CLI and an HTTP service.
"""

from ._kernels import backend as kernel_backend
from .catalog import CatalogEntry, catalog_entries, catalog_get, catalog_names
from .diagram import (
    ArcMap,
    Crossing,
    Diagram,
    Finding,
    TraceReport,
    ValidationReport,
    canonical,
    emit_pd,
    gauss_code,
    mirror,
    parse_pd,
    trace,
    validate,
    validate_text,
)
from .errors import (
    BadComponentError,
    BudgetExceededError,
    IncompleteColoringError,
    InvalidSiteError,
    KnotlabError,
    NotFoundError,
    PDSyntaxError,
    StructureError,
)
from .invariants import (
    SignData,
    TricolorReport,
    jones_polynomial,
    kauffman_bracket,
    linking_matrix,
    linking_number,
    signs_and_writhe,
    tricolor_count,
)
from .laurent import LaurentPoly
from .moves import MoveSite, apply_move, enumerate_sites, inverse_site, random_walk

__version__ = "0.1.0"

__all__ = [
    "ArcMap",
    "BadComponentError",
    "BudgetExceededError",
    "CatalogEntry",
    "Crossing",
    "Diagram",
    "Finding",
    "IncompleteColoringError",
    "InvalidSiteError",
    "KnotlabError",
    "LaurentPoly",
    "MoveSite",
    "NotFoundError",
    "PDSyntaxError",
    "SignData",
    "StructureError",
    "TraceReport",
    "TricolorReport",
    "ValidationReport",
    "apply_move",
    "canonical",
    "catalog_entries",
    "catalog_get",
    "catalog_names",
    "emit_pd",
    "enumerate_sites",
    "gauss_code",
    "inverse_site",
    "jones_polynomial",
    "kauffman_bracket",
    "kernel_backend",
    "linking_matrix",
    "linking_number",
    "mirror",
    "parse_pd",
    "random_walk",
    "signs_and_writhe",
    "trace",
    "tricolor_count",
    "validate",
    "validate_text",
    "__version__",
]
