"""Self-counting circled-spiral Latin square puzzles.

Computes the spiral value sequence in closed form, constructs and
verifies solved grids of any size, and confirms solution uniqueness at
small sizes with an exhaustive search oracle.
"""

from .errors import (
    CoordinateError,
    GridFormatError,
    GridParseError,
    PulsarError,
    SearchSizeError,
    SizeError,
)
from .geometry import CellTag, GridCoord, Layout, Spiral, circled_mask, layout, piece_cells, rotate_cw
from .puzzle import (
    SolvedGrid,
    VerificationReport,
    make_grid,
    solve,
    spiral_values,
    verify_all,
    verify_circle_counts,
    verify_edge_gap,
    verify_latin,
    verify_mask,
)
from .search import (
    DEFAULT_MAX_N,
    HARD_MAX_N,
    UniquenessReport,
    check_unique,
    enumerate_solutions,
)
from .sequence import (
    PieceCoord,
    dual,
    index_to_piece,
    parity_index,
    piece,
    pulsar_closed,
    pulsar_parity,
    pulsar_recursive,
    sequence_prefix,
)

__version__ = "0.1.0"

__all__ = [
    "CellTag",
    "CoordinateError",
    "DEFAULT_MAX_N",
    "GridCoord",
    "GridFormatError",
    "GridParseError",
    "HARD_MAX_N",
    "Layout",
    "PieceCoord",
    "PulsarError",
    "SearchSizeError",
    "SizeError",
    "SolvedGrid",
    "Spiral",
    "UniquenessReport",
    "VerificationReport",
    "check_unique",
    "circled_mask",
    "dual",
    "enumerate_solutions",
    "index_to_piece",
    "layout",
    "make_grid",
    "parity_index",
    "piece",
    "piece_cells",
    "pulsar_closed",
    "pulsar_parity",
    "pulsar_recursive",
    "rotate_cw",
    "sequence_prefix",
    "solve",
    "spiral_values",
    "verify_all",
    "verify_circle_counts",
    "verify_edge_gap",
    "verify_latin",
    "verify_mask",
]
