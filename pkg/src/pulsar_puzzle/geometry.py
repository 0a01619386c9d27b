"""The two interlocked spirals that tile the square grid.

Every cell of an N x N grid belongs to exactly one of two spirals: the
circled (dual) spiral, made of N pieces, and the uncircled (pulsar)
spiral, made of N - 1 pieces.  A piece is a run of consecutive cells in
a single row or column; piece ``a`` has ``a`` cells, indexed b = 1..a
along its reading direction.

The whole arrangement is defined by peeling:

* the top row is circled piece N, read right to left (b = 1 at the
  right edge);
* the rest of the first column is uncircled piece N - 1, read top to
  bottom;
* the remaining (N-1) x (N-1) block is the size-(N-1) arrangement
  rotated 90 degrees clockwise.

The recursion bottoms out at a single circled cell for N = 1.  Sizes
2..4 are rarely drawn in puzzle collections, but the peeling rule
defines them the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import CoordinateError, SizeError

# (row, col), 1-based, row 1 at the top
GridCoord = tuple[int, int]


class Spiral(Enum):
    PULSAR = "P"  # uncircled spiral
    DUAL = "D"    # circled spiral


class CellTag(NamedTuple):
    """Which spiral a cell belongs to and its (a, b) position in it."""

    spiral: Spiral
    a: int
    b: int


@dataclass(frozen=True)
class Layout:
    """Size ``n`` plus a total map from grid cells to spiral tags."""

    n: int
    tags: dict[GridCoord, CellTag]


def rotate_cw(coord: GridCoord, size: int) -> GridCoord:
    """Rotate a cell 90 degrees clockwise within a size x size grid."""
    r, c = coord
    if not (1 <= r <= size and 1 <= c <= size):
        raise CoordinateError(f"cell {coord} outside a {size}x{size} grid")
    return c, size + 1 - r


def layout(n: int) -> Layout:
    """Build the spiral arrangement for an n x n grid.

    Single O(n^2) pass: peel level by level, tracking the affine frame
    (offset + rotation matrix) that maps the current sub-block's local
    coordinates to global cells.  Each peel composes one extra clockwise
    quarter turn, exactly as in the recursive description above.
    """
    if n < 1:
        raise SizeError(f"grid size must be >= 1, got {n}")
    tags: dict[GridCoord, CellTag] = {}
    r0 = c0 = 0
    m00, m01, m10, m11 = 1, 0, 0, 1
    for k in range(n, 0, -1):
        if k == 1:
            tags[(r0 + m00 + m01, c0 + m10 + m11)] = CellTag(Spiral.DUAL, 1, 1)
            break
        for b in range(1, k + 1):
            r, c = 1, k + 1 - b
            tags[(r0 + m00 * r + m01 * c, c0 + m10 * r + m11 * c)] = CellTag(Spiral.DUAL, k, b)
        for b in range(1, k):
            r, c = b + 1, 1
            tags[(r0 + m00 * r + m01 * c, c0 + m10 * r + m11 * c)] = CellTag(Spiral.PULSAR, k - 1, b)
        # descend: local (r, c) of level k-1 sits at (c+1, k-r+1) of level k
        r0, m00, m01 = r0 + m00 + m01 * (k + 1), -m01, m00
        c0, m10, m11 = c0 + m10 + m11 * (k + 1), -m11, m10
    return Layout(n, tags)


def circled_mask(n: int) -> set[GridCoord]:
    """Cells occupied by the circled spiral; always n(n+1)/2 of them."""
    return {coord for coord, tag in layout(n).tags.items() if tag.spiral is Spiral.DUAL}


def piece_cells(lay: Layout, spiral: Spiral, a: int) -> list[GridCoord]:
    """Cells of one piece in reading order (b = 1..a)."""
    if a < 1:
        raise SizeError(f"piece index must be >= 1, got {a}")
    cells: dict[int, GridCoord] = {}
    for coord, tag in lay.tags.items():
        if tag.spiral is spiral and tag.a == a:
            cells[tag.b] = coord
    if len(cells) != a:
        raise SizeError(f"piece {spiral.value}{a} not present in a {lay.n}x{lay.n} layout")
    return [cells[b] for b in range(1, a + 1)]
