"""Solved-grid construction and rule verification.

A solved grid is a Latin square whose circled cells are self-counting:
every digit v sitting in a circled cell appears in exactly v circled
cells.  ``solve`` fills the canonical grid from the two spirals;
the ``verify_*`` functions check arbitrary grids against each rule and
report every violation rather than stopping at the first, so callers
can explain bad inputs in full.

Structural problems (wrong dimensions, out-of-range values) raise
``GridFormatError``; rule failures are reported, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GridFormatError, SizeError
from .geometry import GridCoord, Spiral, circled_mask, layout
from .sequence import dual, pulsar_closed

# (where, reason); where is "row 3", "column 2", "cell (2,5)", "circled value 4", ...
Violation = tuple[str, str]


@dataclass(frozen=True)
class SolvedGrid:
    """An n x n value matrix plus the set of circled cells."""

    n: int
    values: tuple[tuple[int, ...], ...]
    circled: frozenset[GridCoord]

    def value_at(self, row: int, col: int) -> int:
        return self.values[row - 1][col - 1]

    def is_circled(self, row: int, col: int) -> bool:
        return (row, col) in self.circled


@dataclass
class VerificationReport:
    latin_ok: bool = True
    circle_counts_ok: bool = True
    mask_ok: bool = True
    edge_gap_ok: bool = True
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def make_grid(values, circled) -> SolvedGrid:
    """Normalize nested sequences into a SolvedGrid (no validation)."""
    rows = tuple(tuple(row) for row in values)
    return SolvedGrid(len(rows), rows, frozenset(circled))


def solve(n: int) -> SolvedGrid:
    """The canonical solved grid of size n.

    Uncircled cells take their spiral value directly; circled cells take
    the dual n + 1 - value.
    """
    if n < 1:
        raise SizeError(f"grid size must be >= 1, got {n}")
    lay = layout(n)
    rows = [[0] * n for _ in range(n)]
    circ: set[GridCoord] = set()
    for (r, c), tag in lay.tags.items():
        if tag.spiral is Spiral.DUAL:
            rows[r - 1][c - 1] = dual(n, tag.a, tag.b)
            circ.add((r, c))
        else:
            rows[r - 1][c - 1] = pulsar_closed(tag.a, tag.b)
    return SolvedGrid(n, tuple(tuple(row) for row in rows), frozenset(circ))


def check_structure(g: SolvedGrid) -> None:
    """Raise GridFormatError unless g is an n x n matrix of 1..n values."""
    if g.n < 1:
        raise GridFormatError(f"grid size must be >= 1, got {g.n}")
    if len(g.values) != g.n:
        raise GridFormatError(f"expected {g.n} rows, found {len(g.values)}")
    for j, row in enumerate(g.values, start=1):
        if len(row) != g.n:
            raise GridFormatError(f"row {j}: expected {g.n} values, found {len(row)}")
        for i, v in enumerate(row, start=1):
            if not isinstance(v, int) or not 1 <= v <= g.n:
                raise GridFormatError(f"cell ({j},{i}): value {v!r} outside 1..{g.n}")
    for coord in g.circled:
        r, c = coord
        if not (1 <= r <= g.n and 1 <= c <= g.n):
            raise GridFormatError(f"circled cell {coord} outside the grid")


def verify_latin(g: SolvedGrid) -> list[Violation]:
    """Violations of the Latin rule: each row and column holds 1..n once."""
    check_structure(g)
    full = frozenset(range(1, g.n + 1))
    out: list[Violation] = []
    for j in range(1, g.n + 1):
        if set(g.values[j - 1]) != full:
            out.append((f"row {j}", f"not a permutation of 1..{g.n}"))
    for i in range(1, g.n + 1):
        if {g.values[j][i - 1] for j in range(g.n)} != full:
            out.append((f"column {i}", f"not a permutation of 1..{g.n}"))
    return out


def verify_circle_counts(g: SolvedGrid) -> list[Violation]:
    """Violations of the self-counting rule on circled cells.

    Equivalent form checked: every value v present in any circled cell
    must occur exactly v times among circled cells.
    """
    check_structure(g)
    counts: dict[int, int] = {}
    for r, c in g.circled:
        v = g.value_at(r, c)
        counts[v] = counts.get(v, 0) + 1
    return [
        (f"circled value {v}", f"appears {k} times in circled cells, expected {v}")
        for v, k in sorted(counts.items())
        if k != v
    ]


def verify_mask(g: SolvedGrid) -> list[Violation]:
    """Violations of the circled set against the canonical spiral mask."""
    mask = circled_mask(g.n)
    out: list[Violation] = []
    for coord in sorted(g.circled - mask):
        out.append((f"cell {coord}", "circled but not on the circled spiral"))
    for coord in sorted(mask - g.circled):
        out.append((f"cell {coord}", "on the circled spiral but not circled"))
    return out


def verify_edge_gap(g: SolvedGrid) -> list[Violation]:
    """Violations of the row edge gap.

    In every row below the first, the last-column entry exceeds the
    first-column entry by exactly one.  Vacuously fine for n = 1.
    """
    check_structure(g)
    out: list[Violation] = []
    for j in range(2, g.n + 1):
        first, last = g.value_at(j, 1), g.value_at(j, g.n)
        if first + 1 != last:
            out.append((f"row {j}", f"first column {first} and last column {last} differ by {last - first}, expected 1"))
    return out


def verify_all(g: SolvedGrid) -> VerificationReport:
    """All four checks, with merged violations."""
    check_structure(g)
    latin = verify_latin(g)
    circles = verify_circle_counts(g)
    mask = verify_mask(g)
    gap = verify_edge_gap(g)
    return VerificationReport(
        latin_ok=not latin,
        circle_counts_ok=not circles,
        mask_ok=not mask,
        edge_gap_ok=not gap,
        violations=latin + circles + mask + gap,
    )


def spiral_values(g: SolvedGrid, spiral: Spiral) -> list[int]:
    """Grid values read along one spiral from the center outward."""
    lay = layout(g.n)
    ordered = sorted(
        ((tag.a, tag.b), coord)
        for coord, tag in lay.tags.items()
        if tag.spiral is spiral
    )
    return [g.value_at(*coord) for _, coord in ordered]
