"""Exact integer evaluation of the spiral value sequence.

The values along the uncircled spiral of any solved puzzle form a single
infinite sequence, independent of the grid size.  Arranged as a
triangular array (row ``a`` holds the ``a`` entries of the ``a``-th
piece), entry ``(a, b)`` can be computed three independent ways:

* ``pulsar_closed``    -- closed form driven by a parity index,
* ``pulsar_parity``    -- half-row parity rule,
* ``pulsar_recursive`` -- peeling recurrence with its two boundaries.

All three are exposed so they can be cross-checked; they agree
everywhere.  The circled spiral holds the complement ``dual``.

Everything here is pure integer arithmetic; no floats are involved
anywhere, so results are exact for rows well beyond a million.
"""

from __future__ import annotations

import math

from .errors import CoordinateError, SizeError

# (a, b): row and column of the triangular array, 1 <= b <= a
PieceCoord = tuple[int, int]


def _check_coord(a: int, b: int) -> None:
    if a < 1 or b < 1 or b > a:
        raise CoordinateError(f"coordinate (a={a}, b={b}) outside 1 <= b <= a")


def parity_index(a: int, b: int) -> int:
    """Peeling depth of ``(a, b)``: how far it sits from the row ends.

    Computed as ((a-1) - |2b - (a+1)|) / 2 entirely in integers; the
    numerator is always even, so the division is exact.  Ranges over
    0 .. floor((a-1)/2).
    """
    _check_coord(a, b)
    return ((a - 1) - abs(2 * b - (a + 1))) // 2


def pulsar_closed(a: int, b: int) -> int:
    """Sequence entry at ``(a, b)`` by the closed form.

    Equals a+1-b when the parity index is even, b when it is odd.  The
    sign factor is a parity branch, never a floating-point power.
    """
    if parity_index(a, b) % 2 == 0:
        return a + 1 - b
    return b


def pulsar_parity(a: int, b: int) -> int:
    """Sequence entry at ``(a, b)`` by the half-row parity rule.

    The pivot is 1 on the left half of the row (2b < a+1) and a on the
    right half; the entry is a+1-b when b matches the pivot's parity,
    else b.
    """
    _check_coord(a, b)
    pivot = 1 if 2 * b < a + 1 else a
    if (b - pivot) % 2 == 0:
        return a + 1 - b
    return b


# Memo shared across calls; entries are pure and idempotent, so concurrent
# writes cannot change results.  Rows above the bound still evaluate (the
# loop below is iterative), they just skip the cache.
_REC_MEMO: dict[PieceCoord, int] = {}
_REC_MEMO_MAX_ROW = 4096


def pulsar_recursive(a: int, b: int) -> int:
    """Sequence entry at ``(a, b)`` by the peeling recurrence.

    Interior entries satisfy value(a, b) = value(a-2, a-b) + 1; the
    boundaries are value(a, 1) = a and value(a, a) = 1 (which also cover
    rows a <= 2).  Evaluated iteratively -- the row index drops by two
    each step, so the peel terminates -- with a shared memo over the
    visited chain.
    """
    _check_coord(a, b)
    chain: list[PieceCoord] = []
    while 2 <= b <= a - 1:
        cached = _REC_MEMO.get((a, b))
        if cached is not None:
            value = cached
            break
        chain.append((a, b))
        a, b = a - 2, a - b
    else:
        value = a if b == 1 else 1
    for coord in reversed(chain):
        value += 1
        if coord[0] <= _REC_MEMO_MAX_ROW:
            _REC_MEMO[coord] = value
    return value


def dual(n: int, a: int, b: int) -> int:
    """Circled-spiral entry for grid size ``n``: n + 1 - value(a, b).

    Applying it twice returns the original value.  Requires a <= n.
    """
    if n < 1:
        raise SizeError(f"grid size must be >= 1, got {n}")
    if a > n:
        raise SizeError(f"piece row {a} exceeds grid size {n}")
    return n + 1 - pulsar_closed(a, b)


def piece(a: int) -> list[int]:
    """All ``a`` entries of piece ``a``; always a permutation of 1..a."""
    if a < 1:
        raise SizeError(f"piece index must be >= 1, got {a}")
    return [pulsar_closed(a, b) for b in range(1, a + 1)]


def sequence_prefix(k: int) -> list[int]:
    """First ``k`` terms of the flattened sequence (pieces concatenated).

    Indexing is 1-based when talking about term positions; ``k = 0``
    yields the empty list.
    """
    if k < 0:
        raise ValueError(f"term count must be >= 0, got {k}")
    out: list[int] = []
    a = 1
    while len(out) < k:
        out.extend(pulsar_closed(a, b) for b in range(1, a + 1))
        a += 1
    del out[k:]
    return out


def index_to_piece(k: int) -> PieceCoord:
    """Map 1-based flattened term index ``k`` to its (a, b) coordinate.

    ``a`` is minimal with a(a+1)/2 >= k, and b = k - a(a-1)/2.
    """
    if k < 1:
        raise CoordinateError(f"flattened index must be >= 1, got {k}")
    a = (math.isqrt(8 * k + 1) - 1) // 2
    if a * (a + 1) // 2 < k:
        a += 1
    return a, k - a * (a - 1) // 2
