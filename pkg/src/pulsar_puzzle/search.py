"""Exhaustive backtracking oracle for small puzzle sizes.

Independent of the closed-form construction: enumerates every grid that
satisfies the puzzle rules for a given size, confirming that the
solution is unique and equals the constructed one.  Deliberately plain
-- static row-major order, ascending candidate values -- so two runs
with the same parameters produce identical reports (except elapsed
time).

Pruning stays sound because the canonical mask is tight: the circled
cells number 1 + 2 + ... + n and the uncircled ones (n-1) + ... + 0, so
in any completed solution each value v occupies exactly v circled and
n - v uncircled cells.  Bounding those counts from above during the
search can therefore never exclude a valid completion.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import SearchSizeError, SizeError
from .geometry import circled_mask
from .puzzle import SolvedGrid, verify_all

DEFAULT_MAX_N = 6
HARD_MAX_N = 7  # larger sizes are out of reach for this oracle


@dataclass(frozen=True)
class UniquenessReport:
    n: int
    solution_count: int
    solutions: tuple[SolvedGrid, ...]  # recorded up to the cap
    nodes_expanded: int
    elapsed: float


def enumerate_solutions(
    n: int,
    cap: int = 2,
    *,
    max_n: int = DEFAULT_MAX_N,
    count_limit: int | None = None,
    strong_prune: bool = False,
) -> UniquenessReport:
    """Enumerate all grids of size n satisfying the puzzle rules.

    Depth-first over cells in row-major order, candidate values
    ascending.  Prunes: (i) row/column exclusion, (ii) at most v circled
    occurrences of v, (iii) at most n - v uncircled occurrences of v;
    every complete assignment is accepted only if the full verifier
    passes.  Records at most ``cap`` solutions but keeps counting until
    ``count_limit`` (None = count everything).

    ``strong_prune`` adds the optional reachability cut: a value already
    started in circled cells must still be able to reach v occurrences
    with the circled cells that remain.
    """
    if cap < 1:
        raise ValueError(f"solution cap must be >= 1, got {cap}")
    if count_limit is not None and count_limit < 1:
        raise ValueError(f"count limit must be >= 1, got {count_limit}")
    if not 1 <= max_n <= HARD_MAX_N:
        raise ValueError(f"search ceiling must be in 1..{HARD_MAX_N}, got {max_n}")
    if n < 1:
        raise SizeError(f"grid size must be >= 1, got {n}")
    if n > max_n:
        raise SearchSizeError(
            f"size {n} exceeds the search ceiling {max_n}; "
            f"raise it explicitly (hard maximum {HARD_MAX_N})"
        )

    start = time.perf_counter()
    mask = frozenset(circled_mask(n))
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    is_circled = [coord in mask for coord in cells]
    # circled cells at position >= i, for the strong prune
    circled_left = [0] * (len(cells) + 1)
    for i in range(len(cells) - 1, -1, -1):
        circled_left[i] = circled_left[i + 1] + is_circled[i]

    grid = [[0] * n for _ in range(n)]
    row_used = [0] * (n + 1)   # bitmask per row, bit v = value v taken
    col_used = [0] * (n + 1)
    circled_count = [0] * (n + 1)
    uncircled_count = [0] * (n + 1)

    solutions: list[SolvedGrid] = []
    solution_count = 0
    nodes = 0
    done = False

    def at_leaf() -> None:
        nonlocal solution_count, done
        candidate = SolvedGrid(n, tuple(tuple(row) for row in grid), mask)
        if not verify_all(candidate).ok:  # final arbiter; prunes are upper bounds only
            return
        solution_count += 1
        if len(solutions) < cap:
            solutions.append(candidate)
        if count_limit is not None and solution_count >= count_limit:
            done = True

    def reachable(i: int) -> bool:
        # every started value must still fit its v circled occurrences
        remaining = circled_left[i]
        for v in range(1, n + 1):
            have = circled_count[v]
            if 0 < have < v and v - have > remaining:
                return False
        return True

    def dfs(i: int) -> None:
        nonlocal nodes
        if done:
            return
        if i == len(cells):
            at_leaf()
            return
        r, c = cells[i]
        taken = row_used[r] | col_used[c]
        circled_here = is_circled[i]
        for v in range(1, n + 1):
            bit = 1 << v
            if taken & bit:
                continue
            if circled_here:
                if circled_count[v] == v:
                    continue
                circled_count[v] += 1
            else:
                if uncircled_count[v] == n - v:
                    continue
                uncircled_count[v] += 1
            if strong_prune and circled_here and not reachable(i + 1):
                circled_count[v] -= 1
                continue
            row_used[r] |= bit
            col_used[c] |= bit
            grid[r - 1][c - 1] = v
            nodes += 1
            dfs(i + 1)
            grid[r - 1][c - 1] = 0
            row_used[r] &= ~bit
            col_used[c] &= ~bit
            if circled_here:
                circled_count[v] -= 1
            else:
                uncircled_count[v] -= 1
            if done:
                return

    dfs(0)
    return UniquenessReport(
        n=n,
        solution_count=solution_count,
        solutions=tuple(solutions),
        nodes_expanded=nodes,
        elapsed=time.perf_counter() - start,
    )


def check_unique(n: int, *, max_n: int = DEFAULT_MAX_N) -> tuple[bool, SolvedGrid | None]:
    """Whether size n has exactly one solution, and that solution if so."""
    report = enumerate_solutions(n, cap=2, max_n=max_n)
    if report.solution_count == 1:
        return True, report.solutions[0]
    return False, None
