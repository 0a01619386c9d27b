"""Grid document formats.

Text format (the CLI default):
  line 1 is ``N=<int>``, followed by N lines of N whitespace-separated
  tokens; a plain value is ``<v>``, a circled value is ``(<v>)``.  A
  trailing newline is required.  Unambiguous for any N, including
  multi-digit values.

Structured format (versioned, for machine consumption):
  JSON object {"format": "pulsar-grid", "version": 1, "size": N,
  "cells": [{"value": v, "circled": bool}, ...]} with cells row-major.

SVG and ASCII renderings are output-only.  All renderers produce
byte-identical output for identical grids.
"""

from __future__ import annotations

import json
import re

from .errors import GridParseError
from .geometry import GridCoord
from .puzzle import SolvedGrid

FORMAT_NAME = "pulsar-grid"
FORMAT_VERSION = 1

_HEADER_RE = re.compile(r"N=(\d+)")
_TOKEN_RE = re.compile(r"\S+")
_PLAIN_RE = re.compile(r"\d+")
_CIRCLED_RE = re.compile(r"\((\d+)\)")


def render_text(g: SolvedGrid) -> str:
    lines = [f"N={g.n}"]
    for r in range(1, g.n + 1):
        lines.append(
            " ".join(
                f"({g.value_at(r, c)})" if g.is_circled(r, c) else str(g.value_at(r, c))
                for c in range(1, g.n + 1)
            )
        )
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> SolvedGrid:
    """Parse the text grid format; raises GridParseError with line/column."""
    if not text:
        raise GridParseError("empty document", line=1, column=1)
    if not text.endswith("\n"):
        raise GridParseError("missing trailing newline", line=text.count("\n") + 1)
    lines = text.split("\n")[:-1]
    header = _HEADER_RE.fullmatch(lines[0])
    if header is None:
        raise GridParseError("expected header 'N=<int>'", line=1, column=1)
    n = int(header.group(1))
    if n < 1:
        raise GridParseError(f"size must be >= 1, got {n}", line=1, column=3)
    if len(lines) - 1 < n:
        raise GridParseError(f"expected {n} grid rows, found {len(lines) - 1}", line=len(lines) + 1)
    if len(lines) - 1 > n:
        raise GridParseError("unexpected extra line", line=n + 2, column=1)

    rows: list[tuple[int, ...]] = []
    circled: set[GridCoord] = set()
    for j in range(1, n + 1):
        line = lines[j]
        tokens = list(_TOKEN_RE.finditer(line))
        if len(tokens) != n:
            column = tokens[n].start() + 1 if len(tokens) > n else len(line) + 1
            raise GridParseError(f"expected {n} tokens, found {len(tokens)}", line=j + 1, column=column)
        row: list[int] = []
        for i, match in enumerate(tokens, start=1):
            token = match.group()
            column = match.start() + 1
            circled_match = _CIRCLED_RE.fullmatch(token)
            if circled_match is not None:
                value = int(circled_match.group(1))
                circled.add((j, i))
            elif _PLAIN_RE.fullmatch(token) is not None:
                value = int(token)
            else:
                raise GridParseError(f"bad token {token!r}", line=j + 1, column=column)
            if not 1 <= value <= n:
                raise GridParseError(f"value {value} outside 1..{n}", line=j + 1, column=column)
            row.append(value)
        rows.append(tuple(row))
    return SolvedGrid(n, tuple(rows), frozenset(circled))


def render_structured(g: SolvedGrid) -> str:
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "size": g.n,
        "cells": [
            {"value": g.value_at(r, c), "circled": g.is_circled(r, c)}
            for r in range(1, g.n + 1)
            for c in range(1, g.n + 1)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_structured(text: str) -> SolvedGrid:
    """Parse the JSON structured format; raises GridParseError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise GridParseError("expected a JSON object")
    if doc.get("format") != FORMAT_NAME:
        raise GridParseError(f"unsupported format {doc.get('format')!r}, expected {FORMAT_NAME!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise GridParseError(f"unsupported version {doc.get('version')!r}, expected {FORMAT_VERSION}")
    n = doc.get("size")
    if not isinstance(n, int) or n < 1:
        raise GridParseError(f"size must be a positive integer, got {n!r}")
    cells = doc.get("cells")
    if not isinstance(cells, list) or len(cells) != n * n:
        found = len(cells) if isinstance(cells, list) else cells
        raise GridParseError(f"expected {n * n} cells, found {found!r}")
    rows = [[0] * n for _ in range(n)]
    circled: set[GridCoord] = set()
    for index, cell in enumerate(cells):
        r, c = index // n + 1, index % n + 1
        if not isinstance(cell, dict):
            raise GridParseError(f"cell {index}: expected an object")
        value = cell.get("value")
        flag = cell.get("circled")
        if not isinstance(value, int) or not 1 <= value <= n:
            raise GridParseError(f"cell {index}: value {value!r} outside 1..{n}")
        if not isinstance(flag, bool):
            raise GridParseError(f"cell {index}: circled must be a boolean")
        rows[r - 1][c - 1] = value
        if flag:
            circled.add((r, c))
    return SolvedGrid(n, tuple(tuple(row) for row in rows), frozenset(circled))


def parse_document(text: str) -> SolvedGrid:
    """Parse either supported format, sniffing by the first character."""
    if text.lstrip()[:1] == "{":
        return parse_structured(text)
    return parse_text(text)


_SVG_CELL = 40
_SVG_MARGIN = 10
_SVG_RADIUS = 17
_SVG_FONT = 18


def render_svg(g: SolvedGrid) -> str:
    """Deterministic SVG: one rect per cell, one circle per circled cell."""
    side = 2 * _SVG_MARGIN + g.n * _SVG_CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">'
    ]
    for r in range(1, g.n + 1):
        for c in range(1, g.n + 1):
            x = _SVG_MARGIN + (c - 1) * _SVG_CELL
            y = _SVG_MARGIN + (r - 1) * _SVG_CELL
            parts.append(
                f'  <rect x="{x}" y="{y}" width="{_SVG_CELL}" height="{_SVG_CELL}" '
                f'fill="white" stroke="black"/>'
            )
    for r in range(1, g.n + 1):
        for c in range(1, g.n + 1):
            if g.is_circled(r, c):
                cx = _SVG_MARGIN + (c - 1) * _SVG_CELL + _SVG_CELL // 2
                cy = _SVG_MARGIN + (r - 1) * _SVG_CELL + _SVG_CELL // 2
                parts.append(
                    f'  <circle cx="{cx}" cy="{cy}" r="{_SVG_RADIUS}" fill="none" stroke="black"/>'
                )
    for r in range(1, g.n + 1):
        for c in range(1, g.n + 1):
            cx = _SVG_MARGIN + (c - 1) * _SVG_CELL + _SVG_CELL // 2
            cy = _SVG_MARGIN + (r - 1) * _SVG_CELL + _SVG_CELL // 2
            parts.append(
                f'  <text x="{cx}" y="{cy}" font-family="sans-serif" font-size="{_SVG_FONT}" '
                f'text-anchor="middle" dominant-baseline="central">{g.value_at(r, c)}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_ascii(g: SolvedGrid) -> str:
    """Boxed grid with circled values in parentheses, like the figures."""
    width = len(str(g.n))
    border = "+" + "+".join(["-" * (width + 2)] * g.n) + "+"
    lines = [border]
    for r in range(1, g.n + 1):
        tokens = []
        for c in range(1, g.n + 1):
            v = str(g.value_at(r, c)).rjust(width)
            tokens.append(f"({v})" if g.is_circled(r, c) else f" {v} ")
        lines.append("|" + "|".join(tokens) + "|")
        lines.append(border)
    return "\n".join(lines) + "\n"
