"""Reading and writing Tanner graphs in the alist interchange format.

Layout: line 1 is ``n m``; line 2 the maximum variable and check degrees;
line 3 the n variable degrees; line 4 the m check degrees; then one line of
1-indexed check neighbours per variable and one line of 1-indexed variable
neighbours per check. Zero entries are padding and are ignored on input;
canonical output writes no padding, single spaces, and a trailing newline,
so writing a graph read from a canonical file reproduces it byte for byte.

Indices are 1-based in files only; everything in memory is 0-based.
"""

from __future__ import annotations

import os
from typing import Union

from .graphs import GraphError, TannerGraph, build_tanner_graph


class AlistError(ValueError):
    """Malformed alist content; the message carries the 1-based line number."""


def _int_fields(line: str, lineno: int) -> list[int]:
    out = []
    for field in line.split():
        try:
            out.append(int(field))
        except ValueError:
            raise AlistError(f"line {lineno}: expected integer, got {field!r}") from None
    return out


def parse_alist(text: str) -> TannerGraph:
    """Parse alist content into a Tanner graph, validating both adjacency blocks."""
    lines = text.splitlines()

    def fields(index: int, what: str) -> list[int]:
        if index >= len(lines):
            raise AlistError(f"line {index + 1}: missing {what}")
        return _int_fields(lines[index], index + 1)

    header = fields(0, "node counts")
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise AlistError("line 1: expected 'n m' with nonnegative counts")
    n, m = header
    maxima = fields(1, "maximum degrees")
    if len(maxima) != 2:
        raise AlistError("line 2: expected maximum variable and check degrees")
    var_degrees = fields(2, "variable degrees")
    if len(var_degrees) != n:
        raise AlistError(f"line 3: expected {n} variable degrees, got {len(var_degrees)}")
    check_degrees = fields(3, "check degrees")
    if len(check_degrees) != m:
        raise AlistError(f"line 4: expected {m} check degrees, got {len(check_degrees)}")

    def adjacency_block(start: int, count: int, declared: list[int], limit: int,
                        side: str, other: str) -> list[list[int]]:
        rows = []
        for i in range(count):
            lineno = start + i + 1
            entries = [e for e in fields(start + i, f"{side} {i} neighbours") if e != 0]
            if len(entries) != declared[i]:
                raise AlistError(
                    f"line {lineno}: {side} {i} lists {len(entries)} neighbours, "
                    f"degree line declares {declared[i]}"
                )
            if len(set(entries)) != len(entries):
                raise AlistError(f"line {lineno}: {side} {i} lists a neighbour twice")
            for e in entries:
                if not 1 <= e <= limit:
                    raise AlistError(
                        f"line {lineno}: {other} index {e} out of range 1..{limit}"
                    )
            rows.append([e - 1 for e in entries])
        return rows

    var_rows = adjacency_block(4, n, var_degrees, m, "variable", "check")
    check_rows = adjacency_block(4 + n, m, check_degrees, n, "check", "variable")

    from_vars = {(v, c) for v, row in enumerate(var_rows) for c in row}
    from_checks = {(v, c) for c, row in enumerate(check_rows) for v in row}
    if from_vars != from_checks:
        v, c = sorted(from_vars ^ from_checks)[0]
        raise AlistError(
            f"adjacency blocks disagree on edge (variable {v + 1}, check {c + 1})"
        )
    try:
        return build_tanner_graph(sorted(from_vars), n=n, m=m)
    except GraphError as exc:
        raise AlistError(str(exc)) from exc


def read_alist(path: Union[str, os.PathLike]) -> TannerGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_alist(fh.read())


def to_alist_string(t: TannerGraph) -> str:
    """Canonical alist serialization: no padding, single spaces, final newline."""
    lines = [
        f"{t.n} {t.m}",
        f"{max((t.var_degree(v) for v in range(t.n)), default=0)} "
        f"{max((t.check_degree(c) for c in range(t.m)), default=0)}",
        " ".join(str(t.var_degree(v)) for v in range(t.n)),
        " ".join(str(t.check_degree(c)) for c in range(t.m)),
    ]
    lines += [" ".join(str(c + 1) for c in t.var_adj[v]) for v in range(t.n)]
    lines += [" ".join(str(v + 1) for v in t.check_adj[c]) for c in range(t.m)]
    return "\n".join(lines) + "\n"


def write_alist(t: TannerGraph, path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_alist_string(t))
