"""Edge-list text format.

Line 1 holds ``n m`` (order and edge count), followed by m lines ``u v`` with
0-based vertex ids.  Lines starting with ``#`` are comments and may appear
anywhere; blank lines are ignored.  Duplicate and reversed edges collapse on
read.  The writer emits each edge once as ``u v`` with u < v, sorted
lexicographically, so equal graphs serialize identically.
"""

from __future__ import annotations

import io
import os
from typing import TextIO, Union

from .errors import EdgeListFormatError
from .graph import Graph, from_edge_list

__all__ = [
    "read_edge_list",
    "write_edge_list",
    "read_edge_list_path",
    "write_edge_list_path",
    "loads",
    "dumps",
]

PathLike = Union[str, os.PathLike]


def _data_lines(stream: TextIO):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def read_edge_list(stream: TextIO) -> Graph:
    """Parse a graph from an open text stream."""
    lines = _data_lines(stream)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise EdgeListFormatError("empty edge-list input") from None
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListFormatError(f"line {lineno}: expected 'n m' header, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListFormatError(f"line {lineno}: non-integer header {header!r}") from None
    if m < 0:
        raise EdgeListFormatError(f"line {lineno}: negative edge count {m}")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: non-integer edge {line!r}") from None
        if len(edges) > m:
            raise EdgeListFormatError(f"line {lineno}: more than {m} edge lines")
    if len(edges) < m:
        raise EdgeListFormatError(f"expected {m} edge lines, found {len(edges)}")
    return from_edge_list(n, edges)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    """Write a graph in canonical form: header, then sorted ``u v`` lines."""
    stream.write(f"{g.order} {g.num_edges}\n")
    for u, v in g.sorted_edges():
        stream.write(f"{u} {v}\n")


def loads(text: str) -> Graph:
    return read_edge_list(io.StringIO(text))


def dumps(g: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


def read_edge_list_path(path: PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_edge_list(fh)


def write_edge_list_path(g: Graph, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_edge_list(g, fh)
