"""Generators for the named interconnect and task topologies.

Hypercube vertex ids double as their bit labels: vertex i is adjacent to
vertex j iff i ^ j has exactly one bit set.  That convention makes
Hamming-distance properties directly testable and lets
:func:`canonical_hypercube_dim` recognize generated hypercubes in O(n*s)
so callers can take closed-form shortcuts instead of exponential searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import InvalidParameter
from .graph import Graph

__all__ = [
    "hypercube",
    "ring",
    "star",
    "complete",
    "gray_code_cycle",
    "canonical_hypercube_dim",
    "TopologySpec",
    "parse_topology_spec",
]

MAX_HYPERCUBE_DIM = 20  # order cap 2^20


def hypercube(s: int) -> Graph:
    """The s-dimensional hypercube H_s on 2^s bit-string vertices."""
    if not (1 <= s <= MAX_HYPERCUBE_DIM):
        raise InvalidParameter(f"hypercube dimension must be in 1..{MAX_HYPERCUBE_DIM}, got {s}")
    n = 1 << s
    edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(s) if i < i ^ (1 << b)]
    return Graph(n, edges)


def ring(p: int) -> Graph:
    """The cycle graph C_p: vertex i adjacent to (i +- 1) mod p."""
    if p < 3:
        raise InvalidParameter(f"ring order must be >= 3, got {p}")
    return Graph(p, [(i, (i + 1) % p) for i in range(p)])


def star(p: int) -> Graph:
    """The star K_{1,p-1}: center vertex 0 adjacent to vertices 1..p-1."""
    if p < 2:
        raise InvalidParameter(f"star order must be >= 2, got {p}")
    return Graph(p, [(0, i) for i in range(1, p)])


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise InvalidParameter(f"complete-graph order must be >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gray_code_cycle(s: int) -> Tuple[int, ...]:
    """Reflected-binary Gray sequence: a Hamiltonian cycle witness for H_s.

    Returns all 2^s vertex ids in an order whose consecutive labels, cyclically
    including last back to first, differ in exactly one bit.
    """
    if s < 2:
        raise InvalidParameter(f"hypercube has a Hamiltonian cycle only for s >= 2, got {s}")
    if s > MAX_HYPERCUBE_DIM:
        raise InvalidParameter(f"hypercube dimension must be in 2..{MAX_HYPERCUBE_DIM}, got {s}")
    return tuple(i ^ (i >> 1) for i in range(1 << s))


def canonical_hypercube_dim(g: Graph) -> Optional[int]:
    """Dimension s if g is the canonically labeled hypercube H_s, else None."""
    n = g.order
    s = n.bit_length() - 1
    if n < 2 or (1 << s) != n:
        return None
    for i in range(n):
        if g.neighbors(i) != tuple(sorted(i ^ (1 << b) for b in range(s))):
            return None
    return s


@dataclass(frozen=True)
class TopologySpec:
    """Tagged descriptor of a topology: generated by kind/parameter, or a file.

    Text syntax (used by the CLI): ``hypercube:s``, ``ring:p``, ``star:p``,
    ``complete:n``, ``file:PATH``.
    """

    kind: str
    parameter: Optional[int] = None
    path: Optional[str] = None

    def build(self) -> Graph:
        if self.kind == "hypercube":
            return hypercube(self.parameter)
        if self.kind == "ring":
            return ring(self.parameter)
        if self.kind == "star":
            return star(self.parameter)
        if self.kind == "complete":
            return complete(self.parameter)
        if self.kind == "custom":
            from .edgelist import read_edge_list_path

            return read_edge_list_path(self.path)
        raise InvalidParameter(f"unknown topology kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "custom":
            return f"file:{self.path}"
        return f"{self.kind}:{self.parameter}"


def parse_topology_spec(text: str) -> TopologySpec:
    """Parse the ``kind:parameter`` spec syntax."""
    kind, sep, arg = text.partition(":")
    if not sep or not arg:
        raise InvalidParameter(f"expected KIND:ARG topology spec, got {text!r}")
    if kind == "file":
        return TopologySpec(kind="custom", path=arg)
    if kind in ("hypercube", "ring", "star", "complete"):
        try:
            value = int(arg)
        except ValueError:
            raise InvalidParameter(f"{kind} parameter must be an integer, got {arg!r}") from None
        return TopologySpec(kind=kind, parameter=value)
    raise InvalidParameter(f"unknown topology kind {kind!r} in {text!r}")
