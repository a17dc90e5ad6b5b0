"""Exact embedding machinery: subgraph isomorphism, cycles, stars.

An embedding is an injective, edge-preserving map of a task graph into a
host graph (usually a reachability-transformed system graph).  Searches are
exact: a ``None``/empty answer is a proof of absence, while running out of
budget raises :class:`~topocompat.errors.BudgetExceeded` so that "unknown"
can never be mistaken for "impossible".

The backtracking searches themselves live in ``topocompat._kernels`` with a
compiled fast path; this module owns the contracts, budget handling, and the
analytic shortcuts that need no search (stars reduce to a degree maximum).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from . import _kernels
from .errors import BudgetExceeded, HostTooLarge, InvalidParameter
from .graph import Graph

__all__ = [
    "Embedding",
    "SearchBudget",
    "find_embedding",
    "verify_embedding",
    "longest_cycle",
    "max_star_order",
    "embeddable_ring_orders",
]


@dataclass(frozen=True)
class Embedding:
    """Map from task vertex i to host vertex mapping[i]."""

    mapping: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.mapping)


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exponential searches.

    max_host_order bounds the host size accepted by the generic subgraph
    search; max_nodes bounds backtracking node expansions; time_limit is
    wall-clock seconds.  Exceeding nodes or time raises BudgetExceeded.
    """

    max_host_order: int = 64
    max_nodes: int = 10**8
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_host_order < 1 or self.max_nodes < 1 or self.time_limit <= 0:
            raise InvalidParameter("search budget fields must be strictly positive")

    def deadline(self) -> float:
        return time.monotonic() + self.time_limit


DEFAULT_BUDGET = SearchBudget()


def _search_order(task: Graph) -> list:
    return sorted(range(task.order), key=lambda u: (-task.degree(u), u))


def find_embedding(task: Graph, host: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[Embedding]:
    """One embedding of task into host, or None when provably none exists.

    Raises HostTooLarge when the host exceeds budget.max_host_order and
    BudgetExceeded when the search could not finish within budget.
    """
    if host.order > budget.max_host_order:
        raise HostTooLarge(
            f"host order {host.order} exceeds budget cap {budget.max_host_order}"
        )
    kern = _kernels.kernels_for(host.order)
    status, mapping, _ = kern.subgraph_search(
        task.order,
        task.adjacency_masks(),
        host.order,
        host.adjacency_masks(),
        _search_order(task),
        budget.max_nodes,
        budget.deadline(),
    )
    if status == _kernels.BUDGET_EXCEEDED:
        raise BudgetExceeded("embedding search ran out of node or time budget")
    if status == _kernels.FOUND:
        return Embedding(tuple(mapping))
    return None


def verify_embedding(task: Graph, host: Graph, e: Embedding) -> bool:
    """Check injectivity, range, and that every task edge maps to a host edge."""
    m = e.mapping
    if len(m) != task.order:
        return False
    if any(not (0 <= v < host.order) for v in m):
        return False
    if len(set(m)) != len(m):
        return False
    return all(host.has_edge(m[u], m[v]) for u, v in task.edges)


def longest_cycle(
    g: Graph, budget: SearchBudget = DEFAULT_BUDGET
) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Length of the longest simple cycle plus a witness (0, None if acyclic)."""
    status, length, witness, _ = _kernels.kernels_for(g.order).longest_cycle(
        g.order, g.adjacency_masks(), budget.max_nodes, budget.deadline()
    )
    if status == _kernels.BUDGET_EXCEEDED:
        raise BudgetExceeded("longest-cycle search ran out of node or time budget")
    return length, tuple(witness) if witness is not None else None


def max_star_order(g: Graph) -> int:
    """Largest p with K_{1,p-1} embeddable: one more than the max degree."""
    return 1 + g.max_degree()


def embeddable_ring_orders(
    g: Graph, up_to: int, budget: SearchBudget = DEFAULT_BUDGET
) -> Set[int]:
    """Orders p in [3, up_to] for which the cycle C_p embeds in g.

    Cycle lengths need not be contiguous, so each order gets its own exact
    search.  The node and time budget is shared across the whole sweep.
    """
    if up_to > g.order:
        raise InvalidParameter(f"up_to {up_to} exceeds graph order {g.order}")
    kern = _kernels.kernels_for(g.order)
    masks = g.adjacency_masks()
    deadline = budget.deadline()
    nodes_left = budget.max_nodes
    found = set()
    for p in range(3, up_to + 1):
        status, _, nodes = kern.cycle_with_length(g.order, masks, p, nodes_left, deadline)
        nodes_left -= nodes
        if status == _kernels.BUDGET_EXCEEDED:
            raise BudgetExceeded("ring-order sweep ran out of node or time budget")
        if status == _kernels.FOUND:
            found.add(p)
    return found
