"""Parallelism potentials and compatibility indexes.

The potential of a task family against a system graph at reachability d is
the largest task order embeddable in the d-th power of the system graph; the
compatibility index divides that by the system order, so 1 means the whole
machine is usable by the task.  Star potentials on hypercubes have a closed
form (the Hamming ball size sum(C(s, i), i=0..d)) and ring potentials on
hypercubes are certified by the reflected Gray cycle, so building the full
star/ring-versus-hypercube table never touches the exponential search engine.

Indexes are kept as exact rationals; display rounding is half-up to four
decimal places with a dot separator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .embedding import DEFAULT_BUDGET, SearchBudget, longest_cycle, max_star_order
from .errors import InvalidParameter, InvalidPotential
from .graph import Graph, graph_power
from .topologies import TopologySpec, canonical_hypercube_dim, gray_code_cycle

__all__ = [
    "CompatibilityReport",
    "hypercube_star_potential",
    "star_potential",
    "ring_potential",
    "ring_potential_certificate",
    "compatibility_index",
    "round_half_up",
    "compatibility_table",
    "make_report",
    "render_csv",
    "render_markdown",
    "render_text",
]

CSV_HEADER = "task,system,s_or_n,reach,n,p,c_exact_num,c_exact_den,c_rounded"


def hypercube_star_potential(s: int, reach: int) -> int:
    """Largest star order embeddable in the reach-th power of H_s.

    Exact integer sum(C(s, i), i=0..reach); terms with i > s vanish, so the
    value saturates at 2^s once reach >= s.
    """
    return sum(math.comb(s, i) for i in range(reach + 1))


def star_potential(system: Graph, reach: int) -> int:
    """Largest star order embeddable in the transformed system graph.

    A star K_{1,k} embeds iff some vertex of the power graph has degree >= k,
    so no search is needed.  Disconnected systems get the best component for
    free: the power transform never links separate components.
    """
    return max_star_order(graph_power(system, reach))


def ring_potential_certificate(
    system: Graph, reach: int, budget: SearchBudget = DEFAULT_BUDGET
) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Ring potential plus a witness cycle (None when the potential is 0).

    The potential is the longest simple cycle of the power graph, 0 when the
    host is acyclic (no ring task of any order fits).  Canonically labeled
    hypercubes skip the search: the Gray cycle is Hamiltonian in H_s and
    stays one in every power, so the potential is the full order 2^s.
    """
    if system.order < 3:
        raise InvalidParameter(f"ring potential needs a system of order >= 3, got {system.order}")
    if reach < 1:
        raise InvalidParameter(f"reachability must be >= 1, got {reach}")
    s = canonical_hypercube_dim(system)
    if s is not None and s >= 2:
        return system.order, gray_code_cycle(s)
    return longest_cycle(graph_power(system, reach), budget)


def ring_potential(system: Graph, reach: int, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Largest ring order embeddable in the transformed system graph."""
    return ring_potential_certificate(system, reach, budget)[0]


def compatibility_index(p: int, n: int) -> Fraction:
    """Exact index p/n; p = 0 (no task of the family fits) gives index 0."""
    if n < 1:
        raise InvalidPotential(f"system order must be positive, got {n}")
    if p < 0 or p > n:
        raise InvalidPotential(f"potential {p} outside 0..{n}")
    return Fraction(p, n)


def round_half_up(value: Fraction, places: int = 4) -> Decimal:
    """Round a nonnegative rational half-up to the given decimal places."""
    scale = 10**places
    q, r = divmod(value.numerator * scale, value.denominator)
    if 2 * r >= value.denominator:
        q += 1
    return Decimal(q).scaleb(-places)


@dataclass(frozen=True)
class CompatibilityReport:
    """One (system, task, reachability) cell: potential and index."""

    system: TopologySpec
    task_kind: str
    reach: int
    order_n: int
    potential_p: int
    index_exact: Fraction
    index_rounded: Decimal

    @property
    def size_label(self) -> int:
        """s for hypercubes, the order n otherwise (the table's column key)."""
        if self.system.kind == "hypercube":
            return self.system.parameter
        return self.order_n


def make_report(
    system: TopologySpec, task_kind: str, reach: int, order_n: int, potential_p: int
) -> CompatibilityReport:
    index = compatibility_index(potential_p, order_n)
    return CompatibilityReport(
        system=system,
        task_kind=task_kind,
        reach=reach,
        order_n=order_n,
        potential_p=potential_p,
        index_exact=index,
        index_rounded=round_half_up(index),
    )


def compatibility_table(
    s_values: Iterable[int], reach_values: Iterable[int], task_kind: str
) -> List[CompatibilityReport]:
    """Star/ring-versus-hypercube compatibility cells, reach-major, s ascending.

    Star cells use the closed-form potential; ring cells use the Gray-cycle
    certificate (2^s for s >= 2, and 0 for the cycle-free H_1).
    """
    ss = sorted(set(s_values))
    reaches = sorted(set(reach_values))
    if not ss or not reaches:
        raise InvalidParameter("empty dimension or reachability range")
    if ss[0] < 1 or reaches[0] < 1:
        raise InvalidParameter("dimensions and reachabilities must be >= 1")
    if task_kind not in ("star", "ring"):
        raise InvalidParameter(f"task kind must be 'star' or 'ring', got {task_kind!r}")
    reports = []
    for reach in reaches:
        for s in ss:
            n = 1 << s
            if task_kind == "star":
                p = hypercube_star_potential(s, reach)
            else:
                p = n if s >= 2 else 0
            spec = TopologySpec(kind="hypercube", parameter=s)
            reports.append(make_report(spec, task_kind, reach, n, p))
    return reports


def render_csv(reports: Sequence[CompatibilityReport]) -> str:
    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            f"{r.task_kind},{r.system.kind},{r.size_label},{r.reach},{r.order_n},"
            f"{r.potential_p},{r.index_exact.numerator},{r.index_exact.denominator},"
            f"{r.index_rounded}"
        )
    return "\n".join(lines) + "\n"


def render_text(reports: Sequence[CompatibilityReport]) -> str:
    lines = []
    for r in reports:
        lines.append(
            f"task={r.task_kind} system={r.system} reach={r.reach} "
            f"n={r.order_n} p={r.potential_p} c={r.index_rounded}"
        )
    return "\n".join(lines) + "\n"


def render_markdown(reports: Sequence[CompatibilityReport]) -> str:
    """Grid mirroring the reference layout: one row per reach, one column per s."""
    ss = sorted({r.size_label for r in reports})
    reaches = sorted({r.reach for r in reports})
    cells = {(r.reach, r.size_label): r for r in reports}
    task = reports[0].task_kind if reports else ""
    lines = [
        "| task=" + task + " | " + " | ".join(f"s={s}" for s in ss) + " |",
        "| --- |" + " --- |" * len(ss),
        "| n | " + " | ".join(str(cells[(reaches[0], s)].order_n) for s in ss) + " |",
    ]
    for reach in reaches:
        row = [f"{cells[(reach, s)].potential_p}; {cells[(reach, s)].index_rounded}" for s in ss]
        lines.append(f"| reach={reach} | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"
