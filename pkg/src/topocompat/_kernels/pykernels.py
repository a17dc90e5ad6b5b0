"""Pure-Python search kernels over bitmask adjacency.

These are the hot inner loops of the package: backtracking subgraph
isomorphism and exact simple-cycle search.  Adjacency arrives as one int
bitmask per vertex; arbitrary-width Python ints make the same code correct
for any graph order.  The compiled twin in ``_ckernels`` implements the
identical algorithms over machine words (order <= 64) with the identical
candidate order and node accounting, so the two backends return identical
results, witnesses included.

Status codes: FOUND (witness returned), EXHAUSTED (search space fully
explored), BUDGET_EXCEEDED (node or time cap hit; result unknown).

Node accounting: subgraph search counts one node per attempted candidate
assignment; cycle searches count one node per vertex pushed on the path.
Deadlines are absolute ``time.monotonic()`` values checked every 4096 nodes
(0 disables the check).
"""

from __future__ import annotations

from time import monotonic
from typing import List, Optional, Sequence, Tuple

FOUND = 0
EXHAUSTED = 1
BUDGET_EXCEEDED = 2

_TIME_CHECK_MASK = 4095


def subgraph_search(
    task_n: int,
    task_adj: Sequence[int],
    host_n: int,
    host_adj: Sequence[int],
    order: Sequence[int],
    max_nodes: int,
    deadline: float,
) -> Tuple[int, Optional[List[int]], int]:
    """Find one injective edge-preserving map of task into host.

    ``order`` fixes the task-vertex assignment order.  Candidates for each
    task vertex are host vertices adjacent to the images of all its already
    assigned neighbors (all unused hosts when none are assigned yet), filtered
    by host degree >= task degree, tried in ascending id order.
    """
    if task_n > host_n:
        return EXHAUSTED, None, 0

    task_deg = [task_adj[u].bit_count() for u in range(task_n)]
    host_deg = [host_adj[v].bit_count() for v in range(host_n)]
    prev_pos = []
    for i in range(task_n):
        u = order[i]
        prev_pos.append([j for j in range(i) if (task_adj[u] >> order[j]) & 1])
    all_hosts = (1 << host_n) - 1
    mapping = [-1] * task_n
    nodes = 0

    def place(i: int, used: int) -> int:
        nonlocal nodes
        u = order[i]
        cand = all_hosts & ~used
        for j in prev_pos[i]:
            cand &= host_adj[mapping[order[j]]]
        need = task_deg[u]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if host_deg[v] < need:
                continue
            nodes += 1
            if nodes > max_nodes:
                return BUDGET_EXCEEDED
            if (nodes & _TIME_CHECK_MASK) == 0 and deadline > 0 and monotonic() > deadline:
                return BUDGET_EXCEEDED
            mapping[u] = v
            if i + 1 == task_n:
                return FOUND
            status = place(i + 1, used | (1 << v))
            if status != EXHAUSTED:
                return status
            mapping[u] = -1
        return EXHAUSTED

    status = place(0, 0)
    if status == FOUND:
        return FOUND, mapping, nodes
    return status, None, nodes


def _reachable(head: int, adj: Sequence[int], free: int, target_bit: int) -> int:
    """Vertices reachable from head through ``free``; target is a terminal."""
    domain = free | target_bit
    reach = 0
    frontier = adj[head] & domain
    while frontier:
        reach |= frontier
        grow = 0
        expand = frontier & free
        while expand:
            v = (expand & -expand).bit_length() - 1
            expand &= expand - 1
            grow |= adj[v]
        frontier = grow & domain & ~reach
    return reach


def longest_cycle(
    n: int,
    adj: Sequence[int],
    max_nodes: int,
    deadline: float,
) -> Tuple[int, int, Optional[List[int]], int]:
    """Length and witness of the longest simple cycle (0, None if acyclic).

    Each candidate cycle is searched from its smallest vertex (the anchor):
    paths start at the anchor and run through larger ids only.  Extension is
    pruned when the anchor becomes unreachable from the path head through
    free vertices, or when path length plus reachable-free count cannot beat
    the best cycle found so far.
    """
    best_len = 0
    best: Optional[List[int]] = None
    nodes = 0
    path: List[int] = []

    _CONT, _STOP, _BUDGET = 0, 1, 2

    def visit(head: int, visited: int, a: int, a_bit: int, allowed: int) -> int:
        nonlocal nodes, best_len, best
        nodes += 1
        if nodes > max_nodes:
            return _BUDGET
        if (nodes & _TIME_CHECK_MASK) == 0 and deadline > 0 and monotonic() > deadline:
            return _BUDGET
        plen = len(path)
        if plen >= 3 and (adj[head] >> a) & 1 and plen > best_len:
            best_len = plen
            best = path.copy()
            if best_len == n:
                return _STOP
        free = allowed & ~visited
        reach = _reachable(head, adj, free, a_bit)
        if not (reach & a_bit):
            return _CONT
        if plen + (reach & free).bit_count() <= best_len:
            return _CONT
        ext = adj[head] & free
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            path.append(w)
            status = visit(w, visited | (1 << w), a, a_bit, allowed)
            path.pop()
            if status != _CONT:
                return status
        return _CONT

    for a in range(n):
        if n - a <= best_len:
            break
        a_bit = 1 << a
        allowed = ((1 << n) - 1) & ~((a_bit << 1) - 1)
        if (adj[a] & allowed).bit_count() < 2:
            continue
        path.append(a)
        status = visit(a, a_bit, a, a_bit, allowed)
        path.pop()
        if status == _BUDGET:
            return BUDGET_EXCEEDED, 0, None, nodes
        if status == _STOP:
            break
    return EXHAUSTED, best_len, best, nodes


def cycle_with_length(
    n: int,
    adj: Sequence[int],
    k: int,
    max_nodes: int,
    deadline: float,
) -> Tuple[int, Optional[List[int]], int]:
    """Find one simple cycle of length exactly k (k >= 3), or prove none."""
    if k < 3 or k > n:
        return EXHAUSTED, None, 0
    nodes = 0
    path: List[int] = []

    _CONT, _STOP, _BUDGET = 0, 1, 2

    def visit(head: int, visited: int, a: int, a_bit: int, allowed: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            return _BUDGET
        if (nodes & _TIME_CHECK_MASK) == 0 and deadline > 0 and monotonic() > deadline:
            return _BUDGET
        plen = len(path)
        if plen == k:
            return _STOP if (adj[head] >> a) & 1 else _CONT
        free = allowed & ~visited
        reach = _reachable(head, adj, free, a_bit)
        if not (reach & a_bit):
            return _CONT
        if plen + (reach & free).bit_count() < k:
            return _CONT
        ext = adj[head] & free
        while ext:
            w = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            path.append(w)
            status = visit(w, visited | (1 << w), a, a_bit, allowed)
            if status != _CONT:
                return status
            path.pop()
        return _CONT

    for a in range(n - k + 1):
        a_bit = 1 << a
        allowed = ((1 << n) - 1) & ~((a_bit << 1) - 1)
        if (adj[a] & allowed).bit_count() < 2:
            continue
        path.clear()
        path.append(a)
        status = visit(a, a_bit, a, a_bit, allowed)
        if status == _BUDGET:
            return BUDGET_EXCEEDED, None, nodes
        if status == _STOP:
            return FOUND, path.copy(), nodes
    return EXHAUSTED, None, nodes
