# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twin of ``pykernels``: machine-word bitmask search kernels.

Implements the identical algorithms with the identical candidate order and
node accounting, restricted to graphs of order <= 64 so adjacency masks fit
one uint64 each.  Results, witnesses included, match the pure backend
exactly; the dispatcher in ``topocompat._kernels`` routes larger graphs to
the pure implementation.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.string cimport memcpy

from time import monotonic

FOUND = 0
EXHAUSTED = 1
BUDGET_EXCEEDED = 2

cdef extern from *:
    """
    #define tc_ctz64(x) ((int)__builtin_ctzll(x))
    #define tc_popcount64(x) ((int)__builtin_popcountll(x))
    """
    int tc_ctz64(uint64_t) nogil
    int tc_popcount64(uint64_t) nogil

cdef enum:
    R_FOUND = 0
    R_EXHAUSTED = 1
    R_BUDGET = 2

cdef enum:
    C_CONT = 0
    C_STOP = 1
    C_BUDGET = 2

cdef enum:
    MAXN = 64

cdef int64_t NODE_CAP = <int64_t>1 << 62


cdef struct Budget:
    int64_t max_nodes
    int64_t nodes
    double deadline


cdef inline bint _budget_hit(Budget* b):
    b.nodes += 1
    if b.nodes > b.max_nodes:
        return True
    if (b.nodes & 4095) == 0 and b.deadline > 0:
        if monotonic() > b.deadline:
            return True
    return False


cdef inline int64_t _clamp_nodes(object max_nodes):
    if max_nodes > NODE_CAP:
        return NODE_CAP
    return <int64_t>max_nodes


cdef inline uint64_t _all_mask(int n):
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << n) - 1


cdef inline uint64_t _mask_above(int a, int n):
    if a + 1 >= n:
        return 0
    return _all_mask(n) & (<uint64_t>0xFFFFFFFFFFFFFFFF << (a + 1))


# -- subgraph isomorphism ---------------------------------------------------

cdef struct SubState:
    int task_n
    uint64_t h_adj[MAXN]
    int h_deg[MAXN]
    int need_deg[MAXN]        # task degree of order[i], indexed by position
    uint64_t prev_mask[MAXN]  # earlier positions adjacent to order[i]
    int img[MAXN]             # chosen host image, indexed by position
    uint64_t all_hosts
    Budget b


cdef int _place(SubState* st, int i, uint64_t used):
    cdef uint64_t cand = st.all_hosts & ~used
    cdef uint64_t pm = st.prev_mask[i]
    cdef int j, v, status
    cdef int need = st.need_deg[i]
    while pm:
        j = tc_ctz64(pm)
        pm &= pm - 1
        cand &= st.h_adj[st.img[j]]
    while cand:
        v = tc_ctz64(cand)
        cand &= cand - 1
        if st.h_deg[v] < need:
            continue
        if _budget_hit(&st.b):
            return R_BUDGET
        st.img[i] = v
        if i + 1 == st.task_n:
            return R_FOUND
        status = _place(st, i + 1, used | (<uint64_t>1 << v))
        if status != R_EXHAUSTED:
            return status
    return R_EXHAUSTED


def subgraph_search(int task_n, task_adj, int host_n, host_adj, order,
                    max_nodes, double deadline):
    if task_n > MAXN or host_n > MAXN:
        raise ValueError("compiled kernel handles orders <= 64 only")
    if task_n > host_n:
        return EXHAUSTED, None, 0
    cdef SubState st
    cdef uint64_t t_adj[MAXN]
    cdef int ord_c[MAXN]
    cdef int i, j, u
    st.task_n = task_n
    st.all_hosts = _all_mask(host_n)
    st.b.max_nodes = _clamp_nodes(max_nodes)
    st.b.nodes = 0
    st.b.deadline = deadline
    for u in range(task_n):
        t_adj[u] = <uint64_t>task_adj[u]
        ord_c[u] = order[u]
    for i in range(host_n):
        st.h_adj[i] = <uint64_t>host_adj[i]
        st.h_deg[i] = tc_popcount64(st.h_adj[i])
    for i in range(task_n):
        u = ord_c[i]
        st.need_deg[i] = tc_popcount64(t_adj[u])
        st.prev_mask[i] = 0
        for j in range(i):
            if (t_adj[u] >> ord_c[j]) & 1:
                st.prev_mask[i] |= <uint64_t>1 << j
    cdef int status = _place(&st, 0, 0)
    if status == R_FOUND:
        mapping = [0] * task_n
        for i in range(task_n):
            mapping[ord_c[i]] = st.img[i]
        return FOUND, mapping, st.b.nodes
    if status == R_BUDGET:
        return BUDGET_EXCEEDED, None, st.b.nodes
    return EXHAUSTED, None, st.b.nodes


# -- simple-cycle searches --------------------------------------------------

cdef struct CycState:
    int n
    uint64_t adj[MAXN]
    int path[MAXN]
    int plen
    int anchor
    uint64_t a_bit
    uint64_t allowed
    int best_len
    int best[MAXN]
    int target_len
    Budget b


cdef uint64_t _reach_from(CycState* st, int head, uint64_t free):
    cdef uint64_t domain = free | st.a_bit
    cdef uint64_t reach = 0
    cdef uint64_t frontier = st.adj[head] & domain
    cdef uint64_t grow, expand
    cdef int v
    while frontier:
        reach |= frontier
        grow = 0
        expand = frontier & free
        while expand:
            v = tc_ctz64(expand)
            expand &= expand - 1
            grow |= st.adj[v]
        frontier = grow & domain & ~reach
    return reach


cdef int _visit_longest(CycState* st, int head, uint64_t visited):
    if _budget_hit(&st.b):
        return C_BUDGET
    cdef int plen = st.plen
    if plen >= 3 and (st.adj[head] >> st.anchor) & 1 and plen > st.best_len:
        st.best_len = plen
        memcpy(st.best, st.path, plen * sizeof(int))
        if st.best_len == st.n:
            return C_STOP
    cdef uint64_t free = st.allowed & ~visited
    cdef uint64_t reach = _reach_from(st, head, free)
    if not (reach & st.a_bit):
        return C_CONT
    if plen + tc_popcount64(reach & free) <= st.best_len:
        return C_CONT
    cdef uint64_t ext = st.adj[head] & free
    cdef int w, status
    while ext:
        w = tc_ctz64(ext)
        ext &= ext - 1
        st.path[st.plen] = w
        st.plen += 1
        status = _visit_longest(st, w, visited | (<uint64_t>1 << w))
        st.plen -= 1
        if status != C_CONT:
            return status
    return C_CONT


def longest_cycle(int n, adj, max_nodes, double deadline):
    if n > MAXN:
        raise ValueError("compiled kernel handles orders <= 64 only")
    cdef CycState st
    cdef int a, i, status
    st.n = n
    st.best_len = 0
    st.b.max_nodes = _clamp_nodes(max_nodes)
    st.b.nodes = 0
    st.b.deadline = deadline
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
    for a in range(n):
        if n - a <= st.best_len:
            break
        st.anchor = a
        st.a_bit = <uint64_t>1 << a
        st.allowed = _mask_above(a, n)
        if tc_popcount64(st.adj[a] & st.allowed) < 2:
            continue
        st.path[0] = a
        st.plen = 1
        status = _visit_longest(&st, a, st.a_bit)
        if status == C_BUDGET:
            return BUDGET_EXCEEDED, 0, None, st.b.nodes
        if status == C_STOP:
            break
    witness = [st.best[i] for i in range(st.best_len)] if st.best_len else None
    return EXHAUSTED, st.best_len, witness, st.b.nodes


cdef int _visit_exact(CycState* st, int head, uint64_t visited):
    if _budget_hit(&st.b):
        return C_BUDGET
    cdef int plen = st.plen
    if plen == st.target_len:
        if (st.adj[head] >> st.anchor) & 1:
            return C_STOP
        return C_CONT
    cdef uint64_t free = st.allowed & ~visited
    cdef uint64_t reach = _reach_from(st, head, free)
    if not (reach & st.a_bit):
        return C_CONT
    if plen + tc_popcount64(reach & free) < st.target_len:
        return C_CONT
    cdef uint64_t ext = st.adj[head] & free
    cdef int w, status
    while ext:
        w = tc_ctz64(ext)
        ext &= ext - 1
        st.path[st.plen] = w
        st.plen += 1
        status = _visit_exact(st, w, visited | (<uint64_t>1 << w))
        if status != C_CONT:
            return status
        st.plen -= 1
    return C_CONT


def cycle_with_length(int n, adj, int k, max_nodes, double deadline):
    if n > MAXN:
        raise ValueError("compiled kernel handles orders <= 64 only")
    if k < 3 or k > n:
        return EXHAUSTED, None, 0
    cdef CycState st
    cdef int a, i, status
    st.n = n
    st.target_len = k
    st.b.max_nodes = _clamp_nodes(max_nodes)
    st.b.nodes = 0
    st.b.deadline = deadline
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
    for a in range(n - k + 1):
        st.anchor = a
        st.a_bit = <uint64_t>1 << a
        st.allowed = _mask_above(a, n)
        if tc_popcount64(st.adj[a] & st.allowed) < 2:
            continue
        st.path[0] = a
        st.plen = 1
        status = _visit_exact(&st, a, st.a_bit)
        if status == C_BUDGET:
            return BUDGET_EXCEEDED, None, st.b.nodes
        if status == C_STOP:
            return FOUND, [st.path[i] for i in range(st.plen)], st.b.nodes
    return EXHAUSTED, None, st.b.nodes
