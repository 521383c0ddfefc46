# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled search kernels: max clique and conflict-bounded subset search.

Exact mirror of _kernels_py (same signatures, same branch order, same
results); bitsets are uint64 words instead of Python ints. The subset
kernel's fast path handles up to 64 candidates, which covers convex
instances up to n = 11 diagonals-wise; larger inputs delegate to the pure
implementation.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

from . import _kernels_py

cdef extern from *:
    """
    #include <stdint.h>
    static inline int bp_popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int bp_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int bp_popcount64(unsigned long long x) nogil
    int bp_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

IMPLEMENTATION = "compiled"


cdef struct CliqueSearch:
    int V, W
    u64* adj          # V * W words
    u64* cand_stack   # (V + 1) * W words
    u64* avail_stack  # (V + 1) * W words
    int* seq_v        # (V + 1) * V
    int* seq_c        # (V + 1) * V
    int* rstack       # V
    int* best_members # V
    int best_size
    int floor_size
    int target
    bint has_target
    long long nodes
    long long budget
    bint exhausted
    bint done


cdef inline bint _words_empty(u64* w, int n) nogil:
    cdef int i
    for i in range(n):
        if w[i]:
            return False
    return True


cdef void _clique_expand(CliqueSearch* s, int r_size, int depth) nogil:
    cdef u64* cand = s.cand_stack + depth * s.W
    cdef u64* child
    cdef u64* uncolored
    cdef u64* avail
    cdef int W = s.W
    cdef int i, w, v, color, seq_len, idx, c
    cdef u64 word

    s.nodes += 1
    if s.nodes >= s.budget:
        s.exhausted = True
        s.done = True
        return
    if _words_empty(cand, W):
        if r_size > s.best_size:
            s.best_size = r_size
            for i in range(r_size):
                s.best_members[i] = s.rstack[i]
            if s.has_target and s.best_size >= s.target:
                s.done = True
        return

    # Greedy coloring: colors assigned in non-decreasing order, vertices
    # taken lowest-index first within each color class.
    uncolored = s.cand_stack + (depth + 1) * W
    avail = s.avail_stack + depth * W
    memcpy(uncolored, cand, W * sizeof(u64))
    seq_len = 0
    color = 0
    while not _words_empty(uncolored, W):
        color += 1
        memcpy(avail, uncolored, W * sizeof(u64))
        while True:
            v = -1
            for w in range(W):
                word = avail[w]
                if word:
                    v = w * 64 + bp_ctz64(word)
                    break
            if v < 0:
                break
            s.seq_v[depth * s.V + seq_len] = v
            s.seq_c[depth * s.V + seq_len] = color
            seq_len += 1
            uncolored[v >> 6] &= ~(<u64>1 << (v & 63))
            for w in range(W):
                avail[w] &= ~s.adj[v * W + w] & uncolored[w]

    child = s.cand_stack + (depth + 1) * W
    for idx in range(seq_len - 1, -1, -1):
        v = s.seq_v[depth * s.V + idx]
        c = s.seq_c[depth * s.V + idx]
        if r_size + c <= s.best_size:
            return
        for w in range(W):
            child[w] = cand[w] & s.adj[v * W + w]
        s.rstack[r_size] = v
        _clique_expand(s, r_size + 1, depth + 1)
        if s.done:
            return
        cand[v >> 6] &= ~(<u64>1 << (v & 63))


def max_clique(adj, long long budget=10**8, target=None, int floor_size=0):
    """Largest clique of the graph given as per-vertex neighbor bitmasks.

    Same contract as the pure implementation: branch and bound with a
    greedy-coloring bound, floor_size hides small cliques, target stops
    the search early once reached.
    """
    cdef int n = len(adj)
    cdef int i, j, w
    cdef object mask
    for i in range(n):
        mask = adj[i]
        if mask >> n:
            raise ValueError(f"adjacency mask of vertex {i} has bits >= {n}")
        if (mask >> i) & 1:
            raise ValueError(f"vertex {i} is self-adjacent")

    order = sorted(range(n), key=lambda v: (-int(adj[v]).bit_count(), v))
    cdef dict pos = {v: k for k, v in enumerate(order)}

    cdef int W = (n + 63) // 64 if n else 1
    cdef CliqueSearch s
    s.V = n
    s.W = W
    s.best_size = floor_size
    s.floor_size = floor_size
    s.has_target = target is not None
    s.target = int(target) if target is not None else 0
    s.nodes = 0
    s.budget = budget
    s.exhausted = False
    s.done = False
    s.adj = <u64*>malloc(max(n, 1) * W * sizeof(u64))
    s.cand_stack = <u64*>malloc((n + 2) * W * sizeof(u64))
    s.avail_stack = <u64*>malloc((n + 2) * W * sizeof(u64))
    s.seq_v = <int*>malloc(max((n + 1) * n, 1) * sizeof(int))
    s.seq_c = <int*>malloc(max((n + 1) * n, 1) * sizeof(int))
    s.rstack = <int*>malloc(max(n, 1) * sizeof(int))
    s.best_members = <int*>malloc(max(n, 1) * sizeof(int))
    if not (s.adj and s.cand_stack and s.avail_stack and s.seq_v and s.seq_c and s.rstack and s.best_members):
        _clique_free(&s)
        raise MemoryError()

    try:
        memset(s.adj, 0, max(n, 1) * W * sizeof(u64))
        for i in range(n):
            mask = adj[order[i]]
            while mask:
                b = mask & -mask
                mask ^= b
                j = pos[b.bit_length() - 1]
                s.adj[i * W + (j >> 6)] |= <u64>1 << (j & 63)

        memset(s.cand_stack, 0, W * sizeof(u64))
        for i in range(n):
            s.cand_stack[i >> 6] |= <u64>1 << (i & 63)

        _clique_expand(&s, 0, 0)

        found = s.best_size if s.best_size > floor_size else 0
        members = sorted(order[s.best_members[i]] for i in range(found))
        return (s.best_size, members, not s.exhausted, s.nodes)
    finally:
        _clique_free(&s)


cdef void _clique_free(CliqueSearch* s):
    free(s.adj)
    free(s.cand_stack)
    free(s.avail_stack)
    free(s.seq_v)
    free(s.seq_c)
    free(s.rstack)
    free(s.best_members)


cdef struct SubsetSearch:
    int D
    int k
    u64* conflicts
    int* cnt
    u64* suffix
    u64 forced
    int best_size
    u64 best_mask
    bint has_cap
    int cap
    long long nodes
    long long budget
    bint exhausted
    bint done


cdef void _subset_dfs(SubsetSearch* s, int i, int size, u64 chosen, u64 blocked) nogil:
    cdef int ub, j
    cdef u64 bit, m, b, nb

    s.nodes += 1
    if s.nodes >= s.budget:
        s.exhausted = True
        s.done = True
        return
    if i == s.D:
        if size > s.best_size:
            s.best_size = size
            s.best_mask = chosen
            if s.has_cap and s.best_size >= s.cap:
                s.done = True
        return
    ub = size + bp_popcount64(s.suffix[i] & ~blocked)
    if s.has_cap and ub > s.cap:
        ub = s.cap
    if ub <= s.best_size:
        return

    bit = <u64>1 << i
    cdef bint can_take = not (blocked >> i) & 1 and s.cnt[i] <= s.k
    if can_take:
        nb = blocked
        m = s.conflicts[i]
        while m:
            b = m & (~m + 1)
            m ^= b
            j = bp_ctz64(b)
            s.cnt[j] += 1
            if s.cnt[j] == s.k and (chosen >> j) & 1:
                nb |= s.conflicts[j] & ~chosen
            elif s.cnt[j] == s.k + 1 and not (chosen >> j) & 1:
                nb |= b
        if s.cnt[i] == s.k:
            nb |= s.conflicts[i] & ~chosen
        _subset_dfs(s, i + 1, size + 1, chosen | bit, nb | bit)
        m = s.conflicts[i]
        while m:
            b = m & (~m + 1)
            m ^= b
            s.cnt[bp_ctz64(b)] -= 1
        if s.done:
            return
    if (s.forced >> i) & 1:
        return
    _subset_dfs(s, i + 1, size, chosen, blocked | bit)


def max_conflict_bounded_set(conflicts, int k, cap=None, long long budget=10**8, forced_mask=0):
    """Largest index subset whose members each conflict with at most k members.

    Same contract as the pure implementation; inputs wider than 64 indices
    are delegated to it.
    """
    cdef int d = len(conflicts)
    cdef int i
    cdef object mask
    for i in range(d):
        mask = conflicts[i]
        if mask >> d:
            raise ValueError(f"conflict mask of index {i} has bits >= {d}")
        if (mask >> i) & 1:
            raise ValueError(f"index {i} conflicts with itself")
    if d > 64:
        return _kernels_py.max_conflict_bounded_set(conflicts, k, cap=cap, budget=budget, forced_mask=forced_mask)

    cdef SubsetSearch s
    s.D = d
    s.k = k
    s.forced = <u64>int(forced_mask)
    s.best_size = -1
    s.best_mask = 0
    s.has_cap = cap is not None
    s.cap = int(cap) if cap is not None else 0
    s.nodes = 0
    s.budget = budget
    s.exhausted = False
    s.done = False
    s.conflicts = <u64*>malloc(max(d, 1) * sizeof(u64))
    s.cnt = <int*>malloc(max(d, 1) * sizeof(int))
    s.suffix = <u64*>malloc((d + 1) * sizeof(u64))
    if not (s.conflicts and s.cnt and s.suffix):
        free(s.conflicts)
        free(s.cnt)
        free(s.suffix)
        raise MemoryError()
    try:
        for i in range(d):
            s.conflicts[i] = <u64>int(conflicts[i])
            s.cnt[i] = 0
        s.suffix[d] = 0
        for i in range(d - 1, -1, -1):
            s.suffix[i] = s.suffix[i + 1] | (<u64>1 << i)

        _subset_dfs(&s, 0, 0, 0, 0)

        members = [i for i in range(d) if (s.best_mask >> i) & 1]
        return (s.best_size, members, not s.exhausted, s.nodes)
    finally:
        free(s.conflicts)
        free(s.cnt)
        free(s.suffix)
