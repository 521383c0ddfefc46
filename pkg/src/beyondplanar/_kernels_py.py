"""Pure-Python search kernels: max clique and conflict-bounded subset search.

Reference implementations of the two hot exact-search loops. A compiled
extension with the same two entry points is preferred at import time when
available (see _native); these versions use arbitrary-width int bitmasks,
so they have no size limit and serve as the correctness baseline.

Result convention shared by both kernels: (size, members, proven, nodes).
`proven` is False only when the node budget was exhausted; the best
solution found so far is still returned. When a `target` is given, the
search stops as soon as a solution of that size is found; if the caller
knows `target` is a valid upper bound, such a result is the exact optimum.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def max_clique(
    adj: list[int],
    budget: int = 10**8,
    target: int | None = None,
    floor_size: int = 0,
) -> tuple[int, list[int], bool, int]:
    """Largest clique of the graph given as per-vertex neighbor bitmasks.

    Branch and bound with a greedy-coloring upper bound; candidates are
    branched from the highest color class down. Cliques of size at most
    `floor_size` are ignored (size comes back as floor_size with empty
    members), which turns the search into an existence test for cliques
    larger than the floor.
    """
    n = len(adj)
    for v, mask in enumerate(adj):
        if mask >> n:
            raise ValueError(f"adjacency mask of vertex {v} has bits >= {n}")
        if mask & (1 << v):
            raise ValueError(f"vertex {v} is self-adjacent")

    best_size = floor_size
    best_mask = 0
    nodes = 0
    exhausted = False
    done = False

    # Relabel by descending degree: greedy coloring is tighter when dense
    # vertices are colored first.
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    radj = [0] * n
    for i, v in enumerate(order):
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            radj[i] |= 1 << pos[b.bit_length() - 1]

    def expand(r_size: int, r_mask: int, cand: int) -> None:
        nonlocal best_size, best_mask, nodes, exhausted, done
        nodes += 1
        if nodes >= budget:
            exhausted = True
            done = True
            return
        if cand == 0:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
                if target is not None and best_size >= target:
                    done = True
            return
        # Greedy coloring of the candidates; seq holds (vertex, color) in
        # coloring order, colors non-decreasing.
        seq: list[tuple[int, int]] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                seq.append((v, color))
                uncolored ^= b
                avail &= ~radj[v] & uncolored
        for v, c in reversed(seq):
            if r_size + c <= best_size:
                return
            b = 1 << v
            expand(r_size + 1, r_mask | b, cand & radj[v])
            if done:
                return
            cand ^= b

    expand(0, 0, (1 << n) - 1 if n else 0)

    members = sorted(order[i] for i in range(n) if best_mask >> i & 1)
    return best_size, members, not exhausted, nodes


def max_conflict_bounded_set(
    conflicts: list[int],
    k: int,
    cap: int | None = None,
    budget: int = 10**8,
    forced_mask: int = 0,
) -> tuple[int, list[int], bool, int]:
    """Largest index subset in which every member conflicts with at most k members.

    conflicts[i] is the bitmask of indices conflicting with i. `cap` is a
    caller-proven upper bound on the answer: it prunes, and reaching it
    stops the search with a proven optimum. Indices in forced_mask must be
    part of every considered subset (used for symmetry-reduced casework);
    the returned size is -1 if the forced set itself is infeasible.
    """
    d = len(conflicts)
    for i, mask in enumerate(conflicts):
        if mask >> d:
            raise ValueError(f"conflict mask of index {i} has bits >= {d}")
        if mask & (1 << i):
            raise ValueError(f"index {i} conflicts with itself")

    best_size = -1
    best_mask = 0
    nodes = 0
    exhausted = False
    done = False
    cnt = [0] * d  # conflicts with currently chosen, for every index
    suffix = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << i)

    def record(size: int, chosen: int) -> None:
        nonlocal best_size, best_mask, done
        if size > best_size:
            best_size = size
            best_mask = chosen
            if cap is not None and best_size >= cap:
                done = True

    def include(i: int, chosen: int, blocked: int) -> int:
        # Returns the updated blocked mask; cnt updates are undone by undo().
        bit = 1 << i
        m = conflicts[i]
        while m:
            b = m & -m
            m ^= b
            j = b.bit_length() - 1
            cnt[j] += 1
            if cnt[j] == k and chosen >> j & 1:
                blocked |= conflicts[j] & ~chosen  # j saturated: neighbors barred
            elif cnt[j] == k + 1 and not chosen >> j & 1:
                blocked |= b  # j itself can no longer fit
        if cnt[i] == k:
            blocked |= conflicts[i] & ~chosen  # i enters already saturated
        return blocked | bit

    def undo(i: int) -> None:
        m = conflicts[i]
        while m:
            b = m & -m
            m ^= b
            cnt[b.bit_length() - 1] -= 1

    def dfs(i: int, size: int, chosen: int, blocked: int) -> None:
        nonlocal nodes, exhausted, done
        nodes += 1
        if nodes >= budget:
            exhausted = True
            done = True
            return
        if i == d:
            record(size, chosen)
            return
        ub = size + (suffix[i] & ~blocked).bit_count()
        if cap is not None:
            ub = min(ub, cap)
        if ub <= best_size:
            return
        bit = 1 << i
        can_take = not blocked >> i & 1 and cnt[i] <= k
        if can_take:
            nb = include(i, chosen, blocked)
            dfs(i + 1, size + 1, chosen | bit, nb)
            undo(i)
            if done:
                return
        if forced_mask >> i & 1:
            return  # forced index: no exclude branch
        dfs(i + 1, size, chosen, blocked | bit)

    dfs(0, 0, 0, 0)
    members = [i for i in range(d) if best_mask >> i & 1]
    return best_size, members, not exhausted, nodes
