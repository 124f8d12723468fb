"""Pure-Python search and verification kernels.

Reference implementations with the same contracts as the compiled module
``_speedups``.  All take flat CSR arrays (indptr, neighbors, edge ids) plus
an edge color array; vertices and colors are small ints.

Two path-search regimes exist.  The DP regime runs BFS over
(vertex, used-color-mask) states: any distinct-color WALK contains a
distinct-color PATH (delete the cycles), so state reachability decides path
existence while keeping the state space at n * 2^num_colors.  The DFS
regime backtracks over simple paths carrying the used-color set and is the
fallback when the mask space is too large.

Exploration orders are fixed (FIFO queue, CSR neighbors ascending, colors
ascending) so both backends report identical witnesses and colorings.
"""

from __future__ import annotations

from collections import deque

BACKEND_NAME = "pure"


def rainbow_path_dp(n, indptr, nbrs, eids, colors, num_colors, s, t):
    """Rainbow s-t walk via subset DP; returns vertex list or None.

    The result may revisit vertices; its colors are pairwise distinct, so
    cutting cycles (done by the caller) leaves a rainbow simple path."""
    if s == t:
        return [s]
    start = s  # state key = mask * n + v
    visited = {start}
    parent: dict[int, int] = {}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        mask, v = divmod(key, n)
        base = indptr[v]
        for i in range(base, indptr[v + 1]):
            c = colors[eids[i]]
            bit = 1 << c
            if mask & bit:
                continue
            w = nbrs[i]
            nkey = (mask | bit) * n + w
            if nkey in visited:
                continue
            visited.add(nkey)
            parent[nkey] = key
            if w == t:
                path = [w]
                while nkey != start:
                    nkey = parent[nkey]
                    path.append(nkey % n)
                path.reverse()
                return path
            queue.append(nkey)
    return None


def rainbow_path_dfs(n, indptr, nbrs, eids, colors, num_colors, s, t):
    """Rainbow s-t path via backtracking over simple paths."""
    if s == t:
        return [s]
    on_path = bytearray(n)
    used = bytearray(num_colors)
    path = [s]
    on_path[s] = 1

    def go(v: int) -> bool:
        for i in range(indptr[v], indptr[v + 1]):
            w = nbrs[i]
            if on_path[w]:
                continue
            c = colors[eids[i]]
            if used[c]:
                continue
            path.append(w)
            if w == t:
                return True
            on_path[w] = 1
            used[c] = 1
            if go(w):
                return True
            used[c] = 0
            on_path[w] = 0
            path.pop()
        return False

    return path if go(s) else None


def rainbow_reach_dp(n, indptr, nbrs, eids, colors, num_colors, s):
    """Vertices reachable from s by a rainbow path (DP regime)."""
    reached = bytearray(n)
    reached[s] = 1
    count = 1
    visited = {s}
    queue = deque([s])
    while queue and count < n:
        key = queue.popleft()
        mask, v = divmod(key, n)
        for i in range(indptr[v], indptr[v + 1]):
            c = colors[eids[i]]
            bit = 1 << c
            if mask & bit:
                continue
            nkey = (mask | bit) * n + nbrs[i]
            if nkey in visited:
                continue
            visited.add(nkey)
            w = nbrs[i]
            if not reached[w]:
                reached[w] = 1
                count += 1
                if count == n:
                    break
            queue.append(nkey)
    return reached


def rainbow_reach_dfs(n, indptr, nbrs, eids, colors, num_colors, s):
    """Vertices reachable from s by a rainbow path (DFS enumeration)."""
    reached = bytearray(n)
    reached[s] = 1
    on_path = bytearray(n)
    on_path[s] = 1
    used = bytearray(num_colors)
    state = {"count": 1}

    def go(v: int) -> bool:
        # returns True once every vertex is reached (global cutoff)
        for i in range(indptr[v], indptr[v + 1]):
            w = nbrs[i]
            if on_path[w]:
                continue
            c = colors[eids[i]]
            if used[c]:
                continue
            if not reached[w]:
                reached[w] = 1
                state["count"] += 1
                if state["count"] == n:
                    return True
            on_path[w] = 1
            used[c] = 1
            done = go(w)
            used[c] = 0
            on_path[w] = 0
            if done:
                return True
        return False

    go(s)
    return reached


def search_coloring(n, indptr, nbrs, eids, m, k, fixed, pairs, canonical):
    """Exact search for an edge coloring with <= k colors connecting pairs.

    fixed: length-m list, -1 marks a searchable edge, other entries are
    pinned colors in [0, k).  pairs: (u, v) tuples that must be joined by a
    rainbow path.  canonical: restrict edge i to color ids at most one past
    the max used on earlier searched edges (valid only with no pinned
    colors).  Returns the first coloring found in ascending branch order,
    or None.

    Pruning: after each assignment, every still-active pair is checked for
    optimistic feasibility with a BFS over (vertex, mask, wildcards) states
    where unassigned edges count as wildcards and popcount(mask) + wildcards
    is capped at k.  An assignment can only shrink the option set, so an
    infeasible pair stays infeasible in the whole subtree.
    """
    colors = list(fixed)
    free = [e for e in range(m) if colors[e] == -1]
    kp1 = k + 1

    def feasible(src: int, dst: int) -> int:
        # 0 = unreachable (prune), 1 = reachable using wildcards,
        # 2 = reachable through fully assigned edges (pair satisfied)
        start = src  # key = (mask * kp1 + w) * n + v
        seen = {start}
        queue = deque([start])
        while queue:
            key = queue.popleft()
            rest, v = divmod(key, n)
            mask, w = divmod(rest, kp1)
            length = mask.bit_count() + w
            if length >= k:
                continue
            for i in range(indptr[v], indptr[v + 1]):
                c = colors[eids[i]]
                if c < 0:
                    nmask, nw = mask, w + 1
                else:
                    bit = 1 << c
                    if mask & bit:
                        continue
                    nmask, nw = mask | bit, w
                u2 = nbrs[i]
                nkey = (nmask * kp1 + nw) * n + u2
                if nkey in seen:
                    continue
                if u2 == dst:
                    return 2 if nw == 0 else 1
                seen.add(nkey)
                queue.append(nkey)
        return 0

    def check(active):
        # None = some pair unreachable; else pairs still needing attention
        rest = []
        for u, v in active:
            r = feasible(u, v)
            if r == 0:
                return None
            if r == 1:
                rest.append((u, v))
        return rest

    # single-edge paths are rainbow under any coloring
    adjacent = set()
    for v in range(n):
        for i in range(indptr[v], indptr[v + 1]):
            adjacent.add((v, nbrs[i]))
    active = sorted(
        {(u, v) if u < v else (v, u) for u, v in pairs if (u, v) not in adjacent}
    )
    active = check(active)
    if active is None:
        return None
    if not free:
        return colors if not active else None

    def go(pos: int, max_used: int, act) -> bool:
        e = free[pos]
        cap = k - 1
        if canonical:
            cap = min(cap, max_used + 1)
        last = pos + 1 == len(free)
        for c in range(cap + 1):
            colors[e] = c
            nact = check(act)
            if nact is not None:
                if last:
                    if not nact:
                        return True
                elif go(pos + 1, max(max_used, c), nact):
                    return True
        colors[e] = -1
        return False

    if go(0, -1, active):
        return colors
    return None
