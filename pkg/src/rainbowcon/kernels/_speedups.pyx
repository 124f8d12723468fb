# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search and verification kernels.

Contracts and exploration orders match kernels.pure exactly (FIFO BFS, CSR
neighbors ascending, colors ascending), so both backends return identical
witnesses and colorings.  Small state spaces use flat C arrays; large ones
fall back to Python sets inside the same routines.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from collections import deque

BACKEND_NAME = "speedups"

# flat visited arrays are only worth it while they stay small
cdef long long FLAT_LIMIT = 1 << 22


cdef inline long long _flat_states(int n, int num_colors):
    # -1 when the (vertex, mask) space is too big for flat arrays
    if num_colors >= 40 or n <= 0:
        return -1
    if (<long long> n) > (FLAT_LIMIT >> num_colors):
        return -1
    return (<long long> n) << num_colors


cdef inline int _popcount(long long x):
    cdef int out = 0
    while x:
        x &= x - 1
        out += 1
    return out


def rainbow_path_dp(n, indptr, nbrs, eids, colors, num_colors, s, t):
    """Rainbow s-t walk via subset DP; returns vertex list or None.

    The result may revisit vertices; its colors are pairwise distinct, so
    cutting cycles (done by the caller) leaves a rainbow simple path."""
    if s == t:
        return [s]
    cdef int[:] ip = indptr
    cdef int[:] nb = nbrs
    cdef int[:] ei = eids
    cdef int[:] col = colors
    cdef int cn = n, cs = s, ct = t
    cdef long long total = _flat_states(cn, num_colors)
    cdef long long key, nkey, mask, bit
    cdef int v, w, i, c
    cdef long long *parent
    cdef long long *queue
    cdef long long head = 0, tail = 0
    if total > 0:
        parent = <long long *> PyMem_Malloc(total * sizeof(long long))
        queue = <long long *> PyMem_Malloc(total * sizeof(long long))
        if parent == NULL or queue == NULL:
            PyMem_Free(parent)
            PyMem_Free(queue)
            raise MemoryError()
        try:
            for key in range(total):
                parent[key] = -2  # -2 unvisited, -1 start marker
            parent[cs] = -1
            queue[tail] = cs
            tail += 1
            while head < tail:
                key = queue[head]
                head += 1
                v = <int> (key % cn)
                mask = key / cn
                for i in range(ip[v], ip[v + 1]):
                    c = col[ei[i]]
                    bit = 1LL << c
                    if mask & bit:
                        continue
                    w = nb[i]
                    nkey = (mask | bit) * cn + w
                    if parent[nkey] != -2:
                        continue
                    parent[nkey] = key
                    if w == ct:
                        path = [w]
                        while nkey != cs:
                            nkey = parent[nkey]
                            path.append(<int> (nkey % cn))
                        path.reverse()
                        return path
                    queue[tail] = nkey
                    tail += 1
            return None
        finally:
            PyMem_Free(parent)
            PyMem_Free(queue)
    # large palette: Python ints carry masks of any width
    visited = {s}
    par = {}
    dq = deque([s])
    while dq:
        pkey = dq.popleft()
        pmask, pv = divmod(pkey, cn)
        v = pv
        for i in range(ip[v], ip[v + 1]):
            c = col[ei[i]]
            pbit = 1 << c
            if pmask & pbit:
                continue
            w = nb[i]
            nk = (pmask | pbit) * cn + w
            if nk in visited:
                continue
            visited.add(nk)
            par[nk] = pkey
            if w == ct:
                path = [w]
                while nk != cs:
                    nk = par[nk]
                    path.append(<int> (nk % cn))
                path.reverse()
                return path
            dq.append(nk)
    return None


def rainbow_reach_dp(n, indptr, nbrs, eids, colors, num_colors, s):
    """Vertices reachable from s by a rainbow path (DP regime)."""
    cdef int[:] ip = indptr
    cdef int[:] nb = nbrs
    cdef int[:] ei = eids
    cdef int[:] col = colors
    cdef int cn = n, cs = s
    reached_py = bytearray(n)
    cdef unsigned char[:] reached = reached_py
    reached[cs] = 1
    cdef int count = 1
    cdef long long total = _flat_states(cn, num_colors)
    cdef long long key, nkey, mask, bit
    cdef int v, w, i, c
    cdef unsigned char *seen
    cdef long long *queue
    cdef long long head = 0, tail = 0
    if total > 0:
        seen = <unsigned char *> PyMem_Malloc(total)
        queue = <long long *> PyMem_Malloc(total * sizeof(long long))
        if seen == NULL or queue == NULL:
            PyMem_Free(seen)
            PyMem_Free(queue)
            raise MemoryError()
        try:
            for key in range(total):
                seen[key] = 0
            seen[cs] = 1
            queue[tail] = cs
            tail += 1
            while head < tail and count < cn:
                key = queue[head]
                head += 1
                v = <int> (key % cn)
                mask = key / cn
                for i in range(ip[v], ip[v + 1]):
                    c = col[ei[i]]
                    bit = 1LL << c
                    if mask & bit:
                        continue
                    nkey = (mask | bit) * cn + nb[i]
                    if seen[nkey]:
                        continue
                    seen[nkey] = 1
                    w = nb[i]
                    if not reached[w]:
                        reached[w] = 1
                        count += 1
                        if count == cn:
                            break
                    queue[tail] = nkey
                    tail += 1
            return reached_py
        finally:
            PyMem_Free(seen)
            PyMem_Free(queue)
    visited = {s}
    dq = deque([s])
    while dq and count < cn:
        pkey = dq.popleft()
        pmask, pv = divmod(pkey, cn)
        v = pv
        for i in range(ip[v], ip[v + 1]):
            c = col[ei[i]]
            pbit = 1 << c
            if pmask & pbit:
                continue
            nk = (pmask | pbit) * cn + nb[i]
            if nk in visited:
                continue
            visited.add(nk)
            w = nb[i]
            if not reached[w]:
                reached[w] = 1
                count += 1
                if count == cn:
                    break
            dq.append(nk)
    return reached_py


def rainbow_path_dfs(n, indptr, nbrs, eids, colors, num_colors, s, t):
    """Rainbow s-t path via backtracking over simple paths."""
    if s == t:
        return [s]
    cdef int[:] ip = indptr
    cdef int[:] nb = nbrs
    cdef int[:] ei = eids
    cdef int[:] col = colors
    cdef int cn = n, cs = s, ct = t
    on_path_py = bytearray(n)
    used_py = bytearray(num_colors)
    cdef unsigned char[:] on_path = on_path_py
    cdef unsigned char[:] used = used_py
    # explicit stacks reproduce the recursive neighbor-ascending order
    cdef int *stack_v = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int *stack_i = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int *stack_c = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    if stack_v == NULL or stack_i == NULL or stack_c == NULL:
        PyMem_Free(stack_v)
        PyMem_Free(stack_i)
        PyMem_Free(stack_c)
        raise MemoryError()
    cdef int depth = 0, v, w, i, c, d
    try:
        stack_v[0] = cs
        stack_i[0] = ip[cs]
        stack_c[0] = -1
        on_path[cs] = 1
        while depth >= 0:
            v = stack_v[depth]
            i = stack_i[depth]
            if i >= ip[v + 1]:
                on_path[v] = 0
                if stack_c[depth] >= 0:
                    used[stack_c[depth]] = 0
                depth -= 1
                continue
            stack_i[depth] = i + 1
            w = nb[i]
            if on_path[w]:
                continue
            c = col[ei[i]]
            if used[c]:
                continue
            if w == ct:
                out = [stack_v[d] for d in range(depth + 1)]
                out.append(w)
                return out
            depth += 1
            stack_v[depth] = w
            stack_i[depth] = ip[w]
            stack_c[depth] = c
            on_path[w] = 1
            used[c] = 1
        return None
    finally:
        PyMem_Free(stack_v)
        PyMem_Free(stack_i)
        PyMem_Free(stack_c)


def rainbow_reach_dfs(n, indptr, nbrs, eids, colors, num_colors, s):
    """Vertices reachable from s by a rainbow path (DFS enumeration)."""
    cdef int[:] ip = indptr
    cdef int[:] nb = nbrs
    cdef int[:] ei = eids
    cdef int[:] col = colors
    cdef int cn = n, cs = s
    reached_py = bytearray(n)
    cdef unsigned char[:] reached = reached_py
    on_path_py = bytearray(n)
    used_py = bytearray(num_colors)
    cdef unsigned char[:] on_path = on_path_py
    cdef unsigned char[:] used = used_py
    cdef int *stack_v = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int *stack_i = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int *stack_c = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    if stack_v == NULL or stack_i == NULL or stack_c == NULL:
        PyMem_Free(stack_v)
        PyMem_Free(stack_i)
        PyMem_Free(stack_c)
        raise MemoryError()
    cdef int depth = 0, v, w, i, c, count = 1
    reached[cs] = 1
    try:
        stack_v[0] = cs
        stack_i[0] = ip[cs]
        stack_c[0] = -1
        on_path[cs] = 1
        while depth >= 0 and count < cn:
            v = stack_v[depth]
            i = stack_i[depth]
            if i >= ip[v + 1]:
                on_path[v] = 0
                if stack_c[depth] >= 0:
                    used[stack_c[depth]] = 0
                depth -= 1
                continue
            stack_i[depth] = i + 1
            w = nb[i]
            if on_path[w]:
                continue
            c = col[ei[i]]
            if used[c]:
                continue
            if not reached[w]:
                reached[w] = 1
                count += 1
                if count == cn:
                    break
            depth += 1
            stack_v[depth] = w
            stack_i[depth] = ip[w]
            stack_c[depth] = c
            on_path[w] = 1
            used[c] = 1
        return reached_py
    finally:
        PyMem_Free(stack_v)
        PyMem_Free(stack_i)
        PyMem_Free(stack_c)


cdef class _Search:
    """Exact coloring search with optimistic feasibility pruning.

    Mirrors kernels.pure.search_coloring: colorings are enumerated in
    ascending branch order over the free edges; after each assignment every
    active pair is rechecked with a BFS over (vertex, mask, wildcards)
    states where unassigned edges count as wildcards and popcount(mask)
    plus wildcards is capped at k path edges.
    """

    cdef int n, m, k, kp1, n_pairs, n_free
    cdef bint canonical
    cdef int[:] ip
    cdef int[:] nb
    cdef int[:] ei
    cdef int *colors
    cdef int *free_edges
    cdef int *pair_u
    cdef int *pair_v
    cdef int *active_buf      # per-depth active pair index lists
    cdef int *active_len
    cdef long long total_states
    cdef int *visited         # stamped, avoids re-zeroing per check
    cdef int stamp
    cdef long long *queue
    cdef bint big_mode

    def __cinit__(self):
        self.colors = NULL
        self.free_edges = NULL
        self.pair_u = NULL
        self.pair_v = NULL
        self.active_buf = NULL
        self.active_len = NULL
        self.visited = NULL
        self.queue = NULL

    def __dealloc__(self):
        PyMem_Free(self.colors)
        PyMem_Free(self.free_edges)
        PyMem_Free(self.pair_u)
        PyMem_Free(self.pair_v)
        PyMem_Free(self.active_buf)
        PyMem_Free(self.active_len)
        PyMem_Free(self.visited)
        PyMem_Free(self.queue)

    cdef int feasible(self, int src, int dst):
        # 0 = unreachable (prune), 1 = reachable using wildcards,
        # 2 = reachable through fully assigned edges (pair satisfied)
        cdef long long key, nkey, mask, bit
        cdef long long head = 0, tail = 0
        cdef int v, w, i, c, ww, length
        cdef int kp1 = self.kp1
        if not self.big_mode:
            self.stamp += 1
            self.visited[src] = self.stamp
            self.queue[tail] = src
            tail += 1
            while head < tail:
                key = self.queue[head]
                head += 1
                v = <int> (key % self.n)
                key = key / self.n
                w = <int> (key % kp1)
                mask = key / kp1
                length = _popcount(mask) + w
                if length >= self.k:
                    continue
                for i in range(self.ip[v], self.ip[v + 1]):
                    c = self.colors[self.ei[i]]
                    if c < 0:
                        nkey = (mask * kp1 + w + 1) * self.n + self.nb[i]
                        ww = w + 1
                    else:
                        bit = 1LL << c
                        if mask & bit:
                            continue
                        nkey = ((mask | bit) * kp1 + w) * self.n + self.nb[i]
                        ww = w
                    if self.visited[nkey] == self.stamp:
                        continue
                    if self.nb[i] == dst:
                        return 2 if ww == 0 else 1
                    self.visited[nkey] = self.stamp
                    self.queue[tail] = nkey
                    tail += 1
            return 0
        # large state space: Python sets and arbitrary-width masks
        seen = {src}
        dq = deque([src])
        while dq:
            pkey = dq.popleft()
            prest, pv = divmod(pkey, self.n)
            pmask, pw = divmod(prest, kp1)
            v = pv
            w = pw
            if int(pmask).bit_count() + w >= self.k:
                continue
            for i in range(self.ip[v], self.ip[v + 1]):
                c = self.colors[self.ei[i]]
                if c < 0:
                    nk = (pmask * kp1 + w + 1) * self.n + self.nb[i]
                    ww = w + 1
                else:
                    pbit = 1 << c
                    if pmask & pbit:
                        continue
                    nk = ((pmask | pbit) * kp1 + w) * self.n + self.nb[i]
                    ww = w
                if nk in seen:
                    continue
                if self.nb[i] == dst:
                    return 2 if ww == 0 else 1
                seen.add(nk)
                dq.append(nk)
        return 0

    cdef int check(self, int depth):
        # filter actives of level depth into depth + 1; 0 = some pair dead
        cdef int src_len = self.active_len[depth]
        cdef int *src = self.active_buf + depth * self.n_pairs
        cdef int *dst = self.active_buf + (depth + 1) * self.n_pairs
        cdef int out_len = 0
        cdef int idx, r, j
        for j in range(src_len):
            idx = src[j]
            r = self.feasible(self.pair_u[idx], self.pair_v[idx])
            if r == 0:
                return 0
            if r == 1:
                dst[out_len] = idx
                out_len += 1
        self.active_len[depth + 1] = out_len
        return 1

    cdef bint go(self, int pos, int max_used):
        cdef int e = self.free_edges[pos]
        cdef int cap = self.k - 1
        cdef int c
        cdef bint last = pos + 1 == self.n_free
        if self.canonical and max_used + 1 < cap:
            cap = max_used + 1
        for c in range(cap + 1):
            self.colors[e] = c
            if self.check(pos + 1):
                if last:
                    if self.active_len[pos + 2] == 0:
                        return True
                elif self.go(pos + 1, max_used if max_used >= c else c):
                    return True
        self.colors[e] = -1
        return False


def search_coloring(n, indptr, nbrs, eids, m, k, fixed, pairs, canonical):
    """Exact search for an edge coloring with <= k colors connecting pairs.

    Same contract as kernels.pure.search_coloring: returns the first
    coloring found in ascending branch order, or None."""
    cdef _Search S = _Search()
    S.n = n
    S.m = m
    S.k = k
    S.kp1 = k + 1
    S.canonical = bool(canonical)
    S.ip = indptr
    S.nb = nbrs
    S.ei = eids
    S.stamp = 0

    cdef int i
    S.colors = <int *> PyMem_Malloc(max(m, 1) * sizeof(int))
    if S.colors == NULL:
        raise MemoryError()
    for i in range(m):
        S.colors[i] = fixed[i]

    free_list = [e for e in range(m) if fixed[e] == -1]
    S.n_free = len(free_list)
    S.free_edges = <int *> PyMem_Malloc(max(S.n_free, 1) * sizeof(int))
    if S.free_edges == NULL:
        raise MemoryError()
    for i in range(S.n_free):
        S.free_edges[i] = free_list[i]

    # single-edge paths are rainbow under any coloring
    adjacent = set()
    for v in range(n):
        for j in range(indptr[v], indptr[v + 1]):
            adjacent.add((v, nbrs[j]))
    canon_pairs = sorted(
        {(u, v) if u < v else (v, u) for u, v in pairs if (u, v) not in adjacent}
    )
    S.n_pairs = len(canon_pairs)
    S.pair_u = <int *> PyMem_Malloc(max(S.n_pairs, 1) * sizeof(int))
    S.pair_v = <int *> PyMem_Malloc(max(S.n_pairs, 1) * sizeof(int))
    S.active_buf = <int *> PyMem_Malloc(
        max((S.n_free + 2) * max(S.n_pairs, 1), 1) * sizeof(int)
    )
    S.active_len = <int *> PyMem_Malloc((S.n_free + 2) * sizeof(int))
    if (
        S.pair_u == NULL
        or S.pair_v == NULL
        or S.active_buf == NULL
        or S.active_len == NULL
    ):
        raise MemoryError()
    for i in range(S.n_pairs):
        S.pair_u[i] = canon_pairs[i][0]
        S.pair_v[i] = canon_pairs[i][1]
        S.active_buf[i] = i
    S.active_len[0] = S.n_pairs

    cdef long long base = (<long long> n) * S.kp1
    if 0 <= k < 40 and base <= (FLAT_LIMIT >> k):
        S.total_states = base << k
    else:
        S.total_states = FLAT_LIMIT + 1
    if S.total_states <= FLAT_LIMIT:
        S.big_mode = False
        S.visited = <int *> PyMem_Malloc(S.total_states * sizeof(int))
        S.queue = <long long *> PyMem_Malloc(
            S.total_states * sizeof(long long)
        )
        if S.visited == NULL or S.queue == NULL:
            raise MemoryError()
        for i in range(<int> S.total_states):
            S.visited[i] = 0
    else:
        S.big_mode = True

    if not S.check(0):
        return None
    if S.n_free == 0:
        if S.active_len[1] == 0:
            return [S.colors[i] for i in range(m)]
        return None
    if not S.go(0, -1):
        return None
    return [S.colors[i] for i in range(m)]
