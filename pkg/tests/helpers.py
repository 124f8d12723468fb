"""Shared test utilities: independent oracles and small generators.

The path oracle enumerates all simple paths directly from the adjacency
structure, so it shares no code with the kernels it is used to check.
"""

from __future__ import annotations

import heapq
import random
from itertools import product

from rainbowcon.cnf import Cnf3, NormalStatus, normalize_cnf
from rainbowcon.graphs import EdgeColoring, Graph, build_graph, make_partition


def brute_rainbow_path(g: Graph, chi: EdgeColoring, s: int, t: int) -> bool:
    """Oracle: does any simple rainbow s-t path exist?  Exponential."""
    if s == t:
        return True
    edge_color = {}
    for i, (u, v) in enumerate(g.edges):
        edge_color[(u, v)] = chi.colors[i]
        edge_color[(v, u)] = chi.colors[i]

    def walk(v, seen_v, seen_c):
        if v == t:
            return True
        for w in g.adjacency[v]:
            if w in seen_v:
                continue
            c = edge_color[(v, w)]
            if c in seen_c:
                continue
            if walk(w, seen_v | {w}, seen_c | {c}):
                return True
        return False

    return walk(s, {s}, set())


def brute_rainbow_connected(g: Graph, chi: EdgeColoring) -> bool:
    return all(
        brute_rainbow_path(g, chi, u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def prufer_to_tree(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def all_trees(n: int):
    """Every labeled tree on n >= 2 vertices."""
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def clique_chain(sizes: list[int], rng: random.Random):
    """Disjoint cliques joined in a row by one random bridge edge each;
    returns (graph, partition into the cliques)."""
    edges = []
    offs = []
    base = 0
    for s in sizes:
        offs.append(base)
        edges += [(base + i, base + j) for i in range(s) for j in range(i + 1, s)]
        base += s
    for a in range(len(sizes) - 1):
        u = offs[a] + rng.randrange(sizes[a])
        v = offs[a + 1] + rng.randrange(sizes[a + 1])
        edges.append((u, v))
    g = build_graph(base, edges)
    classes = [list(range(offs[i], offs[i] + sizes[i])) for i in range(len(sizes))]
    return g, make_partition(base, classes)


def random_coloring(g: Graph, k: int, rng: random.Random) -> EdgeColoring:
    return EdgeColoring(tuple(rng.randrange(k) for _ in range(g.m)), k)


def random_normalized_cnf(
    rng: random.Random, max_vars: int = 4, max_clauses: int = 4
) -> Cnf3:
    """Random normalized 3-CNF, tautology-free, within the given bounds.

    Repeated variables inside a clause keep one polarity so every clause
    stays usable by the gadget compilers.  Rejection-sampled until the
    normalizer reports an already-normal formula.
    """
    while True:
        n = rng.randint(1, max_vars)
        m = rng.randint(1, max_clauses)
        clauses = []
        for _ in range(m):
            sign: dict[int, int] = {}
            lits = []
            for _ in range(3):
                v = rng.randint(1, n)
                s = sign.setdefault(v, rng.choice((1, -1)))
                lits.append(s * v)
            clauses.append(tuple(lits))
        res = normalize_cnf(Cnf3(n, tuple(clauses)))
        if res.status is NormalStatus.NORMAL and res.cnf == Cnf3(
            n, tuple(clauses)
        ):
            return res.cnf
