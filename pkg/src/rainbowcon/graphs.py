"""Core graph types and operations.

Graphs are simple and undirected.  Vertices are 0-indexed ints; every edge
is stored once as a sorted pair, and the tuple of sorted pairs in
lexicographic order is the canonical edge order.  Edge colorings are arrays
indexed by that canonical order, which keeps serialization round-trips
index-stable.
"""

from __future__ import annotations

import math
import random
from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Raised for invalid graph construction or malformed arguments."""


_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    # splitmix64 finalizer; the counter-based scheme below keys every draw
    # by (seed, index) so results do not depend on iteration order
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x & _MASK64


def counter_unit(seed: int, index: int) -> float:
    """Deterministic uniform draw in [0, 1) for (seed, index)."""
    return _mix64(seed + (index + 1) * _GAMMA) / 2.0**64


def derive_seed(seed: int, index: int) -> int:
    """Split a seed into an independent per-index stream seed."""
    return _mix64(seed + (index + 1) * _GAMMA)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph in canonical edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neigh: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neigh)

    @cached_property
    def edge_index(self) -> Mapping[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def csr(self) -> tuple[array, array, array]:
        """(indptr, neighbors, edge ids), neighbors ascending per vertex."""
        indptr = array("i", [0] * (self.n + 1))
        pairs: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            pairs[u].append((v, eid))
            pairs[v].append((u, eid))
        nbrs = array("i")
        eids = array("i")
        for v in range(self.n):
            pairs[v].sort()
            for w, eid in pairs[v]:
                nbrs.append(w)
                eids.append(eid)
            indptr[v + 1] = len(nbrs)
        return indptr, nbrs, eids

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate, canonicalize and build a Graph.

    Rejects self-loops, duplicate edges and out-of-range endpoints, naming
    the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        canon.append(e)
    canon.sort()
    return Graph(n, tuple(canon))


@dataclass(frozen=True)
class EdgeColoring:
    """Total edge coloring, indexed by canonical edge order.

    num_colors is the palette size: every id lies in [0, num_colors).  The
    number of ids actually used may be smaller (a random 3-coloring of two
    edges can use one id); distinct_colors reports it.
    """

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.num_colors < 0:
            raise GraphError("num_colors must be >= 0")
        for i, c in enumerate(self.colors):
            if not (0 <= c < self.num_colors):
                raise GraphError(
                    f"edge {i} has color {c} outside [0, {self.num_colors})"
                )

    @property
    def distinct_colors(self) -> int:
        return len(set(self.colors))


UNASSIGNED = None


@dataclass(frozen=True)
class PartialEdgeColoring:
    """Edge coloring with unassigned slots (None)."""

    colors: tuple[int | None, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.num_colors < 0:
            raise GraphError("num_colors must be >= 0")
        for i, c in enumerate(self.colors):
            if c is not None and not (0 <= c < self.num_colors):
                raise GraphError(
                    f"edge {i} has color {c} outside [0, {self.num_colors})"
                )

    @property
    def assigned_count(self) -> int:
        return sum(1 for c in self.colors if c is not None)


@dataclass(frozen=True)
class PairSet:
    """Set of unordered vertex pairs, canonical (min, max) sorted order."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def make_pair_set(n: int, raw: Iterable[tuple[int, int]]) -> PairSet:
    seen: set[tuple[int, int]] = set()
    for u, v in raw:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"pair ({u}, {v}) has equal endpoints")
        seen.add((u, v) if u < v else (v, u))
    return PairSet(tuple(sorted(seen)))


@dataclass(frozen=True)
class Partition:
    """Partition of the vertex set into nonempty disjoint classes."""

    n: int
    classes: tuple[tuple[int, ...], ...]


def make_partition(n: int, raw: Iterable[Iterable[int]]) -> Partition:
    covered: set[int] = set()
    classes: list[tuple[int, ...]] = []
    for cls in raw:
        members = sorted(set(cls))
        if not members:
            raise GraphError("empty partition class")
        for v in members:
            if not (0 <= v < n):
                raise GraphError(f"partition vertex {v} out of range for n={n}")
            if v in covered:
                raise GraphError(f"vertex {v} appears in two partition classes")
            covered.add(v)
        classes.append(tuple(members))
    if covered != set(range(n)):
        missing = sorted(set(range(n)) - covered)
        raise GraphError(f"partition does not cover vertices {missing}")
    return Partition(n, tuple(classes))


def is_connected(g: Graph) -> bool:
    """BFS connectivity; the empty and single-vertex graphs count as connected."""
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def _bfs_ecc(g: Graph, s: int) -> int:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    far = 0
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                far = max(far, dist[w])
                queue.append(w)
    if any(d < 0 for d in dist):
        return -1
    return far


def diameter(g: Graph) -> int | float:
    """Exact diameter; math.inf when disconnected, 0 when n <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for s in range(g.n):
        ecc = _bfs_ecc(g, s)
        if ecc < 0:
            return math.inf
        best = max(best, ecc)
    return best


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("min_degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def diameter_bound_check(g: Graph) -> bool:
    """True iff diameter(g) <= 3 * n / min_degree(g).

    The bound comes from growing BFS layers: each two layers gain at least
    min_degree new vertices.  Requires a connected graph with min degree
    >= 1.
    """
    if g.n == 0:
        raise GraphError("empty graph")
    d = min_degree(g)
    if d == 0:
        raise GraphError("isolated vertex: bound needs min degree >= 1")
    dia = diameter(g)
    if dia is math.inf:
        raise GraphError("disconnected graph")
    return dia <= 3.0 * g.n / d


def spanning_tree(g: Graph) -> list[tuple[int, int]]:
    """BFS spanning tree from vertex 0, neighbors ascending.

    Returns tree edges as canonical pairs in discovery order.  Errors on
    disconnected input.
    """
    if g.n == 0:
        return []
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    out: list[tuple[int, int]] = []
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                out.append((v, w) if v < w else (w, v))
                queue.append(w)
    if len(out) != g.n - 1:
        raise GraphError("spanning_tree requires a connected graph")
    return out


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def clique_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"clique needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise GraphError(f"star needs n >= 1, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite needs both sides >= 1, got {a}, {b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p) with one counter-based draw per vertex pair.

    Pair (u, v), u < v, uses draw index of its position in lexicographic
    order, so the sample is independent of iteration order and bit-identical
    across runs for a fixed seed.
    """
    if n < 0:
        raise GraphError(f"gnp needs n >= 0, got {n}")
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"gnp needs 0 <= p <= 1, got {p}")
    edges = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if counter_unit(seed, idx) < p:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


_GENERATORS = {
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "clique": (clique_graph, 1),
    "star": (star_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "gnp": (gnp_graph, 2),
}


def gen_named(kind: str, params: Sequence[float], seed: int = 0) -> Graph:
    """Family dispatcher used by the CLI ``gen`` subcommand."""
    if kind not in _GENERATORS:
        raise GraphError(
            f"unknown family {kind!r}; known: {', '.join(sorted(_GENERATORS))}"
        )
    fn, arity = _GENERATORS[kind]
    if len(params) != arity:
        raise GraphError(f"family {kind!r} takes {arity} parameter(s)")
    if kind == "gnp":
        return gnp_graph(int(params[0]), float(params[1]), seed)
    args = [int(x) for x in params]
    return fn(*args)


def random_connected_graph(n: int, rng: random.Random, extra_p: float = 0.3) -> Graph:
    """Random connected graph helper: random tree plus extra random edges."""
    if n < 1:
        raise GraphError("need n >= 1")
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((u, v) if u < v else (v, u))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return build_graph(n, edges)
