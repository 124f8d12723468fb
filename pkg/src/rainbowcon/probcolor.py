"""Randomized and derandomized rainbow colorings for dense graphs.

The dense-graph algorithms color edges with 3 colors (diameter-2 graphs
with large min degree) or with the fixed 8-color palette split into
a-colors 0..3 and b-colors 4..7 (within-partition-class connectivity).
Both carry a pessimistic estimator: an upper bound on the expected number
of vertex pairs left without a rainbow route, summed over per-pair
products of route-failure bounds.  Every bound is a true conditional
probability under uniform completion, so conditional expectation can pick
edge colors one at a time without ever increasing the total; when the
initial bound is below 1, the final coloring is guaranteed to verify.
"""

from __future__ import annotations

import enum
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import IO, Sequence

from .graphs import (
    EdgeColoring,
    Graph,
    GraphError,
    Partition,
    derive_seed,
)
from .probability import _falling
from .verify import is_rainbow_connected, rainbow_path_exists

# fixed 8-color palette: ids 0..3 are a-colors, 4..7 are b-colors
A_COLORS: tuple[int, ...] = (0, 1, 2, 3)
B_COLORS: tuple[int, ...] = (4, 5, 6, 7)
PALETTE8 = 8


class DiameterViolation(GraphError):
    """The diameter-2 precondition failed while building pair evidence."""


def random_k_coloring(g: Graph, k: int, seed: int = 0) -> EdgeColoring:
    """Each edge uniform over [0, k), deterministic given the seed."""
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    rng = random.Random(seed)
    return EdgeColoring(tuple(rng.randrange(k) for _ in range(g.m)), k)


def las_vegas_rc3(
    g: Graph, seed: int = 0, max_iters: int = 100
) -> EdgeColoring | None:
    """Retry random 3-colorings until one verifies; None after max_iters.

    Iteration i uses the derived seed derive_seed(seed, i), so runs are
    reproducible and iterations are independent streams.
    """
    for i in range(max_iters):
        chi = random_k_coloring(g, 3, derive_seed(seed, i))
        if is_rainbow_connected(g, chi):
            return chi
    return None


def default_common_threshold(n: int) -> int:
    """ceil(2 * log2 n): enough disjoint 2-paths to beat the union bound."""
    if n < 2:
        raise GraphError("threshold needs n >= 2")
    return math.ceil(2 * math.log2(n))


class CaseTag(enum.Enum):
    ADJACENT = "adjacent"
    COMMON_NBRS = "common_nbrs"
    VIA_B = "via_b"


@dataclass(frozen=True)
class CaseEvidence:
    """Why a pair is (expected to be) rainbow connectable.

    ADJACENT: the pair is an edge.  COMMON_NBRS: at least ``threshold``
    common neighbors give edge-disjoint 2-paths.  VIA_B: 3-paths
    u, x, b(x), v over x in A = N(u) - N(v), with b(x) the least-id
    neighbor of x inside B = N(v) - N(u); x without B-neighbors are
    dropped (fewer counted paths only weakens the bound, never breaks it).
    """

    pair: tuple[int, int]
    tag: CaseTag
    common: tuple[int, ...] = ()
    a_side: tuple[int, ...] = ()
    b_side: tuple[int, ...] = ()
    b_map: tuple[tuple[int, int], ...] = ()


def pair_evidence(g: Graph, u: int, v: int, threshold: int) -> CaseEvidence:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"need distinct in-range vertices, got {u}, {v}")
    if g.has_edge(u, v):
        return CaseEvidence((u, v), CaseTag.ADJACENT)
    nu = set(g.adjacency[u])
    nv = set(g.adjacency[v])
    common = sorted(nu & nv)
    if len(common) >= threshold:
        return CaseEvidence((u, v), CaseTag.COMMON_NBRS, common=tuple(common))
    a_side = sorted(nu - nv)
    b_side = sorted(nv - nu)
    bset = set(b_side)
    b_map: list[tuple[int, int]] = []
    missing = False
    for x in a_side:
        into_b = sorted(set(g.adjacency[x]) & bset)
        if into_b:
            b_map.append((x, into_b[0]))
        else:
            missing = True
    if not common and (not a_side or not b_side or missing):
        raise DiameterViolation(
            f"pair ({u}, {v}): no common neighbor and no full A-to-B routing; "
            "graph diameter exceeds 2"
        )
    return CaseEvidence(
        (u, v),
        CaseTag.VIA_B,
        a_side=tuple(a_side),
        b_side=tuple(b_side),
        b_map=tuple(b_map),
    )


# ---------------------------------------------------------------------------
# estimator machinery shared by both derandomizations


class _Factor:
    """One route-failure bound; reads edge colors, -1 = unassigned.

    A factor's value is the exact rational num(colors) / den with a
    constant denominator (a power of the palette size), so the estimator
    can run entirely in integer arithmetic: the color-averaging identity
    sum over c of num(e=c) = palette * num(e unassigned) then holds
    exactly, which makes greedy monotonicity a theorem about ints instead
    of a hope about floats.
    """

    __slots__ = ("edges", "den")

    edges: tuple[int, ...]
    den: int

    def num(self, colors: Sequence[int]) -> int:
        raise NotImplementedError

    def value(self, colors: Sequence[int]) -> float:
        return self.num(colors) / self.den


class _PathFactor(_Factor):
    """P(path not rainbow within an optional allowed color set)."""

    __slots__ = ("k", "allowed")

    def __init__(self, edges: tuple[int, ...], k: int, allowed=None):
        self.edges = edges
        self.k = k
        self.allowed = allowed
        self.den = k ** len(edges)

    def num(self, colors: Sequence[int]) -> int:
        fixed = []
        free = 0
        for e in self.edges:
            if colors[e] >= 0:
                fixed.append(colors[e])
            else:
                free += 1
        if self.allowed is not None and any(
            c not in self.allowed for c in fixed
        ):
            return self.den
        if len(set(fixed)) != len(fixed):
            return self.den
        size = self.k if self.allowed is None else len(self.allowed)
        rainbow = _falling(size - len(fixed), free)
        return self.den - rainbow * self.k ** (len(self.edges) - free)


class _SharedLastFactor(_Factor):
    """Failure bound for a bundle of 3-paths sharing their last edge.

    Conditioned on the shared edge's color the per-path events are
    independent (their private edges are pairwise disjoint), so the exact
    bundle failure probability is the product of per-path failures at that
    color, averaged uniformly while the shared edge is unassigned.  Both
    the averaging and the per-path terms are true conditional
    probabilities, which is what keeps the greedy total non-increasing.
    """

    __slots__ = ("interior", "last", "k")

    def __init__(
        self, interior: tuple[tuple[int, int], ...], last: int, k: int
    ):
        self.interior = interior
        self.last = last
        self.k = k
        self.edges = tuple(e for pair in interior for e in pair) + (last,)
        self.den = k ** (2 * len(interior) + 1)

    def _path_num(self, c1: int, c2: int, shared: int) -> int:
        # k^2 times P(path with these interiors is not rainbow at the
        # shared last color)
        k = self.k
        if c1 >= 0 and c2 >= 0:
            return 0 if len({c1, c2, shared}) == 3 else k * k
        if c1 < 0 and c2 < 0:
            return k * k - (k - 1) * (k - 2)
        a = c1 if c1 >= 0 else c2
        return k * k if a == shared else 2 * k

    def num(self, colors: Sequence[int]) -> int:
        last_c = colors[self.last]
        choices = (last_c,) if last_c >= 0 else range(self.k)
        out = 0
        for shared in choices:
            term = 1
            for e1, e2 in self.interior:
                term *= self._path_num(colors[e1], colors[e2], shared)
                if term == 0:
                    break
            out += term
        if last_c >= 0:
            out *= self.k
        return out


@dataclass
class _Product:
    """Multiplicative failure bound over counted routes of one pair.

    Held as an integer numerator over the constant denominator den (the
    product of the factor denominators).  No edge appears in two factors
    of one product, so single-edge updates touch a single numerator slot.
    """

    pair: tuple[int, int]
    factors: list[_Factor]
    nums: list[int] = field(default_factory=list)
    num: int = 1
    den: int = 1
    scale: int = 1

    def recompute(self, colors: Sequence[int]) -> None:
        self.nums = [f.num(colors) for f in self.factors]
        self.num = math.prod(self.nums)
        self.den = math.prod(f.den for f in self.factors)

    @property
    def value(self) -> float:
        return self.num / self.den


class EstimatorState:
    """Pessimistic bound on the number of unconnected pairs.

    total = sum over products (one or two per pair) of factor failure
    bounds, maintained as an exact integer numerator total_num over the
    common denominator den.  trial() prices a candidate color; commit()
    installs one.  A factor numerator can only reach 0 in an absorbing
    way (some route is rainbow under every completion), so incremental
    division by the old numerator is always exact.
    """

    def __init__(self, m: int, palette: int, products: list[_Product]):
        self.m = m
        self.palette = palette
        self.products = products
        self.colors = [-1] * m
        self.by_edge: list[list[tuple[_Product, int]]] = [[] for _ in range(m)]
        for prod in products:
            for fi, f in enumerate(prod.factors):
                for e in f.edges:
                    self.by_edge[e].append((prod, fi))
        for prod in products:
            prod.recompute(self.colors)
        self.den = math.lcm(*(p.den for p in products)) if products else 1
        for prod in products:
            prod.scale = self.den // prod.den
        self.total_num = sum(p.num * p.scale for p in products)

    @property
    def total(self) -> float:
        return self.total_num / self.den

    def shift_num(self, e: int, c: int) -> int:
        """Exact change of total_num if edge e were colored c."""
        self.colors[e] = c
        delta = 0
        for prod, fi in self.by_edge[e]:
            old_f = prod.nums[fi]
            if old_f == 0:
                continue  # absorbing: the factor stays 0 forever
            new_f = prod.factors[fi].num(self.colors)
            if new_f == old_f:
                continue
            delta += (prod.num // old_f * new_f - prod.num) * prod.scale
        self.colors[e] = -1
        return delta

    def trial(self, e: int, c: int) -> float:
        """Total if edge e were colored c."""
        return (self.total_num + self.shift_num(e, c)) / self.den

    def commit(self, e: int, c: int) -> None:
        self.colors[e] = c
        for prod, fi in self.by_edge[e]:
            old_f = prod.nums[fi]
            new_f = prod.factors[fi].num(self.colors)
            prod.nums[fi] = new_f
            if old_f == 0 or new_f == old_f:
                continue
            new_num = prod.num // old_f * new_f
            self.total_num += (new_num - prod.num) * prod.scale
            prod.num = new_num

    def pair_bounds(self) -> dict[tuple[int, int], float]:
        out: dict[tuple[int, int], float] = {}
        for prod in self.products:
            out[prod.pair] = out.get(prod.pair, 0.0) + prod.value
        return out


def _greedy_minimize(
    state: EstimatorState, trace: IO[str] | None = None
) -> list[float]:
    """Color every edge by conditional expectation; returns the totals
    after each commit (prefixed by the initial total)."""
    totals = [state.total]
    for e in range(state.m):
        best_c = 0
        best_shift = None
        for c in range(state.palette):
            shift = state.shift_num(e, c)
            if best_shift is None or shift < best_shift:
                best_c, best_shift = c, shift
        # the candidate shifts sum to zero exactly (integer form of the
        # conditional-probability average), so the best is never positive
        assert best_shift is not None and best_shift <= 0, "estimator rose"
        state.commit(e, best_c)
        totals.append(state.total)
        if trace is not None:
            trace.write(f"t {e} {best_c} {state.total:.17g}\n")
    return totals


@dataclass(frozen=True)
class DerandResult:
    coloring: EdgeColoring
    initial_estimator: float
    verified: bool
    estimator_trace: tuple[float, ...]


def _rc3_products(g: Graph, threshold: int) -> list[_Product]:
    products: list[_Product] = []
    eidx = g.edge_index
    for u in range(g.n):
        for v in range(u + 1, g.n):
            ev = pair_evidence(g, u, v, threshold)
            if ev.tag is CaseTag.ADJACENT:
                continue
            factors: list[_Factor] = []
            if ev.tag is CaseTag.COMMON_NBRS:
                for w in ev.common:
                    e1 = eidx[(u, w) if u < w else (w, u)]
                    e2 = eidx[(w, v) if w < v else (v, w)]
                    factors.append(_PathFactor((e1, e2), 3))
            else:
                # b(x) need not be one-one: paths ending on the same edge
                # go into one shared-last bundle so the factors stay
                # conditionally independent
                groups: dict[int, list[tuple[int, int]]] = {}
                for x, bx in ev.b_map:
                    e1 = eidx[(u, x) if u < x else (x, u)]
                    e2 = eidx[(x, bx) if x < bx else (bx, x)]
                    e3 = eidx[(bx, v) if bx < v else (v, bx)]
                    groups.setdefault(e3, []).append((e1, e2))
                for e3 in sorted(groups):
                    factors.append(
                        _SharedLastFactor(tuple(groups[e3]), e3, 3)
                    )
            products.append(_Product((u, v), factors))
    return products


def derand_rc3(
    g: Graph,
    threshold: int | None = None,
    trace: IO[str] | None = None,
) -> DerandResult:
    """Deterministic 3-coloring via conditional expectation.

    Requires diameter <= 2 (pair evidence construction).  When the initial
    estimator is below 1 the result always verifies; otherwise the run is
    still performed and the honest verification outcome is reported.
    """
    if g.n < 2:
        raise GraphError("derand_rc3 needs at least 2 vertices")
    if threshold is None:
        threshold = default_common_threshold(g.n)
    state = EstimatorState(g.m, 3, _rc3_products(g, threshold))
    initial = state.total
    totals = _greedy_minimize(state, trace)
    chi = EdgeColoring(tuple(state.colors), 3)
    ok = bool(is_rainbow_connected(g, chi))
    assert not (initial < 1.0) or ok, "estimator below 1 must verify"
    return DerandResult(chi, initial, ok, tuple(totals))


# ---------------------------------------------------------------------------
# path families and the 8-color within-class machinery


@dataclass(frozen=True)
class PathFamily:
    pair: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]


def path_family(
    g: Graph, u: int, v: int, max_len: int = 4, enum_cap: int = 10_000
) -> PathFamily:
    """Greedy edge-disjoint family of u-v paths of length <= max_len.

    Candidate paths are enumerated in order of increasing length, then
    lexicographically by vertex sequence; a candidate is accepted iff it
    shares no edge with an already accepted path.  Enumeration stops after
    enum_cap candidates, keeping the worst case bounded.
    """
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"need distinct in-range vertices, got {u}, {v}")
    used: set[tuple[int, int]] = set()
    accepted: list[tuple[int, ...]] = []
    seen_count = 0
    adj = g.adjacency

    def edges_of(path: tuple[int, ...]):
        for a, b in zip(path, path[1:]):
            yield (a, b) if a < b else (b, a)

    for length in range(1, max_len + 1):
        if seen_count >= enum_cap:
            break
        # DFS in ascending-neighbor order yields lexicographic sequences
        path: list[int] = [u]

        def walk(cur: list[int]) -> bool:
            nonlocal seen_count
            if len(cur) - 1 == length:
                if cur[-1] != v:
                    return False
                seen_count += 1
                es = list(edges_of(tuple(cur)))
                if all(e not in used for e in es):
                    used.update(es)
                    accepted.append(tuple(cur))
                return seen_count >= enum_cap
            for w in adj[cur[-1]]:
                if w in cur:
                    continue
                # prune branches that cannot reach v in the remaining steps
                if w == v and len(cur) != length:
                    continue
                cur.append(w)
                if walk(cur):
                    cur.pop()
                    return True
                cur.pop()
            return False

        walk(path)
    return PathFamily((u, v) if u < v else (v, u), tuple(accepted))


def _palette8_products(g: Graph, pi: Partition) -> list[_Product]:
    eidx = g.edge_index
    a_set = frozenset(A_COLORS)
    b_set = frozenset(B_COLORS)
    products: list[_Product] = []
    for cls in pi.classes:
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                u, v = cls[i], cls[j]
                fam = path_family(g, u, v, 4)
                path_edges = [
                    tuple(
                        eidx[(a, b) if a < b else (b, a)]
                        for a, b in zip(p, p[1:])
                    )
                    for p in fam.paths
                ]
                fa = [_PathFactor(es, PALETTE8, a_set) for es in path_edges]
                fb = [_PathFactor(es, PALETTE8, b_set) for es in path_edges]
                products.append(_Product((u, v), list(fa)))
                products.append(_Product((u, v), list(fb)))
    return products


def _half_rainbow_connected(
    g: Graph, chi: EdgeColoring, u: int, v: int, half: Sequence[int]
) -> bool:
    """Rainbow u-v path using only colors from one palette half."""
    keep = [i for i, c in enumerate(chi.colors) if c in half]
    sub_edges = [g.edges[i] for i in keep]
    sub = Graph(g.n, tuple(sub_edges))
    sub_chi = EdgeColoring(
        tuple(chi.colors[i] for i in keep), chi.num_colors
    )
    return rainbow_path_exists(sub, sub_chi, u, v) is not None


def derand_8_coloring(
    g: Graph,
    pi: Partition,
    trace: IO[str] | None = None,
) -> DerandResult:
    """8-coloring making every within-class pair doubly rainbow connected.

    Doubly: one rainbow path inside a-colors 0..3 and one inside b-colors
    4..7, so later recoloring of a connecting tree with fresh ids (which
    only breaks one half's paths per tree edge... see compose) keeps every
    class internally joined.  verified reports the exact per-half check.
    """
    state = EstimatorState(g.m, PALETTE8, _palette8_products(g, pi))
    initial = state.total
    totals = _greedy_minimize(state, trace)
    chi = EdgeColoring(tuple(state.colors), PALETTE8)
    ok = True
    for cls in pi.classes:
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                u, v = cls[i], cls[j]
                if not _half_rainbow_connected(g, chi, u, v, A_COLORS):
                    ok = False
                elif not _half_rainbow_connected(g, chi, u, v, B_COLORS):
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    assert not (initial < 1.0) or ok, "estimator below 1 must verify"
    return DerandResult(chi, initial, ok, tuple(totals))


# ---------------------------------------------------------------------------
# composition: connecting tree + refinement


def connecting_tree(g: Graph, pi: Partition) -> list[tuple[int, int]]:
    """Tree touching every partition class, greedily grown by shortest
    attachment paths from the least vertex of the first class.

    Multi-source BFS from the current tree picks the nearest vertex of any
    untouched class (ties by vertex id); path vertices join the tree.  At
    most diameter edges per attachment, so the tree stays within
    k * diameter + 1 vertices for k classes.
    """
    if not pi.classes:
        raise GraphError("partition has no classes")
    class_of = {}
    for ci, cls in enumerate(pi.classes):
        for v in cls:
            class_of[v] = ci
    root = min(pi.classes[0])
    tree_vertices = {root}
    tree_edges: list[tuple[int, int]] = []
    touched = {class_of[root]}
    adj = g.adjacency
    while len(touched) < len(pi.classes):
        parent = {v: v for v in tree_vertices}
        dist = {v: 0 for v in tree_vertices}
        queue = deque(sorted(tree_vertices))
        best: int | None = None
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] >= dist[best]:
                break  # everything further cannot beat the found target
            for w in adj[x]:
                if w in dist:
                    continue
                dist[w] = dist[x] + 1
                parent[w] = x
                if class_of[w] not in touched:
                    if best is None or (dist[w], w) < (dist[best], best):
                        best = w
                queue.append(w)
        if best is None:
            raise GraphError("graph does not connect all partition classes")
        x = best
        while x not in tree_vertices:
            p = parent[x]
            tree_edges.append((p, x) if p < x else (x, p))
            tree_vertices.add(x)
            x = p
        touched.add(class_of[best])
        for v in tree_vertices:
            touched.add(class_of[v])
    return tree_edges


def compose_tree_refinement(
    g: Graph, chi8: EdgeColoring, tree_edges: Sequence[tuple[int, int]]
) -> EdgeColoring:
    """Recolor tree edge i with fresh color 8 + i; refines chi8.

    Fresh ids are singletons, so equal colors in the result imply equal
    colors in chi8 (a refinement); any path rainbow under chi8 that avoids
    recolored edges stays rainbow, and the tree itself is rainbow.
    """
    if chi8.num_colors != PALETTE8:
        raise GraphError("compose expects an 8-color palette input")
    out = list(chi8.colors)
    for i, (u, v) in enumerate(tree_edges):
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_index:
            raise GraphError(f"tree edge {e} not in graph")
        out[g.edge_index[e]] = PALETTE8 + i
    return EdgeColoring(tuple(out), PALETTE8 + len(tree_edges))


def partition_pipeline(g: Graph, pi: Partition) -> EdgeColoring | None:
    """Low-color rainbow coloring via partition classes.

    Runs derand_8_coloring; if it verifies, recolors a connecting tree
    with fresh ids and returns the composed coloring, which uses at most
    |tree| + 8 colors.  Returns None when the 8-color stage fails.
    The caller should re-verify; see tests for the end-to-end property.
    """
    res = derand_8_coloring(g, pi)
    if not res.verified:
        return None
    tree = connecting_tree(g, pi)
    return compose_tree_refinement(g, res.coloring, tree)


def greedy_matching(
    a_size: int, b_size: int, edge_list: Sequence[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Maximal matching by repeatedly taking the least remaining edge.

    Each taken edge deletes at most a_size + b_size - 2 other edges, hence
    the guarantee |M| >= |E| / (a_size + b_size).
    """
    seen = set()
    for a, b in edge_list:
        if not (0 <= a < a_size and 0 <= b < b_size):
            raise GraphError(f"edge ({a}, {b}) out of range")
        seen.add((a, b))
    used_a = set()
    used_b = set()
    out: list[tuple[int, int]] = []
    for a, b in sorted(seen):
        if a in used_a or b in used_b:
            continue
        out.append((a, b))
        used_a.add(a)
        used_b.add(b)
    return out
