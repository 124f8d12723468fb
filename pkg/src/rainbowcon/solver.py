"""Exact decision procedures and the rainbow connection number.

decide_rc_k enumerates edge colorings in canonical first-use order: edge i
may use a color id at most one greater than the max id used on edges
before it, which kills palette-relabeling symmetry.  Budget-k searches only
need paths of at most k edges, so an optimistic feasibility bound prunes
most branches (see kernels.search_coloring).

Supported scale is desk-sized: the search space is bounded by the number
of restricted-growth strings over m edges, so keep m below roughly 18 for
k up to 4 (documented in the CLI help as well).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import (
    EdgeColoring,
    Graph,
    GraphError,
    PairSet,
    PartialEdgeColoring,
    diameter,
    is_connected,
    spanning_tree,
)


@dataclass(frozen=True)
class RcResult:
    rc: int
    witness: EdgeColoring


def _run_search(
    g: Graph,
    k: int,
    fixed: list[int],
    pairs: list[tuple[int, int]],
    canonical: bool,
) -> EdgeColoring | None:
    indptr, nbrs, eids = g.csr
    out = kernels.search_coloring(
        g.n, indptr, nbrs, eids, g.m, k, fixed, pairs, canonical
    )
    if out is None:
        return None
    palette = max(out, default=-1) + 1
    return EdgeColoring(tuple(out), max(palette, 0))


def _all_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]


def decide_rc_k(g: Graph, k: int) -> EdgeColoring | None:
    """First canonical coloring with <= k colors making g rainbow
    connected, or None.  Requires a connected graph and k >= 1."""
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    if not is_connected(g):
        raise GraphError("decide_rc_k requires a connected graph")
    return _run_search(g, k, [-1] * g.m, _all_pairs(g), canonical=True)


def rc_exact(g: Graph, k_max: int | None = None) -> RcResult | None:
    """Exact rainbow connection number with witness.

    Iterates decide_rc_k upward from max(diameter, 1) (rainbow paths are
    paths, so rc is at least the diameter).  Returns None when no k up to
    the cap (default n - 1, always sufficient via a spanning tree) works.
    Edgeless graphs (n <= 1) have rc 0 by convention.
    """
    if not is_connected(g):
        raise GraphError("rc_exact requires a connected graph")
    if g.m == 0:
        return RcResult(0, EdgeColoring((), 0))
    if k_max is None:
        k_max = g.n - 1
    start = max(int(diameter(g)), 1)
    for k in range(start, k_max + 1):
        chi = decide_rc_k(g, k)
        if chi is not None:
            assert chi.distinct_colors == k, "first success must be tight"
            return RcResult(k, chi)
    return None


def subset_rc2(g: Graph, pairs: PairSet) -> EdgeColoring | None:
    """2-coloring making every listed pair rainbow connected, or None.

    Canonical first-use order pins the first searched edge to color 0,
    which is exactly the color-swap symmetry breaking for two colors.
    """
    for u, v in pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"pair ({u}, {v}) out of range")
    return _run_search(g, 2, [-1] * g.m, list(pairs), canonical=True)


def extend_rc2(g: Graph, partial: PartialEdgeColoring) -> EdgeColoring | None:
    """Completion of a partial 2-coloring to a rainbow connected one.

    Pinned colors must already lie in {0, 1}.  Returns the first completion
    in ascending branch order over the unassigned edges, or None.
    """
    if len(partial.colors) != g.m:
        raise GraphError(
            f"partial coloring has {len(partial.colors)} entries for {g.m} edges"
        )
    if any(c is not None and c not in (0, 1) for c in partial.colors):
        raise GraphError("extend_rc2 needs a partial coloring over colors {0, 1}")
    fixed = [-1 if c is None else c for c in partial.colors]
    return _run_search(g, 2, fixed, _all_pairs(g), canonical=False)


def tree_coloring(g: Graph) -> EdgeColoring:
    """Spanning-tree coloring: tree edge i gets color i, the rest color 0.

    Tree paths then use pairwise distinct colors, so the result is always
    rainbow connected with max(n - 1, 1) palette colors for n >= 2.
    """
    if not is_connected(g):
        raise GraphError("tree_coloring requires a connected graph")
    tree = spanning_tree(g)
    out = [0] * g.m
    for i, e in enumerate(tree):
        out[g.edge_index[e]] = i
    return EdgeColoring(tuple(out), max(len(tree), 1) if g.m else 0)
