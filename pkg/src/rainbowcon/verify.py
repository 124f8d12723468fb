"""Rainbow connectivity verification.

A path is rainbow when its edge colors are pairwise distinct; a colored
graph is rainbow connected when every vertex pair is joined by a rainbow
path.  Path existence runs in one of two regimes: subset DP over
(vertex, used-color-mask) states when the palette is small (the state
space is n * 2^num_colors), otherwise backtracking DFS over simple paths.
The crossover is configurable and defaults to 22 colors.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from . import kernels
from .graphs import EdgeColoring, Graph, GraphError, PairSet

DP_COLOR_THRESHOLD = 22


@dataclass(frozen=True)
class RainbowWitness:
    """A rainbow path: distinct vertices, consecutive pairs adjacent,
    pairwise distinct edge colors along the path."""

    path: tuple[int, ...]
    colors_used: tuple[int, ...]


@dataclass(frozen=True)
class ConnectivityReport:
    ok: bool
    failing_pair: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.ok


def _check_total(g: Graph, chi: EdgeColoring) -> array:
    if len(chi.colors) != g.m:
        raise GraphError(
            f"coloring has {len(chi.colors)} entries for {g.m} edges"
        )
    return array("i", chi.colors)


def _simplify_walk(path: list[int]) -> list[int]:
    # the DP regime can return a distinct-color walk; cutting each cycle
    # (keep the earliest occurrence of a repeated vertex) leaves a rainbow
    # simple path with a subset of the colors
    while True:
        seen: dict[int, int] = {}
        cut = None
        for i, v in enumerate(path):
            if v in seen:
                cut = (seen[v], i)
                break
            seen[v] = i
        if cut is None:
            return path
        path = path[: cut[0]] + path[cut[1] :]


def _witness(g: Graph, chi: EdgeColoring, path: list[int]) -> RainbowWitness:
    cols = []
    for a, b in zip(path, path[1:]):
        e = (a, b) if a < b else (b, a)
        cols.append(chi.colors[g.edge_index[e]])
    return RainbowWitness(tuple(path), tuple(cols))


def rainbow_path_exists(
    g: Graph,
    chi: EdgeColoring,
    s: int,
    t: int,
    dp_color_threshold: int = DP_COLOR_THRESHOLD,
) -> RainbowWitness | None:
    """Find a rainbow s-t path, or None.  s == t gives the empty path."""
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphError(f"endpoint out of range: s={s}, t={t}, n={g.n}")
    colors = _check_total(g, chi)
    indptr, nbrs, eids = g.csr
    if chi.num_colors <= dp_color_threshold:
        fn = kernels.rainbow_path_dp
    else:
        fn = kernels.rainbow_path_dfs
    path = fn(g.n, indptr, nbrs, eids, colors, chi.num_colors, s, t)
    if path is None:
        return None
    return _witness(g, chi, _simplify_walk(list(path)))


def is_rainbow_connected(
    g: Graph,
    chi: EdgeColoring,
    dp_color_threshold: int = DP_COLOR_THRESHOLD,
) -> ConnectivityReport:
    """All-pairs check; reports the lexicographically first failing pair.

    Sweeps a single-source reachability kernel from each vertex in order,
    so the first missing (u, v) with u < v is found without per-pair work.
    """
    colors = _check_total(g, chi)
    indptr, nbrs, eids = g.csr
    if chi.num_colors <= dp_color_threshold:
        reach = kernels.rainbow_reach_dp
    else:
        reach = kernels.rainbow_reach_dfs
    for u in range(max(g.n - 1, 0)):
        got = reach(g.n, indptr, nbrs, eids, colors, chi.num_colors, u)
        for v in range(u + 1, g.n):
            if not got[v]:
                return ConnectivityReport(False, (u, v))
    return ConnectivityReport(True, None)


def pairs_rainbow_connected(
    g: Graph,
    chi: EdgeColoring,
    pairs: PairSet,
    dp_color_threshold: int = DP_COLOR_THRESHOLD,
) -> bool:
    """True iff every listed pair is joined by a rainbow path."""
    for u, v in pairs:
        if rainbow_path_exists(g, chi, u, v, dp_color_threshold) is None:
            return False
    return True


def is_refinement(fine: EdgeColoring, coarse: EdgeColoring) -> bool:
    """True iff equal colors under fine imply equal colors under coarse."""
    if len(fine.colors) != len(coarse.colors):
        raise GraphError("colorings disagree on the number of edges")
    to_coarse: dict[int, int] = {}
    for f, c in zip(fine.colors, coarse.colors):
        prev = to_coarse.setdefault(f, c)
        if prev != c:
            return False
    return True


def check_witness(g: Graph, chi: EdgeColoring, w: RainbowWitness) -> bool:
    """Validate a witness against its graph and coloring."""
    path = w.path
    if len(set(path)) != len(path):
        return False
    if any(not (0 <= v < g.n) for v in path):
        return False
    cols = []
    for a, b in zip(path, path[1:]):
        e = (a, b) if a < b else (b, a)
        if e not in g.edge_index:
            return False
        cols.append(chi.colors[g.edge_index[e]])
    if len(set(cols)) != len(cols):
        return False
    return tuple(cols) == w.colors_used
