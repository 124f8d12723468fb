"""Compare the compiled kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Each benchmark drives one kernel on a fixed workload through both backends
and reports wall time plus the speedup.  Outputs are asserted equal, so
this doubles as a coarse agreement check.
"""

from __future__ import annotations

import time
from array import array

from rainbowcon.graphs import cycle_graph, gnp_graph
from rainbowcon.kernels import pure

try:
    from rainbowcon.kernels import _speedups as compiled
except ImportError:
    compiled = None

import random


def timed(fn, *args, repeat=3):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def bench_reach_dp():
    g = gnp_graph(96, 0.25, seed=7)
    rng = random.Random(0)
    colors = array("i", [rng.randrange(3) for _ in range(g.m)])
    indptr, nbrs, eids = g.csr

    def run(mod):
        total = 0
        for s in range(g.n):
            got = mod.rainbow_reach_dp(g.n, indptr, nbrs, eids, colors, 3, s)
            total += sum(got)
        return total

    return "reach_dp G(96,.25) 3 colors, all sources", run


def bench_path_dfs():
    g = gnp_graph(40, 0.15, seed=3)
    rng = random.Random(1)
    colors = array("i", [rng.randrange(30) for _ in range(g.m)])
    indptr, nbrs, eids = g.csr

    def run(mod):
        hits = 0
        for s in range(0, g.n, 2):
            for t in range(1, g.n, 2):
                p = mod.rainbow_path_dfs(
                    g.n, indptr, nbrs, eids, colors, 30, s, t
                )
                hits += p is not None
        return hits

    return "path_dfs G(40,.15) 30 colors, 400 pairs", run


def bench_search():
    g = cycle_graph(13)
    indptr, nbrs, eids = g.csr
    pairs = [(u, v) for u in range(13) for v in range(u + 1, 13)]

    def run(mod):
        out = mod.search_coloring(
            g.n, indptr, nbrs, eids, g.m, 6, [-1] * g.m, pairs, True
        )
        return out is None  # C13 needs 7 colors, so the k=6 search exhausts

    return "search_coloring C13 at k=6 (exhaustive)", run


def bench_search_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    from rainbowcon.graphs import build_graph

    g = build_graph(10, outer + spokes + inner)
    indptr, nbrs, eids = g.csr
    pairs = [(u, v) for u in range(10) for v in range(u + 1, 10)]

    def run(mod):
        no2 = mod.search_coloring(
            g.n, indptr, nbrs, eids, g.m, 2, [-1] * g.m, pairs, True
        )
        yes3 = mod.search_coloring(
            g.n, indptr, nbrs, eids, g.m, 3, [-1] * g.m, pairs, True
        )
        return (no2 is None, yes3 is not None)

    return "search_coloring Petersen k=2 then k=3", run


def main() -> None:
    if compiled is None:
        print("compiled backend unavailable; rebuild without RAINBOWCON_NO_EXT")
        return
    rows = []
    for make in (bench_reach_dp, bench_path_dfs, bench_search, bench_search_petersen):
        label, run = make()
        out_p, t_p = timed(run, pure)
        out_c, t_c = timed(run, compiled)
        assert out_p == out_c, f"{label}: backend outputs differ"
        rows.append((label, t_p, t_c, t_p / t_c))
    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>7}")
    for label, t_p, t_c, sp in rows:
        print(f"{label:<{width}}  {t_p:>8.4f}s  {t_c:>8.4f}s  {sp:>6.1f}x")


if __name__ == "__main__":
    main()
