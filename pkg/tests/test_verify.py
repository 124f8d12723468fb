"""Verifier correctness against a brute-force all-simple-paths oracle."""

import random

import pytest

from helpers import brute_rainbow_path, random_coloring
from rainbowcon.graphs import (
    EdgeColoring,
    GraphError,
    build_graph,
    cycle_graph,
    random_connected_graph,
)
from rainbowcon.verify import (
    RainbowWitness,
    check_witness,
    is_rainbow_connected,
    is_refinement,
    pairs_rainbow_connected,
    rainbow_path_exists,
)
from rainbowcon.graphs import make_pair_set


def test_c4_alternating_two_coloring():
    g = cycle_graph(4)
    # edges sorted: (0,1) (0,3) (1,2) (2,3); alternate colors around the cycle
    chi = EdgeColoring((0, 1, 1, 0), 2)
    rep = is_rainbow_connected(g, chi)
    assert rep.ok and rep.failing_pair is None
    assert bool(rep)


def test_c4_monochrome_fails_on_first_pair():
    g = cycle_graph(4)
    chi = EdgeColoring((0, 0, 0, 0), 1)
    rep = is_rainbow_connected(g, chi)
    assert not rep.ok
    assert rep.failing_pair == (0, 2)


def test_witness_structure():
    g = cycle_graph(5)
    chi = EdgeColoring((0, 1, 1, 2, 0), 3)
    w = rainbow_path_exists(g, chi, 0, 2)
    assert w is not None
    assert w.path[0] == 0 and w.path[-1] == 2
    assert len(set(w.colors_used)) == len(w.colors_used)
    assert check_witness(g, chi, w)
    assert rainbow_path_exists(g, chi, 3, 3).path == (3,)


def test_check_witness_rejects_garbage():
    g = cycle_graph(4)
    chi = EdgeColoring((0, 1, 1, 0), 2)
    ok = rainbow_path_exists(g, chi, 0, 2)
    assert check_witness(g, chi, ok)
    bad_vertex = RainbowWitness((0, 5), (0,))
    assert not check_witness(g, chi, bad_vertex)
    not_edge = RainbowWitness((0, 2), (0,))
    assert not check_witness(g, chi, not_edge)
    wrong_colors = RainbowWitness(ok.path, tuple(c + 0 for c in ok.colors_used[:-1]) + (9,))
    assert not check_witness(g, chi, wrong_colors)
    repeated = RainbowWitness((0, 1, 0), (0, 0))
    assert not check_witness(g, chi, repeated)


def test_endpoint_validation():
    g = cycle_graph(4)
    chi = EdgeColoring((0, 1, 1, 0), 2)
    with pytest.raises(GraphError):
        rainbow_path_exists(g, chi, 0, 4)
    with pytest.raises(GraphError):
        is_rainbow_connected(g, EdgeColoring((0,), 1))


def test_agrees_with_brute_oracle_small_palettes():
    rng = random.Random(202)
    for trial in range(150):
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng, extra_p=0.35)
        k = rng.randint(1, 10)
        chi = random_coloring(g, k, rng)
        s, t = rng.randrange(n), rng.randrange(n)
        got = rainbow_path_exists(g, chi, s, t)
        want = brute_rainbow_path(g, chi, s, t)
        assert (got is not None) == want, (trial, g.edges, chi.colors, s, t)
        if got is not None:
            assert check_witness(g, chi, got)


def test_dp_and_dfs_regimes_agree():
    # force each regime via the threshold argument on identical inputs
    rng = random.Random(77)
    for trial in range(120):
        n = rng.randint(2, 8)
        g = random_connected_graph(n, rng, extra_p=0.3)
        k = rng.randint(1, 10)
        chi = random_coloring(g, k, rng)
        s, t = rng.randrange(n), rng.randrange(n)
        via_dp = rainbow_path_exists(g, chi, s, t, dp_color_threshold=64)
        via_dfs = rainbow_path_exists(g, chi, s, t, dp_color_threshold=0)
        assert (via_dp is None) == (via_dfs is None)
        for w in (via_dp, via_dfs):
            if w is not None:
                assert check_witness(g, chi, w)


def test_pairs_subset_check():
    g = cycle_graph(6)
    chi = EdgeColoring((0, 1, 1, 2, 2, 0), 3)
    near = make_pair_set(6, [(0, 1), (1, 3)])
    assert pairs_rainbow_connected(g, chi, near)
    rep = is_rainbow_connected(g, chi)
    if not rep.ok:
        assert not pairs_rainbow_connected(g, chi, make_pair_set(6, [rep.failing_pair]))


def test_refinement_relation():
    fine = EdgeColoring((0, 1, 2, 3), 4)
    coarse = EdgeColoring((0, 0, 1, 1), 2)
    assert is_refinement(fine, coarse)
    assert not is_refinement(coarse, fine)
    same = EdgeColoring((0, 0, 1, 1), 2)
    assert is_refinement(coarse, same)
    with pytest.raises(GraphError):
        is_refinement(fine, EdgeColoring((0,), 1))


def test_refinement_preserves_rainbow_connectivity():
    # coarse rainbow connected + fine refines coarse => fine rainbow connected
    rng = random.Random(31)
    checked = 0
    while checked < 100:
        n = rng.randint(2, 10)
        g = random_connected_graph(n, rng, extra_p=0.4)
        k = rng.randint(1, 5)
        coarse = random_coloring(g, k, rng)
        if not is_rainbow_connected(g, coarse):
            continue
        # refine by splitting each coarse class randomly in two
        split = [rng.randrange(2) for _ in range(k)]
        fine_ids = {}
        fine_colors = []
        for c in coarse.colors:
            key = (c, split[c] if rng.random() < 0.5 else 0)
            fine_ids.setdefault(key, len(fine_ids))
            fine_colors.append(fine_ids[key])
        fine = EdgeColoring(tuple(fine_colors), max(fine_ids.values()) + 1)
        assert is_refinement(fine, coarse)
        assert is_rainbow_connected(g, fine).ok, (g.edges, coarse, fine)
        checked += 1
