"""Randomized colorings, the pessimistic estimator, and composition."""

import io
import random

import pytest

from rainbowcon.graphs import (
    EdgeColoring,
    GraphError,
    build_graph,
    clique_graph,
    complete_bipartite_graph,
    gnp_graph,
    make_partition,
    path_graph,
    star_graph,
)
from rainbowcon.probcolor import (
    A_COLORS,
    B_COLORS,
    CaseTag,
    DiameterViolation,
    EstimatorState,
    _PathFactor,
    _Product,
    compose_tree_refinement,
    connecting_tree,
    default_common_threshold,
    derand_8_coloring,
    derand_rc3,
    greedy_matching,
    las_vegas_rc3,
    pair_evidence,
    partition_pipeline,
    path_family,
    random_k_coloring,
)
from rainbowcon.verify import is_rainbow_connected, is_refinement

from helpers import clique_chain


def test_random_k_coloring_reproducible():
    g = gnp_graph(12, 0.5, seed=3)
    a = random_k_coloring(g, 5, seed=11)
    b = random_k_coloring(g, 5, seed=11)
    c = random_k_coloring(g, 5, seed=12)
    assert a == b
    assert a != c
    assert a.num_colors == 5
    assert all(0 <= x < 5 for x in a.colors)
    with pytest.raises(GraphError):
        random_k_coloring(g, 0)


def test_las_vegas_succeeds_on_clique():
    g = clique_graph(5)
    chi = las_vegas_rc3(g, seed=1, max_iters=50)
    assert chi is not None
    assert is_rainbow_connected(g, chi).ok
    again = las_vegas_rc3(g, seed=1, max_iters=50)
    assert chi == again


def test_las_vegas_gives_up_on_star():
    # a star with 9 leaves needs 8 colors, so 3 can never work
    g = star_graph(9)
    assert las_vegas_rc3(g, seed=0, max_iters=60) is None


def test_default_common_threshold():
    assert default_common_threshold(2) == 2
    assert default_common_threshold(3) == 4
    assert default_common_threshold(128) == 14
    with pytest.raises(GraphError):
        default_common_threshold(1)


def test_pair_evidence_adjacent():
    g = clique_graph(4)
    ev = pair_evidence(g, 1, 3, threshold=2)
    assert ev.tag is CaseTag.ADJACENT
    assert ev.pair == (1, 3)


def test_pair_evidence_common_neighbors():
    g = complete_bipartite_graph(2, 5)
    ev = pair_evidence(g, 0, 1, threshold=3)
    assert ev.tag is CaseTag.COMMON_NBRS
    assert ev.common == (2, 3, 4, 5, 6)


def test_pair_evidence_via_b():
    g = path_graph(4)
    ev = pair_evidence(g, 0, 3, threshold=2)
    assert ev.tag is CaseTag.VIA_B
    assert ev.a_side == (1,)
    assert ev.b_side == (2,)
    assert ev.b_map == ((1, 2),)


def test_pair_evidence_same_side_bipartite():
    # same-side pair: all neighbors shared, so below threshold the A and
    # B sides are empty but the common pool still vouches for the pair
    g = complete_bipartite_graph(3, 3)
    ev = pair_evidence(g, 0, 1, threshold=4)
    assert ev.tag is CaseTag.VIA_B
    assert ev.a_side == ()
    assert ev.b_map == ()


def test_pair_evidence_diameter_violation():
    g = path_graph(5)
    with pytest.raises(DiameterViolation):
        pair_evidence(g, 0, 4, threshold=2)
    with pytest.raises(GraphError):
        pair_evidence(g, 2, 2, threshold=2)


def brute_total(products, colors):
    out = 0.0
    for prod in products:
        x = 1.0
        for f in prod.factors:
            x *= f.value(colors)
        out += x
    return out


def test_estimator_trial_and_commit_exact():
    # triangle-ish fan: products share edges so updates must compose
    products = [
        _Product((0, 1), [_PathFactor((0, 1), 3), _PathFactor((2, 3), 3)]),
        _Product((0, 2), [_PathFactor((1, 2), 3)]),
        _Product((1, 2), [_PathFactor((0, 3), 3)]),
    ]
    state = EstimatorState(4, 3, products)
    assert state.total == pytest.approx(brute_total(products, [-1] * 4))
    rng = random.Random(7)
    for e in rng.sample(range(4), 4):
        c = rng.randrange(3)
        predicted = state.trial(e, c)
        state.commit(e, c)
        assert state.total == pytest.approx(predicted)
        ref = list(state.colors)
        assert state.total == pytest.approx(brute_total(products, ref))
    bounds = state.pair_bounds()
    assert set(bounds) == {(0, 1), (0, 2), (1, 2)}
    assert sum(bounds.values()) == pytest.approx(state.total)


def test_derand_rc3_result_shape():
    g = gnp_graph(24, 0.7, seed=5)
    buf = io.StringIO()
    res = derand_rc3(g, trace=buf)
    assert len(res.estimator_trace) == g.m + 1
    assert res.estimator_trace[0] == res.initial_estimator
    for a, b in zip(res.estimator_trace, res.estimator_trace[1:]):
        assert b <= a * (1 + 1e-9) + 1e-9
    assert res.verified == is_rainbow_connected(g, res.coloring).ok
    if res.initial_estimator < 1.0:
        assert res.verified
    lines = buf.getvalue().splitlines()
    assert len(lines) == g.m
    first = lines[0].split()
    assert first[0] == "t" and first[1] == "0"
    assert float(first[3]) == pytest.approx(res.estimator_trace[1])


def test_derand_rc3_trivial_on_clique():
    g = clique_graph(6)
    res = derand_rc3(g)
    assert res.initial_estimator == 0.0
    assert res.verified


def test_derand_rc3_needs_two_vertices():
    with pytest.raises(GraphError):
        derand_rc3(build_graph(1, []))


def test_path_family_disjoint_and_ordered():
    g = clique_graph(6)
    fam = path_family(g, 0, 5)
    assert fam.pair == (0, 5)
    assert fam.paths[0] == (0, 5)  # direct edge comes first
    used = set()
    for p in fam.paths:
        assert p[0] == 0 and p[-1] == 5
        assert len(set(p)) == len(p)
        assert len(p) <= 5
        for a, b in zip(p, p[1:]):
            e = (a, b) if a < b else (b, a)
            assert e not in used
            used.add(e)
    # all 2-paths through the 4 middle vertices fit disjointly
    assert len(fam.paths) >= 5


def test_path_family_cap():
    g = clique_graph(7)
    small = path_family(g, 0, 6, enum_cap=3)
    full = path_family(g, 0, 6)
    assert len(small.paths) <= len(full.paths)
    with pytest.raises(GraphError):
        path_family(g, 2, 2)


def test_derand8_on_cliques():
    for n in (6, 7, 8):
        g = clique_graph(n)
        pi = make_partition(n, [range(n)])
        res = derand_8_coloring(g, pi)
        assert res.verified
        assert res.coloring.num_colors == 8
        for a, b in zip(res.estimator_trace, res.estimator_trace[1:]):
            assert b <= a * (1 + 1e-9) + 1e-9


def test_derand8_fails_on_path_pair():
    # one 3-edge path cannot host a rainbow route in each 4-color half
    g = path_graph(4)
    pi = make_partition(4, [(0, 3), (1,), (2,)])
    res = derand_8_coloring(g, pi)
    assert not res.verified
    assert partition_pipeline(g, pi) is None


def test_connecting_tree_touches_every_class():
    rng = random.Random(17)
    g, pi = clique_chain([3, 4, 3], rng)
    tree = connecting_tree(g, pi)
    verts = {v for e in tree for v in e}
    class_hits = [bool(verts & set(cls)) for cls in pi.classes]
    # the root class is touched even if the tree has no edge inside it
    assert all(class_hits[1:]) and len(tree) >= len(pi.classes) - 1
    for e in tree:
        assert e in g.edge_index
    # acyclic: edge count is one less than vertex count
    assert len(verts) == len(tree) + 1


def test_connecting_tree_unreachable_class():
    g = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    pi = make_partition(6, [(0, 1, 2), (3, 4, 5)])
    with pytest.raises(GraphError):
        connecting_tree(g, pi)


def test_compose_tree_refinement():
    rng = random.Random(23)
    g, pi = clique_chain([3, 3], rng)
    chi8 = random_k_coloring(g, 8, seed=2)
    tree = connecting_tree(g, pi)
    out = compose_tree_refinement(g, chi8, tree)
    assert out.num_colors == 8 + len(tree)
    assert is_refinement(out, chi8)
    for i, (u, v) in enumerate(tree):
        assert out.colors[g.edge_index[(u, v)]] == 8 + i
    with pytest.raises(GraphError):
        compose_tree_refinement(g, random_k_coloring(g, 7, seed=2), tree)
    with pytest.raises(GraphError):
        compose_tree_refinement(g, chi8, [(0, 5)])


def test_partition_pipeline_end_to_end():
    rng = random.Random(41)
    g, pi = clique_chain([6, 7, 6], rng)
    out = partition_pipeline(g, pi)
    assert out is not None
    assert is_rainbow_connected(g, out).ok
    tree = connecting_tree(g, pi)
    assert out.num_colors == 8 + len(tree)


def test_greedy_matching_bound():
    rng = random.Random(59)
    for _ in range(50):
        a = rng.randint(1, 12)
        b = rng.randint(1, 12)
        edges = {
            (rng.randrange(a), rng.randrange(b))
            for _ in range(rng.randint(0, 40))
        }
        m = greedy_matching(a, b, sorted(edges))
        assert len(m) * (a + b) >= len(edges)
        assert len({x for x, _ in m}) == len(m)
        assert len({y for _, y in m}) == len(m)
        assert set(m) <= edges


def test_greedy_matching_dedupes_and_validates():
    m = greedy_matching(2, 2, [(0, 0), (0, 0), (1, 1)])
    assert m == [(0, 0), (1, 1)]
    with pytest.raises(GraphError):
        greedy_matching(2, 2, [(0, 2)])


def test_ab_palette_split():
    assert set(A_COLORS) | set(B_COLORS) == set(range(8))
    assert not set(A_COLORS) & set(B_COLORS)
