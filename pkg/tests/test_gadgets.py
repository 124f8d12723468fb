"""Gadget compilers: construction shape, legends, and oracle equivalence.

The fixed two-clause formula and its expected sizes come from working the
constructions out by hand; the randomized blocks check the compiled
instances against brute-force satisfiability.
"""

import random

import pytest

from rainbowcon.cnf import Cnf3, CnfError, sat_brute
from rainbowcon.gadgets import (
    gadget_extend_rc2,
    gadget_st_rainbow,
    gadget_verify_wrap,
    legend_comments,
)
from rainbowcon.graphs import GraphError, random_connected_graph
from rainbowcon.solver import extend_rc2
from rainbowcon.verify import is_rainbow_connected, rainbow_path_exists

from helpers import random_coloring, random_normalized_cnf

PHI_SAT = Cnf3(3, ((1, 2, 3), (-1, -2, -3)))
PHI_UNSAT = Cnf3(
    3,
    (
        (1, 2, 3),
        (1, 2, -3),
        (1, -2, 3),
        (1, -2, -3),
        (-1, 2, 3),
        (-1, 2, -3),
        (-1, -2, 3),
        (-1, -2, -3),
    ),
)


def test_extend_fixed_shape():
    ext = gadget_extend_rc2(PHI_SAT)
    assert ext.graph.n == 6
    assert ext.graph.m == 13
    assert ext.partial.num_colors == 2
    assert sum(c is None for c in ext.partial.colors) == 3
    assert ext.clause_vertices == (0, 1)
    assert ext.var_vertices == (2, 3, 4)
    assert ext.apex == 5


def test_extend_membership_polarity():
    ext = gadget_extend_rc2(PHI_SAT)
    g, part = ext.graph, ext.partial
    # clause vertex 0 holds every variable positively, vertex 1 negatively
    for xv in ext.var_vertices:
        assert part.colors[g.edge_index[(0, xv)]] == 0
        assert part.colors[g.edge_index[(1, xv)]] == 1
    for xv in ext.var_vertices:
        assert part.colors[g.edge_index[(xv, ext.apex)]] is None


def test_extend_vertex_roles():
    ext = gadget_extend_rc2(PHI_SAT)
    assert ext.vertex_role(0) == "clause 1"
    assert ext.vertex_role(2) == "var 1"
    assert ext.vertex_role(5) == "apex"


def test_extend_rejects_tautological_clause():
    # normalized overall, but clause 1 holds x1 in both polarities
    phi = Cnf3(2, ((1, -1, 2), (-2, 1, 1)))
    with pytest.raises(CnfError, match="both"):
        gadget_extend_rc2(phi)


def test_gadgets_reject_non_normalized():
    phi = Cnf3(2, ((1, 2, 2),))
    with pytest.raises(CnfError, match="normalized"):
        gadget_extend_rc2(phi)
    with pytest.raises(CnfError, match="normalized"):
        gadget_st_rainbow(phi)


def test_extend_oracle_agreement():
    rng = random.Random(97)
    sat_seen = unsat_seen = 0
    for _ in range(60):
        phi = random_normalized_cnf(rng)
        ext = gadget_extend_rc2(phi)
        done = extend_rc2(ext.graph, ext.partial)
        if sat_brute(phi) is not None:
            sat_seen += 1
            assert done is not None
            for i, c in enumerate(ext.partial.colors):
                if c is not None:
                    assert done.colors[i] == c
            assert is_rainbow_connected(ext.graph, done).ok
        else:
            unsat_seen += 1
            assert done is None
    assert sat_seen and unsat_seen


def test_st_fixed_shape():
    st = gadget_st_rainbow(PHI_SAT)
    assert st.graph.n == 14
    assert st.graph.m == 21
    assert st.coloring.num_colors == 18
    assert st.s == 0
    assert st.t == 13
    assert st.vertex_legend[0] == "s"
    assert st.vertex_legend[13] == "t"


def test_st_shared_colors_pair_polarities():
    st = gadget_st_rainbow(PHI_SAT)
    g, chi = st.graph, st.coloring
    # the positive x1 path edge (clause 1) and the negative x1 path edge
    # (clause 2) carry the same shared color; distinct variables never do
    c_pos_x1 = chi.colors[g.edge_index[(1, 2)]]
    c_neg_x1 = chi.colors[g.edge_index[(7, 8)]]
    assert c_pos_x1 == c_neg_x1
    c_pos_x2 = chi.colors[g.edge_index[(3, 4)]]
    assert c_pos_x2 != c_pos_x1
    assert st.color_legend[c_pos_x1] == "shared var 1 occ 1 1"


def test_st_fixed_oracles():
    st = gadget_st_rainbow(PHI_SAT)
    assert rainbow_path_exists(st.graph, st.coloring, st.s, st.t) is not None
    st2 = gadget_st_rainbow(PHI_UNSAT)
    assert rainbow_path_exists(st2.graph, st2.coloring, st2.s, st2.t) is None


def test_extend_fixed_oracles():
    ext = gadget_extend_rc2(PHI_SAT)
    assert extend_rc2(ext.graph, ext.partial) is not None
    ext2 = gadget_extend_rc2(PHI_UNSAT)
    assert extend_rc2(ext2.graph, ext2.partial) is None


def test_st_oracle_agreement():
    rng = random.Random(131)
    sat_seen = unsat_seen = 0
    for _ in range(60):
        phi = random_normalized_cnf(rng)
        st = gadget_st_rainbow(phi)
        w = rainbow_path_exists(st.graph, st.coloring, st.s, st.t)
        if sat_brute(phi) is not None:
            sat_seen += 1
            assert w is not None
        else:
            unsat_seen += 1
            assert w is None
    assert sat_seen and unsat_seen


def test_wrap_shape():
    rng = random.Random(5)
    g = random_connected_graph(6, rng)
    chi = random_coloring(g, 4, rng)
    wrap = gadget_verify_wrap(g, chi, 0, 5)
    assert wrap.graph.n == 3 * g.n + 1
    assert wrap.coloring.num_colors == chi.num_colors + 4
    # original edges keep their colors and indices refer to the same pairs
    for i, e in enumerate(g.edges):
        assert wrap.coloring.colors[wrap.graph.edge_index[e]] == chi.colors[i]
    roles = set(wrap.vertex_legend.values())
    assert {"s-pendant", "t-pendant", "hub"} <= roles


def test_wrap_validation():
    rng = random.Random(6)
    g = random_connected_graph(5, rng)
    chi = random_coloring(g, 3, rng)
    with pytest.raises(GraphError):
        gadget_verify_wrap(g, chi, 2, 2)
    with pytest.raises(GraphError):
        gadget_verify_wrap(g, chi, 0, 5)


def test_wrap_oracle_agreement():
    rng = random.Random(211)
    yes_seen = no_seen = 0
    for trial in range(40):
        n = rng.randint(3, 7)
        g = random_connected_graph(n, rng)
        chi = random_coloring(g, rng.randint(1, 8), rng)
        s = rng.randrange(n)
        t = rng.randrange(n)
        while t == s:
            t = rng.randrange(n)
        wrap = gadget_verify_wrap(g, chi, s, t)
        inner = rainbow_path_exists(g, chi, s, t) is not None
        outer = is_rainbow_connected(wrap.graph, wrap.coloring).ok
        assert inner == outer
        if inner:
            yes_seen += 1
        else:
            no_seen += 1
    assert yes_seen and no_seen


def test_legend_comments_extend():
    ext = gadget_extend_rc2(PHI_SAT)
    lines = legend_comments(ext)
    assert lines[0] == "role vertex 1 clause 1"
    assert lines[-1] == "role vertex 6 apex"
    assert len(lines) == ext.graph.n


def test_legend_comments_st():
    st = gadget_st_rainbow(PHI_SAT)
    lines = legend_comments(st)
    assert lines[0] == "role vertex 1 s"
    assert f"role vertex {st.graph.n} t" in lines
    assert any(l.startswith("role color 0 shared") for l in lines)
    assert len(lines) == st.graph.n + st.coloring.num_colors
