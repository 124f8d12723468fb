"""Compilers from 3-CNF into rainbow-connectivity hardness instances.

Three constructions:

* gadget_extend_rc2: a partially 2-colored graph whose uncolored edges
  (one per variable) admit a rainbow-connecting completion iff the formula
  is satisfiable.
* gadget_st_rainbow: a colored layered graph with designated s, t such
  that a rainbow s-t path exists iff the formula is satisfiable.
* gadget_verify_wrap: wraps any colored graph with an s-t query into a
  slightly larger colored graph that is rainbow connected iff the query
  holds, reducing path existence to all-pairs verification.

Every vertex and color id is allocated in a fixed documented order, and
each gadget carries a legend mapping ids to roles for file emission.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .cnf import Cnf3, CnfError, is_normalized
from .graphs import (
    EdgeColoring,
    Graph,
    GraphError,
    PartialEdgeColoring,
    build_graph,
)


@dataclass(frozen=True)
class ExtendGadget:
    """Partial-2-coloring hardness instance.

    Vertices: clause vertices 0..m-1, variable vertices m..m+n-1, then the
    apex.  The two cliques and the membership edges are pre-colored; the n
    apex edges {x_j, apex} are the only uncolored ones.
    """

    graph: Graph
    partial: PartialEdgeColoring
    clause_vertices: tuple[int, ...]
    var_vertices: tuple[int, ...]
    apex: int

    def vertex_role(self, v: int) -> str:
        if v == self.apex:
            return "apex"
        if v < len(self.clause_vertices):
            return f"clause {v + 1}"
        return f"var {v - len(self.clause_vertices) + 1}"


def gadget_extend_rc2(phi: Cnf3) -> ExtendGadget:
    """Compile a normalized 3-CNF into a partial 2-coloring instance.

    Membership edge {clause, var} is colored 0 when the variable occurs
    positively in the clause and 1 when negatively, so a clause containing
    a variable in both polarities has no consistent edge color and is
    rejected (normalize_cnf never removes such tautologies; callers must).
    """
    if not is_normalized(phi):
        raise CnfError("gadget_extend_rc2 requires a normalized formula")
    m, n = len(phi.clauses), phi.num_vars
    clause_vs = tuple(range(m))
    var_vs = tuple(range(m, m + n))
    apex = m + n

    membership: dict[tuple[int, int], int] = {}
    for ci, clause in enumerate(phi.clauses):
        for lit in clause:
            xv = var_vs[abs(lit) - 1]
            color = 0 if lit > 0 else 1
            key = (ci, xv)
            if membership.setdefault(key, color) != color:
                raise CnfError(
                    f"clause {ci + 1} holds variable {abs(lit)} in both "
                    "polarities; membership edge color would be ambiguous"
                )

    edges: list[tuple[int, int]] = []
    colors: list[int | None] = []
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((i, j))
            colors.append(0)
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((var_vs[i], var_vs[j]))
            colors.append(0)
    for key, color in membership.items():
        edges.append(key)
        colors.append(color)
    for xv in var_vs:
        edges.append((xv, apex))
        colors.append(None)

    g = build_graph(apex + 1, edges)
    # colors list and edge list are parallel; reorder into canonical slots
    ordered: list[int | None] = [None] * g.m
    for e, c in zip(edges, colors):
        ordered[g.edge_index[e]] = c
    return ExtendGadget(
        g,
        PartialEdgeColoring(tuple(ordered), 2),
        clause_vs,
        var_vs,
        apex,
    )


@dataclass(frozen=True)
class StGadget:
    """Rainbow s-t path hardness instance.

    Layer 0 is {s}, layers 1..m hold three literal-gadget paths each, layer
    m+1 is {t}.  The a-th positive occurrence of variable j is a path whose
    b-th edge carries the shared color alpha(j, a, b); the b-th negative
    occurrence is a path whose a-th edge carries the same color.  A rainbow
    s-t path can therefore use at most one polarity of each variable, and
    crossing edges (all fresh distinct colors) never interfere.
    """

    graph: Graph
    coloring: EdgeColoring
    s: int
    t: int
    color_legend: Mapping[int, str]
    vertex_legend: Mapping[int, str]


def gadget_st_rainbow(phi: Cnf3) -> StGadget:
    if not is_normalized(phi):
        raise CnfError("gadget_st_rainbow requires a normalized formula")
    m, n = len(phi.clauses), phi.num_vars

    # occurrence counts per variable: k positive, l negative
    kpos = [0] * (n + 1)
    lneg = [0] * (n + 1)
    for clause in phi.clauses:
        for lit in clause:
            if lit > 0:
                kpos[lit] += 1
            else:
                lneg[-lit] += 1

    # shared colors alpha(j, a, b), allocated by variable then (a, b)
    alpha: dict[tuple[int, int, int], int] = {}
    color_legend: dict[int, str] = {}
    next_color = 0
    for j in range(1, n + 1):
        for a in range(1, kpos[j] + 1):
            for b in range(1, lneg[j] + 1):
                alpha[(j, a, b)] = next_color
                color_legend[next_color] = f"shared var {j} occ {a} {b}"
                next_color += 1

    vertex_legend: dict[int, str] = {0: "s"}
    s = 0
    next_vertex = 1
    edges: list[tuple[int, int]] = []
    edge_colors: dict[tuple[int, int], int] = {}

    def add_edge(u: int, v: int, color: int) -> None:
        e = (u, v) if u < v else (v, u)
        edges.append(e)
        edge_colors[e] = color

    pos_seen = [0] * (n + 1)
    neg_seen = [0] * (n + 1)
    prev_exits = [s]
    entries_exits: list[tuple[list[int], list[int]]] = []
    for ci, clause in enumerate(phi.clauses):
        entries: list[int] = []
        exits: list[int] = []
        for li, lit in enumerate(clause):
            j = abs(lit)
            if lit > 0:
                pos_seen[j] += 1
                a = pos_seen[j]
                length = lneg[j]
                tags = [alpha[(j, a, b)] for b in range(1, length + 1)]
            else:
                neg_seen[j] += 1
                b = neg_seen[j]
                length = kpos[j]
                tags = [alpha[(j, a, b)] for a in range(1, length + 1)]
            verts = list(range(next_vertex, next_vertex + length + 1))
            next_vertex += length + 1
            for pos, v in enumerate(verts):
                vertex_legend[v] = (
                    f"clause {ci + 1} lit {li + 1} ({lit}) node {pos + 1}"
                )
            for idx in range(length):
                add_edge(verts[idx], verts[idx + 1], tags[idx])
            entries.append(verts[0])
            exits.append(verts[-1])
        entries_exits.append((entries, exits))

    t = next_vertex
    vertex_legend[t] = "t"
    next_vertex += 1

    # crossing edges, fresh colors, layer by layer
    layer_entries = [e for e, _ in entries_exits] + [[t]]
    layer_exits = [[s]] + [x for _, x in entries_exits]
    for layer in range(len(layer_entries)):
        for u in layer_exits[layer]:
            for v in layer_entries[layer]:
                add_edge(u, v, next_color)
                color_legend[next_color] = "fresh"
                next_color += 1

    g = build_graph(next_vertex, edges)
    ordered = [0] * g.m
    for e, c in edge_colors.items():
        ordered[g.edge_index[e]] = c
    return StGadget(
        g,
        EdgeColoring(tuple(ordered), next_color),
        s,
        t,
        color_legend,
        vertex_legend,
    )


@dataclass(frozen=True)
class WrapGadget:
    graph: Graph
    coloring: EdgeColoring
    vertex_legend: Mapping[int, str]


def gadget_verify_wrap(
    g: Graph, chi: EdgeColoring, s: int, t: int
) -> WrapGadget:
    """Reduce “rainbow s-t path in (g, chi)” to all-pairs verification.

    The wrapped graph keeps g and its colors, adds pendant vertices s', t',
    a hub adjacent to every original vertex, and a clique of superscripted
    companions; four fresh colors c1..c4 lock every new pair's rainbow
    routes through the s-t query.  Ordering: original vertices keep ids
    (position 1 is s, position n is t), then s', t', hub, then companions.
    """
    if s == t or not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphError(f"need distinct in-range s, t; got {s}, {t}")
    if len(chi.colors) != g.m:
        raise GraphError("coloring does not match the graph")
    n = g.n
    # v_1 = s, v_n = t, the rest keep ascending order in between
    middle = [v for v in range(n) if v not in (s, t)]
    order = [s] + middle + [t]
    pos = {v: i + 1 for i, v in enumerate(order)}  # 1-based positions

    sp = n
    tp = n + 1
    hub = n + 2
    vertex_legend = {sp: "s-pendant", tp: "t-pendant", hub: "hub"}
    for v in range(n):
        vertex_legend[v] = f"original {v + 1}" + (
            " (s)" if v == s else " (t)" if v == t else ""
        )

    sup: dict[tuple[int, int], int] = {}
    next_vertex = n + 3
    for i in range(1, n + 1):
        for a in (1, 2):
            if (i, a) in (((1, 2)), ((n, 1))):
                continue  # companions v_1^2 and v_n^1 do not exist
            sup[(i, a)] = next_vertex
            vertex_legend[next_vertex] = f"companion {i}^{a}"
            next_vertex += 1

    c1 = chi.num_colors
    c2, c3, c4 = c1 + 1, c1 + 2, c1 + 3
    edges: list[tuple[int, int]] = list(g.edges)
    colors: dict[tuple[int, int], int] = {
        e: chi.colors[i] for i, e in enumerate(g.edges)
    }

    def add(u: int, v: int, color: int) -> None:
        e = (u, v) if u < v else (v, u)
        edges.append(e)
        colors[e] = color

    add(t, tp, c1)
    add(s, sp, c2)
    add(s, hub, c1)
    add(t, hub, c2)
    for v in range(n):
        i = pos[v]
        if 2 <= i <= n - 1:
            add(v, hub, c3)
        if i <= n - 1:
            add(v, sup[(i, 1)], c1)
        if i >= 2:
            add(v, sup[(i, 2)], c2)
    comp = sorted(sup.values())
    for x in range(len(comp)):
        for y in range(x + 1, len(comp)):
            add(comp[x], comp[y], c4)

    wrapped = build_graph(next_vertex, edges)
    ordered = [0] * wrapped.m
    for e, c in colors.items():
        ordered[wrapped.edge_index[e]] = c
    return WrapGadget(
        wrapped, EdgeColoring(tuple(ordered), c4 + 1), vertex_legend
    )


def legend_comments(obj: ExtendGadget | StGadget | WrapGadget) -> list[str]:
    """Render a gadget legend as ``role ...`` comment bodies."""
    out: list[str] = []
    if isinstance(obj, ExtendGadget):
        for v in range(obj.graph.n):
            out.append(f"role vertex {v + 1} {obj.vertex_role(v)}")
    else:
        for v in range(obj.graph.n):
            out.append(f"role vertex {v + 1} {obj.vertex_legend[v]}")
        if isinstance(obj, StGadget):
            for cid in sorted(obj.color_legend):
                out.append(f"role color {cid} {obj.color_legend[cid]}")
    return out
