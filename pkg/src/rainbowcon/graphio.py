"""Text formats for graphs, pair lists and partitions.

Graph files follow the DIMACS habit of 1-based vertices:

    c optional comment
    p graph <n> <m>
    e <u> <v>            uncolored edge
    e <u> <v> <color>    colored edge (color ids stay 0-based)
    e <u> <v> *          edge left uncolored in a partial coloring

Mixing colored and ``*`` lines encodes a partial coloring; all-``*`` or no
third field encodes an uncolored graph.  Writers emit edges in canonical
order so serialize -> parse round-trips preserve edge indices byte-stably.

Pairs files hold ``<u> <v>`` lines (1-based).  Partition files hold one
``c <class-id> <v1> <v2> ...`` line per class (1-based vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    EdgeColoring,
    Graph,
    GraphError,
    PairSet,
    PartialEdgeColoring,
    Partition,
    build_graph,
    make_pair_set,
    make_partition,
)


class FormatError(ValueError):
    """Raised for malformed input files."""


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    coloring: EdgeColoring | None
    partial: PartialEdgeColoring | None


def graph_to_text(
    g: Graph,
    coloring: EdgeColoring | None = None,
    partial: PartialEdgeColoring | None = None,
    comments: Sequence[str] = (),
) -> str:
    if coloring is not None and partial is not None:
        raise ValueError("pass a total or a partial coloring, not both")
    for col, name in ((coloring, "coloring"), (partial, "partial")):
        if col is not None and len(col.colors) != g.m:
            raise ValueError(f"{name} has {len(col.colors)} entries for {g.m} edges")
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p graph {g.n} {g.m}")
    for i, (u, v) in enumerate(g.edges):
        if coloring is not None:
            lines.append(f"e {u + 1} {v + 1} {coloring.colors[i]}")
        elif partial is not None:
            c = partial.colors[i]
            lines.append(f"e {u + 1} {v + 1} {'*' if c is None else c}")
        else:
            lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> LoadedGraph:
    n = m = -1
    rows: list[tuple[int, int, str | None]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise FormatError(f"line {lineno}: duplicate p line")
            if len(parts) != 4 or parts[1] != "graph":
                raise FormatError(f"line {lineno}: expected 'p graph <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
        elif parts[0] == "e":
            if n < 0:
                raise FormatError(f"line {lineno}: edge before p line")
            if len(parts) not in (3, 4):
                raise FormatError(f"line {lineno}: expected 'e <u> <v> [color|*]'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoint") from None
            rows.append((u - 1, v - 1, parts[3] if len(parts) == 4 else None))
        else:
            raise FormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n < 0:
        raise FormatError("missing p line")
    if len(rows) != m:
        raise FormatError(f"header claims {m} edges, found {len(rows)}")
    try:
        g = build_graph(n, [(u, v) for u, v, _ in rows])
    except GraphError as exc:
        raise FormatError(str(exc)) from None

    marks = [mark for _, _, mark in rows]
    if all(mark is None for mark in marks):
        return LoadedGraph(g, None, None)
    if any(mark is None for mark in marks):
        raise FormatError("mix of colored and bare edge lines; use '*' for uncolored")

    by_edge: dict[tuple[int, int], str] = {}
    for u, v, mark in rows:
        e = (u, v) if u < v else (v, u)
        by_edge[e] = mark  # type: ignore[assignment]
    values: list[int | None] = []
    for e in g.edges:
        mark = by_edge[e]
        if mark == "*":
            values.append(None)
        else:
            try:
                values.append(int(mark))
            except ValueError:
                raise FormatError(f"bad color {mark!r} on edge {e}") from None
    present = [c for c in values if c is not None]
    if present and min(present) < 0:
        raise FormatError("negative color id")
    num_colors = (max(present) + 1) if present else 0
    if any(c is None for c in values):
        return LoadedGraph(
            g, None, PartialEdgeColoring(tuple(values), num_colors)
        )
    return LoadedGraph(
        g, EdgeColoring(tuple(present), num_colors), None
    )


def write_graph_file(
    path: str,
    g: Graph,
    coloring: EdgeColoring | None = None,
    partial: PartialEdgeColoring | None = None,
    comments: Sequence[str] = (),
) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(graph_to_text(g, coloring, partial, comments))


def read_graph_file(path: str) -> LoadedGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph_text(fh.read())


def pairs_to_text(pairs: PairSet) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in pairs)


def parse_pairs_text(text: str, n: int) -> PairSet:
    raw: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer pair") from None
        raw.append((u - 1, v - 1))
    try:
        return make_pair_set(n, raw)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def read_pairs_file(path: str, n: int) -> PairSet:
    with open(path, "r", encoding="ascii") as fh:
        return parse_pairs_text(fh.read(), n)


def partition_to_text(pi: Partition) -> str:
    lines = []
    for i, cls in enumerate(pi.classes, start=1):
        lines.append("c " + " ".join(str(x) for x in (i, *[v + 1 for v in cls])))
    return "\n".join(lines) + "\n" if lines else ""


def parse_partition_text(text: str, n: int) -> Partition:
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "c":
            raise FormatError(f"line {lineno}: class lines start with 'c'")
        if len(parts) < 3:
            raise FormatError(f"line {lineno}: expected 'c <class-id> <v1> ...'")
        try:
            cid = int(parts[1])
            members = [int(x) - 1 for x in parts[2:]]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field") from None
        rows.append((cid, members))
    rows.sort(key=lambda r: r[0])
    try:
        return make_partition(n, [members for _, members in rows])
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def read_partition_file(path: str, n: int) -> Partition:
    with open(path, "r", encoding="ascii") as fh:
        return parse_partition_text(fh.read(), n)
