"""Command-line interface.

Exit codes: 0 = yes/success, 1 = no/absent, 2 = usage or input error.
All randomized commands are deterministic given --seed, and --threads N
changes nothing but is accepted for script compatibility (the
implementation is sequential; output is identical for every N).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphio
from .cnf import CnfError, is_normalized, parse_cnf
from .gadgets import (
    gadget_extend_rc2,
    gadget_st_rainbow,
    gadget_verify_wrap,
    legend_comments,
)
from .graphs import GraphError, gen_named
from .graphio import FormatError
from .probcolor import (
    derand_8_coloring,
    derand_rc3,
    las_vegas_rc3,
    partition_pipeline,
    random_k_coloring,
)
from .solver import decide_rc_k, extend_rc2, rc_exact, subset_rc2, tree_coloring
from .verify import is_rainbow_connected, pairs_rainbow_connected, rainbow_path_exists

SCALE_NOTE = (
    "exact search is exponential: keep m at or below ~18 edges for k up "
    "to 4 (the canonical-order search space grows like restricted-growth "
    "strings over the edges)"
)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _write_or_print(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> graphio.LoadedGraph:
    return graphio.read_graph_file(path)


def _cmd_gen(args) -> int:
    g = gen_named(args.kind, args.params, seed=args.seed)
    _write_or_print(args, graphio.graph_to_text(g))
    return 0


def _cmd_reduce(args) -> int:
    if args.gadget == "verify-wrap":
        if args.s is None or args.t is None:
            return _fail("verify-wrap needs --s and --t")
        loaded = _load(args.input)
        if loaded.coloring is None:
            return _fail("verify-wrap needs a totally colored graph")
        s, t = args.s - 1, args.t - 1
        wrapped = gadget_verify_wrap(loaded.graph, loaded.coloring, s, t)
        text = graphio.graph_to_text(
            wrapped.graph, wrapped.coloring, comments=legend_comments(wrapped)
        )
        _write_or_print(args, text)
        return 0
    with open(args.input, "r", encoding="ascii") as fh:
        phi = parse_cnf(fh.read())
    if not is_normalized(phi):
        return _fail(
            "formula is not normalized (every variable must occur in both "
            "polarities); normalize before compiling"
        )
    if args.gadget == "extend-rc2":
        gadget = gadget_extend_rc2(phi)
        text = graphio.graph_to_text(
            gadget.graph, partial=gadget.partial, comments=legend_comments(gadget)
        )
    else:  # st-path
        st = gadget_st_rainbow(phi)
        comments = legend_comments(st) + [
            f"role s {st.s + 1}",
            f"role t {st.t + 1}",
        ]
        text = graphio.graph_to_text(st.graph, st.coloring, comments=comments)
    _write_or_print(args, text)
    return 0


def _cmd_verify(args) -> int:
    loaded = _load(args.graph)
    if loaded.coloring is None:
        return _fail("verify needs a totally colored graph")
    g, chi = loaded.graph, loaded.coloring
    if args.st is not None:
        s, t = args.st[0] - 1, args.st[1] - 1
        if not (0 <= s < g.n and 0 <= t < g.n):
            return _fail(f"--st vertices out of range 1..{g.n}")
        w = rainbow_path_exists(g, chi, s, t)
        if w is None:
            _emit(args, {"answer": False}, ["no-rainbow-path"])
            return 1
        path1 = [v + 1 for v in w.path]
        _emit(
            args,
            {"answer": True, "witness_path": path1},
            ["rainbow-path " + " ".join(map(str, path1))],
        )
        return 0
    if args.pairs is not None:
        pairs = graphio.read_pairs_file(args.pairs, g.n)
        ok = pairs_rainbow_connected(g, chi, pairs)
        _emit(
            args,
            {"answer": ok},
            ["pairs-rainbow-connected" if ok else "pairs-not-rainbow-connected"],
        )
        return 0 if ok else 1
    report = is_rainbow_connected(g, chi)
    if report.ok:
        _emit(args, {"answer": True}, ["rainbow-connected"])
        return 0
    u, v = report.failing_pair  # type: ignore[misc]
    _emit(
        args,
        {"answer": False, "failing_pair": [u + 1, v + 1]},
        [f"not-rainbow-connected first-failing {u + 1} {v + 1}"],
    )
    return 1


def _coloring_text(g, chi, extra_comments=()) -> str:
    return graphio.graph_to_text(g, chi, comments=list(extra_comments))


def _cmd_solve(args) -> int:
    loaded = _load(args.graph)
    g = loaded.graph
    res = rc_exact(g, k_max=args.max_k)
    if res is None:
        _emit(args, {"answer": None}, [f"cap-exceeded {args.max_k}"])
        return 1
    payload = {
        "answer": res.rc,
        "colors": res.witness.num_colors,
        "coloring": list(res.witness.colors),
    }
    text = _coloring_text(g, res.witness, [f"rc {res.rc}"])
    if args.json:
        print(json.dumps(payload))
    else:
        _write_or_print(args, text)
    return 0


def _cmd_decide(args) -> int:
    loaded = _load(args.graph)
    g = loaded.graph
    if args.problem == "rc2":
        chi = decide_rc_k(g, 2)
    elif args.problem == "subset-rc2":
        if args.pairs is None:
            return _fail("subset-rc2 needs --pairs FILE")
        pairs = graphio.read_pairs_file(args.pairs, g.n)
        chi = subset_rc2(g, pairs)
    else:  # extend-rc2
        partial = loaded.partial
        if partial is None:
            if loaded.coloring is not None:
                return _fail(
                    "extend-rc2 input must leave at least one edge uncolored "
                    "(use *), or be fully uncolored"
                )
            from .graphs import PartialEdgeColoring

            partial = PartialEdgeColoring((None,) * g.m, 2)
        chi = extend_rc2(g, partial)
    if chi is None:
        _emit(args, {"answer": False}, ["no"])
        return 1
    payload = {
        "answer": True,
        "colors": chi.num_colors,
        "coloring": list(chi.colors),
    }
    if args.json:
        print(json.dumps(payload))
    else:
        _write_or_print(args, _coloring_text(g, chi))
    return 0


def _cmd_color(args) -> int:
    loaded = _load(args.graph)
    g = loaded.graph
    comments: list[str] = []
    estimator = None
    verified = None
    if args.algorithm == "tree":
        chi = tree_coloring(g)
    elif args.algorithm == "random3":
        chi = random_k_coloring(g, 3, seed=args.seed)
    elif args.algorithm == "lasvegas3":
        chi = las_vegas_rc3(g, seed=args.seed, max_iters=args.max_iters)
        if chi is None:
            _emit(args, {"answer": False}, ["no-verified-coloring"])
            return 1
    elif args.algorithm == "derand3":
        trace = sys.stderr if args.trace else None
        res = derand_rc3(g, threshold=args.threshold, trace=trace)
        chi = res.coloring
        estimator = res.initial_estimator
        verified = res.verified
        comments.append(f"estimator {res.initial_estimator:.17g}")
        comments.append(f"verified {int(res.verified)}")
    elif args.algorithm in ("derand8", "pipeline"):
        if args.partition is None:
            return _fail(f"{args.algorithm} needs --partition FILE")
        pi = graphio.read_partition_file(args.partition, g.n)
        if args.algorithm == "derand8":
            trace = sys.stderr if args.trace else None
            res = derand_8_coloring(g, pi, trace=trace)
            chi = res.coloring
            estimator = res.initial_estimator
            verified = res.verified
            comments.append(f"estimator {res.initial_estimator:.17g}")
            comments.append(f"verified {int(res.verified)}")
        else:
            chi = partition_pipeline(g, pi)
            if chi is None:
                _emit(args, {"answer": False}, ["no-verified-coloring"])
                return 1
    else:
        return _fail(f"unknown algorithm {args.algorithm}")
    payload = {
        "answer": True,
        "colors": chi.num_colors,
        "coloring": list(chi.colors),
    }
    if estimator is not None:
        payload["estimator"] = estimator
    if verified is not None:
        payload["verified"] = verified
    if args.json:
        print(json.dumps(payload))
    else:
        _write_or_print(args, _coloring_text(g, chi, comments))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rainbowcon",
        description="Rainbow connectivity: generators, exact solvers, "
        "CNF gadget compilers, verifiers, and dense-graph colorings.",
    )
    top.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for compatibility; execution is sequential and "
        "output is identical for every value",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("kind", help="cycle|path|clique|star|complete_bipartite|gnp")
    p.add_argument("params", nargs="+", type=float, help="family parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("reduce", help="compile CNF or wrap a path query")
    p.add_argument("gadget", choices=["extend-rc2", "st-path", "verify-wrap"])
    p.add_argument("input", help="DIMACS CNF file, or a colored graph for verify-wrap")
    p.add_argument("--s", type=int, help="source vertex (1-based, verify-wrap)")
    p.add_argument("--t", type=int, help="target vertex (1-based, verify-wrap)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify", help="check rainbow connectivity")
    p.add_argument("graph", help="colored graph file")
    p.add_argument("--pairs", help="pairs file: check only these pairs")
    p.add_argument(
        "--st", nargs=2, type=int, metavar=("U", "V"), help="single pair (1-based)"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser(
        "solve",
        help="exact rainbow connection number",
        epilog=SCALE_NOTE,
    )
    p.add_argument("what", choices=["rc"])
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser(
        "decide",
        help="exact decision procedures",
        epilog=SCALE_NOTE,
    )
    p.add_argument("problem", choices=["rc2", "subset-rc2", "extend-rc2"])
    p.add_argument("graph", help="graph file (partial coloring for extend-rc2)")
    p.add_argument("--pairs", help="pairs file (subset-rc2)")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("color", help="coloring algorithms")
    p.add_argument(
        "algorithm",
        choices=["tree", "random3", "lasvegas3", "derand3", "derand8", "pipeline"],
    )
    p.add_argument("graph")
    p.add_argument("--partition", help="partition file (derand8, pipeline)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=100)
    p.add_argument(
        "--threshold",
        type=int,
        default=None,
        help="common-neighbor threshold for derand3 (default ceil(2 log2 n))",
    )
    p.add_argument("--trace", action="store_true", help="estimator trace to stderr")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_color)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        return _fail("--threads must be >= 1")
    try:
        return args.fn(args)
    except (GraphError, FormatError, CnfError) as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(f"cannot open {exc.filename}")


if __name__ == "__main__":
    sys.exit(main())
