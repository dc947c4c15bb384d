"""Command-line front end with JSON input and output.

Subcommands: gen, distance, transform, reduce, solvable, puzzle, oracle.
Machine-readable JSON goes to stdout; human messages go to stderr.  Exit
codes: 0 success or yes, 1 no/unsolvable, 2 usage or input error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .exact_path import path_distance
from .exact_star import star_distance
from .graph import Graph, is_connected, is_path, is_tree, make_family, path_vertex_order
from .jsonio import (
    flip_sequence_to_json,
    graph_from_json,
    graph_to_json,
    instance_from_json,
    instance_to_json,
    labeling_from_json,
)
from .labeling import apply_vertex_sequence
from .oracle import (
    CAPACITY_LIMIT,
    CapacityError,
    ConfigurationSpace,
    bfs_distance,
    diameter,
    distance_distribution,
    reachable_in_exactly,
    shortest_flip_sequence,
)
from .privileged import PrivilegedInstance, puzzle_instance, resolve_solvable
from .reductions import EdgeInstance, VertexInstance, edge_to_vertex, vertex_to_edge
from .transform import spanning_tree_transform

_SHIFTED_KEYS = {"edges", "labels", "edge_labels", "flips", "privileged", "witness"}


def _one_based(obj: Any, shift: bool = False) -> Any:
    if isinstance(obj, dict):
        return {k: _one_based(v, shift or k in _SHIFTED_KEYS) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_one_based(x, shift) for x in obj]
    if isinstance(obj, int) and shift:
        return obj + 1
    return obj


def _emit(obj: Any, one_based: bool) -> None:
    if one_based:
        obj = _one_based(obj)
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _load_json(path: str) -> Any:
    with open(path) as fh:
        return json.load(fh)


def _load_graph(path: str) -> Graph:
    return graph_from_json(_load_json(path))


def _load_vertex_labels(path: str) -> tuple[int, ...]:
    kind, labels = labeling_from_json(_load_json(path))
    if kind != "vertex":
        raise ValueError(f"{path}: expected a vertex labeling")
    return labels


def _load_board(source: str) -> Any:
    try:
        return _load_json(source)
    except OSError:
        return json.loads(source)


def _capacity(args: argparse.Namespace) -> int:
    if args.capacity_override is not None:
        print(f"warning: capacity override {args.capacity_override}", file=sys.stderr)
        return args.capacity_override
    return CAPACITY_LIMIT


def _star_center(g: Graph) -> int | None:
    if g.n >= 2 and is_tree(g):
        centers = [v for v in range(g.n) if g.degree(v) == g.n - 1]
        if centers:
            return centers[0]
    return None


def _cmd_gen(args: argparse.Namespace) -> tuple[Any, int]:
    g = make_family(args.family, args.n, seed=args.seed)
    return graph_to_json(g), 0


def _cmd_distance(args: argparse.Namespace) -> tuple[Any, int]:
    g = _load_graph(args.graph)
    frm = _load_vertex_labels(args.source)
    to = _load_vertex_labels(args.target)
    method = args.method
    center = _star_center(g)

    if method in ("auto", "path") and is_path(g):
        order = path_vertex_order(g)
        d = path_distance([frm[v] for v in order], [to[v] for v in order])
        return {"distance": d, "exact": True, "method": "path"}, 0
    if method == "path":
        raise ValueError("--method path needs a path graph")
    if method in ("auto", "star") and center is not None:
        order = [center] + [v for v in range(g.n) if v != center]
        d = star_distance([frm[v] for v in order], [to[v] for v in order])
        return {"distance": d, "exact": True, "method": "star"}, 0
    if method == "star":
        raise ValueError("--method star needs a star graph")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    capacity = _capacity(args)
    if method in ("auto", "bfs"):
        space = ConfigurationSpace(g, capacity=capacity)
        try:
            d = bfs_distance(space, frm, to)
            return {"distance": d, "exact": True, "method": "bfs"}, 0
        except CapacityError:
            if method == "bfs":
                raise
    flips = spanning_tree_transform(g, frm, to)
    return {"distance": len(flips), "exact": False, "method": "tree-bound"}, 0


def _cmd_transform(args: argparse.Namespace) -> tuple[Any, int]:
    g = _load_graph(args.graph)
    frm = _load_vertex_labels(args.source)
    to = _load_vertex_labels(args.target)
    if args.method == "bfs":
        space = ConfigurationSpace(g, capacity=_capacity(args))
        flips = shortest_flip_sequence(space, frm, to)
        if flips is None:
            raise ValueError("graph is not connected")
    else:
        flips = spanning_tree_transform(g, frm, to)
    if apply_vertex_sequence(g, frm, flips) != to:
        raise RuntimeError("self-check failed: sequence does not reach the target")
    if args.verbose:
        print(f"{len(flips)} flips via {args.method}", file=sys.stderr)
    return flip_sequence_to_json(flips), 0


def _cmd_reduce(args: argparse.Namespace) -> tuple[Any, int]:
    inst = instance_from_json(_load_json(args.instance))
    if isinstance(inst, PrivilegedInstance):
        raise ValueError("reduce expects a plain vertex or edge instance")
    if args.direction == "v2e":
        if not isinstance(inst, VertexInstance):
            raise ValueError("v2e expects a vertex instance")
        return instance_to_json(vertex_to_edge(inst)), 0
    if not isinstance(inst, EdgeInstance):
        raise ValueError("e2v expects an edge instance")
    return instance_to_json(edge_to_vertex(inst)), 0


def _cmd_solvable(args: argparse.Namespace) -> tuple[Any, int]:
    inst = instance_from_json(_load_json(args.instance))
    if not isinstance(inst, PrivilegedInstance):
        raise ValueError('solvable expects an instance with a "privileged" set')
    answer, method, witness = resolve_solvable(inst, want_witness=True,
                                               capacity=_capacity(args))
    out = {
        "answer": answer,
        "method": method,
        "witness": [list(f) for f in witness] if witness is not None else None,
    }
    return out, 0 if answer == "yes" else 1


def _cmd_puzzle(args: argparse.Namespace) -> tuple[Any, int]:
    inst = puzzle_instance(args.side, _load_board(args.b1), _load_board(args.b2),
                           args.k)
    return instance_to_json(inst), 0


def _cmd_oracle(args: argparse.Namespace) -> tuple[Any, int]:
    g = _load_graph(args.graph)
    privileged = None
    if args.privileged:
        privileged = [int(x) for x in args.privileged.split(",")]
    space = ConfigurationSpace(g, mode=args.mode, privileged=privileged,
                               capacity=_capacity(args))
    if args.diameter:
        return {"diameter": diameter(space)}, 0
    if args.distribution:
        hist = distance_distribution(space)
        return {"distribution": {str(k): v for k, v in hist.items()}}, 0
    if not (args.source and args.target):
        raise ValueError("oracle needs --from and --to, or --diameter/--distribution")
    kind, frm = labeling_from_json(_load_json(args.source))
    _, to = labeling_from_json(_load_json(args.target))
    d = bfs_distance(space, frm, to)
    out: dict[str, Any] = {"distance": d}
    if args.t is not None:
        out["reachable_in_exactly"] = reachable_in_exactly(space, frm, to, args.t)
    return out, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relabel",
        description="Minimum-flip distances and flip sequences for graph relabeling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--one-based", action="store_true",
                       help="render labels, vertices, and flips 1-based")
        p.add_argument("--capacity-override", type=int, default=None,
                       help="raise the oracle capacity guard (states)")
        p.add_argument("--verbose", action="store_true",
                       help="human-readable notes on stderr")

    p = sub.add_parser("gen", help="generate a canonical family graph")
    p.add_argument("--family", required=True,
                   choices=["path", "star", "cycle", "grid", "complete",
                            "random_connected"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("distance", help="minimum flips between vertex labelings")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--method", default="auto",
                   choices=["auto", "path", "star", "bfs", "tree-bound"])
    common(p)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("transform", help="flip sequence between vertex labelings")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--method", default="tree-bound", choices=["tree-bound", "bfs"])
    common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("reduce", help="map instances between vertex and edge problems")
    p.add_argument("--direction", required=True, choices=["v2e", "e2v"])
    p.add_argument("--instance", required=True)
    common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solvable", help="decide a privileged-labels instance")
    p.add_argument("--instance", required=True)
    common(p)
    p.set_defaults(func=_cmd_solvable)

    p = sub.add_parser("puzzle", help="build a privileged instance from puzzle boards")
    p.add_argument("--side", type=int, required=True)
    p.add_argument("--b1", required=True, help="board file or inline JSON")
    p.add_argument("--b2", required=True, help="board file or inline JSON")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_puzzle)

    p = sub.add_parser("oracle", help="exhaustive BFS over the configuration space")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", default="vertex", choices=["vertex", "edge"])
    p.add_argument("--privileged", default=None,
                   help="comma-separated privileged labels")
    p.add_argument("--from", dest="source", default=None)
    p.add_argument("--to", dest="target", default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--distribution", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(out, args.one_based)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
