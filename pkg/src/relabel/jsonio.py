"""JSON wire formats for graphs, labelings, flip sequences, and instances.

Graph:          {"n": int, "edges": [[u, v], ...]}        (0-based, u < v)
Vertex labels:  {"labels": [...]}
Edge labels:    {"edge_labels": [...]}
Flip sequence:  {"flips": [[u, v], ...]}                   (vertex flips)
                {"flips": [[e1, e2], ...], "kind": "edge"} (edge flips)
Instance:       {"kind": "vertex"|"edge", "graph": ..., "from": ..., "to": ..., "t": int}
                plus "privileged": [...] for privileged instances (t may be null).
"""

from __future__ import annotations

from typing import Any, Sequence

from .graph import Graph
from .privileged import PrivilegedInstance
from .reductions import EdgeInstance, VertexInstance


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON needs "n" and "edges"')
    return Graph(obj["n"], [tuple(e) for e in obj["edges"]])


def vertex_labeling_to_json(labels: Sequence[int]) -> dict:
    return {"labels": list(labels)}


def edge_labeling_to_json(labels: Sequence[int]) -> dict:
    return {"edge_labels": list(labels)}


def labeling_from_json(obj: Any) -> tuple[str, tuple[int, ...]]:
    """Return ("vertex"|"edge", labels) according to the key present."""
    if isinstance(obj, dict) and "labels" in obj:
        return "vertex", tuple(obj["labels"])
    if isinstance(obj, dict) and "edge_labels" in obj:
        return "edge", tuple(obj["edge_labels"])
    raise ValueError('labeling JSON needs "labels" or "edge_labels"')


def flip_sequence_to_json(flips: Sequence[Sequence[int]], kind: str = "vertex") -> dict:
    out: dict = {"flips": [list(f) for f in flips]}
    if kind == "edge":
        out["kind"] = "edge"
    return out


def flip_sequence_from_json(obj: Any) -> tuple[str, list[tuple[int, int]]]:
    if not isinstance(obj, dict) or "flips" not in obj:
        raise ValueError('flip sequence JSON needs "flips"')
    kind = obj.get("kind", "vertex")
    return kind, [tuple(f) for f in obj["flips"]]


def instance_to_json(inst: VertexInstance | EdgeInstance | PrivilegedInstance) -> dict:
    if isinstance(inst, PrivilegedInstance):
        wrap = vertex_labeling_to_json if inst.kind == "vertex" else edge_labeling_to_json
        return {
            "kind": inst.kind,
            "graph": graph_to_json(inst.graph),
            "from": wrap(inst.from_labels),
            "to": wrap(inst.to_labels),
            "privileged": sorted(inst.privileged),
            "t": inst.t,
        }
    kind = "vertex" if isinstance(inst, VertexInstance) else "edge"
    wrap = vertex_labeling_to_json if kind == "vertex" else edge_labeling_to_json
    return {
        "kind": kind,
        "graph": graph_to_json(inst.graph),
        "from": wrap(inst.from_labels),
        "to": wrap(inst.to_labels),
        "t": inst.t,
    }


def instance_from_json(obj: Any) -> VertexInstance | EdgeInstance | PrivilegedInstance:
    if not isinstance(obj, dict):
        raise ValueError("instance JSON must be an object")
    for key in ("kind", "graph", "from", "to"):
        if key not in obj:
            raise ValueError(f'instance JSON needs "{key}"')
    kind = obj["kind"]
    if kind not in ("vertex", "edge"):
        raise ValueError(f'instance kind must be "vertex" or "edge", got {kind!r}')
    g = graph_from_json(obj["graph"])
    from_kind, frm = labeling_from_json(obj["from"])
    to_kind, to = labeling_from_json(obj["to"])
    if from_kind != kind or to_kind != kind:
        raise ValueError(f"labeling keys do not match instance kind {kind!r}")
    if "privileged" in obj:
        return PrivilegedInstance(g, kind, frm, to, frozenset(obj["privileged"]),
                                  obj.get("t"))
    t = obj.get("t")
    if t is None:
        raise ValueError('plain instances need an integer "t"')
    cls = VertexInstance if kind == "vertex" else EdgeInstance
    return cls(g, frm, to, t)
