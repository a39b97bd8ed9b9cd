"""DOT, GraphML and JSON writers.  Output is deterministic byte for byte."""

from __future__ import annotations

import json
from xml.sax.saxutils import quoteattr

from .graphs import ClassGraph
from .metrics import INF, MetricsReport


def _title(graph: ClassGraph) -> str:
    return f"{graph.relation.value}/{graph.mode} {graph.group_ref}"


def export_dot(graph: ClassGraph) -> str:
    title = _title(graph).replace('"', '\\"')
    lines = [f'graph "{title}" {{']
    for v in graph.vertices:
        lines.append(f'  {v.id} [label="{v.label}"];')
    for u, w in graph.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPHML_KEYS = (
    ("label", "string"),
    ("name", "string"),
    ("element", "int"),
    ("element_order", "int"),
    ("class_size", "int"),
    ("class_id", "int"),
)


def export_graphml(graph: ClassGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
    ]
    for key, typ in _GRAPHML_KEYS:
        lines.append(f'  <key id="{key}" for="node" attr.name="{key}" attr.type="{typ}"/>')
    lines.append(f'  <graph id={quoteattr(_title(graph))} edgedefault="undirected">')
    for v in graph.vertices:
        lines.append(f'    <node id="n{v.id}">')
        for key, _ in _GRAPHML_KEYS:
            value = v.label if key == "label" else getattr(v, key)
            lines.append(f'      <data key="{key}">{value}</data>')
        lines.append("    </node>")
    for i, (u, w) in enumerate(graph.edges()):
        lines.append(f'    <edge id="e{i}" source="n{u}" target="n{w}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


def graph_to_dict(graph: ClassGraph) -> dict:
    return {
        "group": graph.group_ref,
        "relation": graph.relation.value,
        "mode": graph.mode,
        "include_identity": graph.include_identity,
        "vertices": [
            {
                "id": v.id,
                "name": v.name,
                "label": v.label,
                "class_id": v.class_id,
                "element": v.element,
                "element_order": v.element_order,
                "class_size": v.class_size,
            }
            for v in graph.vertices
        ],
        "edges": [[u, w] for u, w in graph.edges()],
    }


def _jsonable(obj):
    if obj is INF:
        return "inf"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return obj.item()
    return obj


def export_json(obj) -> str:
    """JSON for a graph, a metrics report, or any plain dict/list; INF as ``"inf"``."""
    if isinstance(obj, ClassGraph):
        obj = graph_to_dict(obj)
    elif isinstance(obj, MetricsReport):
        obj = obj.to_dict()
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def export(graph: ClassGraph, fmt: str) -> str:
    if fmt == "dot":
        return export_dot(graph)
    if fmt == "graphml":
        return export_graphml(graph)
    if fmt == "json":
        return export_json(graph)
    raise ValueError(f"unknown format {fmt!r}")
