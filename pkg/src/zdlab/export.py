"""Deterministic DOT / JSON / text serialization of zero-divisor graphs.

Vertex blocks depend only on the vertex set, so the classic and extended
graphs of one ring produce files that differ only in their edge lines.
"""

import json

from zdlab.zdgraph import EXTENDED


def _escape(label):
    return label.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g):
    labels = g.ring.labels(g.vertices)
    lines = ["graph zdgraph {", "  node [shape=ellipse];"]
    for k, label in enumerate(labels):
        lines.append(f'  v{k} [label="{_escape(label)}"];')
    for u, v in g.edges():
        i, j = g.position[u], g.position[v]
        if g.kind == EXTENDED:
            n, m = g.witness(u, v)
            lines.append(f'  v{i} -- v{j} [witness="{n},{m}"];')
        else:
            lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g):
    labels = g.ring.labels(g.vertices)
    edges = []
    for u, v in g.edges():
        edge = [labels[g.position[u]], labels[g.position[v]]]
        if g.kind == EXTENDED:
            edge.append(list(g.witness(u, v)))
        edges.append(edge)
    return json.dumps({"kind": g.kind, "vertices": labels, "edges": edges}, indent=2) + "\n"


def to_text(g):
    lines = [f"# {g.kind} zero-divisor graph: {len(g)} vertices, {g.edge_count} edges"]
    for u, v in g.edges():
        line = f"{g.ring.label(u)} -- {g.ring.label(v)}"
        if g.kind == EXTENDED:
            line += "  witness=%d,%d" % g.witness(u, v)
        lines.append(line)
    return "\n".join(lines) + "\n"


FORMATS = {"dot": to_dot, "json": to_json, "text": to_text}
