"""Reading and writing graphs: canonical JSON, edge-list text, and DOT export."""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Any

from .graphs import Graph, build_graph

__all__ = [
    "graph_to_json_dict",
    "graph_from_json_dict",
    "write_graph_json",
    "read_graph_json",
    "graph_to_edgelist_text",
    "graph_from_edgelist_text",
    "graph_to_dot",
    "graph_key",
]


def graph_to_json_dict(G: Graph, family: dict[str, Any] | None = None) -> dict[str, Any]:
    """Canonical JSON form: sorted ``[u, v]`` pairs with ``u < v``.

    ``family`` is an optional annotation block recording how the graph was
    constructed; readers must tolerate its absence.
    """
    d: dict[str, Any] = {}
    if G.name is not None:
        d["name"] = G.name
    d["n"] = G.n
    d["edges"] = [[u, v] for u, v in G.edges()]
    if family is not None:
        d["family"] = family
    return d


def graph_from_json_dict(d: dict[str, Any]) -> Graph:
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise ValueError("graph JSON must be an object with 'n' and 'edges'")
    n = d["n"]
    edges = d["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError("'n' must be an integer and 'edges' a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    name = d.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError("'name' must be a string when present")
    return build_graph(n, pairs, name=name)


def write_graph_json(G: Graph, path: str | Path, family: dict[str, Any] | None = None) -> None:
    text = json.dumps(graph_to_json_dict(G, family), indent=2, sort_keys=True)
    Path(path).write_text(text + "\n")


def read_graph_json(path: str | Path) -> Graph:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {path}") from exc
    return graph_from_json_dict(data)


def graph_to_edgelist_text(G: Graph) -> str:
    """Plain text: first line the vertex count, then one ``u v`` line per edge."""
    lines = [str(G.n)]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def graph_from_edgelist_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("edge-list text is empty")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def _dot_name(name: str | None) -> str:
    if not name:
        return "G"
    cleaned = re.sub(r"[^A-Za-z0-9_]", "_", name)
    if not re.match(r"[A-Za-z_]", cleaned):
        cleaned = "g_" + cleaned
    return cleaned


def graph_to_dot(G: Graph) -> str:
    """Graphviz DOT text; isolated vertices appear as bare node statements."""
    lines = [f"graph {_dot_name(G.name)} {{"]
    for v in range(G.n):
        if G.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_key(G: Graph) -> str:
    """Short stable identifier of the labelled graph (used in sweep reports)."""
    payload = f"{G.n}:" + ",".join(f"{u}-{v}" for u, v in G.edges())
    return hashlib.sha256(payload.encode()).hexdigest()[:12]
