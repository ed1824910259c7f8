"""Graph serialization: JSON, edge-list text, graph6 import, DOT export.

JSON schema: ``{"name": str?, "n": int, "edges": [[u, v], ...]}`` with
``0 <= u < v < n``.  Edge-list text: first line ``n m``, then m lines
``u v``.  graph6 covers the small-order case (n <= 62) used for
enumeration corpora.
"""

from __future__ import annotations

import json

from .graph import Graph


class GraphFormatError(ValueError):
    """Malformed graph input."""


def to_json_obj(g: Graph) -> dict:
    obj: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.name:
        obj["name"] = g.name
    return obj


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True, separators=(",", ":"))


def from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = obj.get("edges", [])
        name = obj.get("name")
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad graph object: {exc}") from exc
    checked = []
    for e in edges:
        if len(e) != 2:
            raise GraphFormatError(f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u},{v}) violates 0 <= u < v < n={n}")
        checked.append((u, v))
    try:
        return Graph(n, checked, name=name)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    return from_json_obj(obj)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise GraphFormatError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from exc
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {row!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def to_dot(g: Graph) -> str:
    name = g.name or "G"
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name)
    lines = [f"graph {safe} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line (order at most 62; no sparse6 support)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError(f"invalid graph6 characters in {line!r}")
    if data[0] == 63:
        raise GraphFormatError("graph6 orders above 62 are not supported")
    n = data[0]
    bits_needed = n * (n - 1) // 2
    bit_bytes = data[1:]
    if len(bit_bytes) * 6 < bits_needed:
        raise GraphFormatError("graph6 line too short for its order")
    bits = []
    for b in bit_bytes:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def read_graph6_file(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (order at most 62); inverse of :func:`from_graph6`."""
    if g.n > 62:
        raise GraphFormatError("graph6 orders above 62 are not supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def load_graph(path: str) -> Graph:
    """Load a graph file, dispatching on extension (.json, .g6, else edge list)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return from_json(text)
    if path.endswith(".g6") or path.endswith(".graph6"):
        graphs = read_graph6_file(text)
        if len(graphs) != 1:
            raise GraphFormatError(f"expected one graph in {path}, found {len(graphs)}")
        return graphs[0]
    return from_edge_list(text)


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return to_json(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "text":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")
