"""Strict readers and writers for the graph-v1 and sign-v1 file formats.

Both formats are single JSON objects.  Parsing is strict: the format tag
must match, the key set must be exact, and every value is type-checked.
Unknown fields are rejected rather than ignored.
"""

from __future__ import annotations

import json

from .graphs import Multigraph, SignAssignment

GRAPH_FORMAT = "graph-v1"
SIGN_FORMAT = "sign-v1"


def graph_to_dict(g: Multigraph) -> dict:
    return {
        "format": GRAPH_FORMAT,
        "num_vertices": g.num_vertices,
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_to_json(g: Multigraph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_dict(data: object) -> Multigraph:
    if not isinstance(data, dict):
        raise ValueError("graph file must contain a JSON object")
    if set(data.keys()) != {"format", "num_vertices", "edges"}:
        raise ValueError(
            f"graph object must have exactly the keys format/num_vertices/edges, got {sorted(data.keys())}"
        )
    if data["format"] != GRAPH_FORMAT:
        raise ValueError(f"unsupported graph format {data['format']!r}")
    n = data["num_vertices"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("num_vertices must be a nonnegative integer")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ValueError("edges must be a list of [u, v] pairs")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return Multigraph(n, pairs)


def graph_from_json(text: str) -> Multigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"graph file is not valid JSON: {exc}") from exc
    return graph_from_dict(data)


def signs_to_dict(s: SignAssignment) -> dict:
    return {"format": SIGN_FORMAT, "signs": list(s.signs)}


def signs_to_json(s: SignAssignment) -> str:
    return json.dumps(signs_to_dict(s))


def signs_from_dict(data: object) -> SignAssignment:
    if not isinstance(data, dict):
        raise ValueError("sign file must contain a JSON object")
    if set(data.keys()) != {"format", "signs"}:
        raise ValueError(
            f"sign object must have exactly the keys format/signs, got {sorted(data.keys())}"
        )
    if data["format"] != SIGN_FORMAT:
        raise ValueError(f"unsupported sign format {data['format']!r}")
    signs = data["signs"]
    if not isinstance(signs, list) or not all(isinstance(s, int) and s in (1, -1) for s in signs):
        raise ValueError("signs must be a list of +1/-1 integers")
    return SignAssignment(signs)


def signs_from_json(text: str) -> SignAssignment:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"sign file is not valid JSON: {exc}") from exc
    return signs_from_dict(data)
