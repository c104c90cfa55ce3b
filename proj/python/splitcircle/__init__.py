"""Circle graph recognition for split graphs."""

import json

from ._core import (
    Error,
    Graph,
    are_isomorphic,
    catalog_member,
    families,
    interlacement,
    is_split_graph,
    local_complement,
    oracle_is_circle,
    parse_graph,
    recognize_json,
    render_svg,
    tent,
)

__all__ = [
    "Error",
    "Graph",
    "are_isomorphic",
    "catalog_member",
    "families",
    "interlacement",
    "is_split_graph",
    "local_complement",
    "oracle_is_circle",
    "parse_graph",
    "recognize",
    "recognize_json",
    "render_svg",
    "tent",
]


def recognize(graph, build_model=True, find_witness=True):
    """Return the verdict for a graph as a dictionary.

    The "model" entry, when present, is the chord word as a list of vertices.
    """
    verdict = json.loads(recognize_json(graph, build_model, find_witness))
    if "model" in verdict:
        verdict["model"] = [int(tok) for tok in verdict["model"].split()]
    return verdict
