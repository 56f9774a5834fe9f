"""Textual family specs, the one-line graph grammar used by the CLI and API.

Grammar (strict, no whitespace, nesting to depth 8):

    spec := "path:"INT | "cycle:"INT | "wheel:"INT | "complete:"INT
          | "star:"INT | "kpartite:"INT(","INT)* | "g6:"B64TEXT
          | "union("spec","spec")" | "join("spec","spec")" | "cart("spec","spec")"

Weighted positions use "wg:"GRAPH6";"INT(","INT)* with one weight per vertex.
"""

from __future__ import annotations

from .graph6 import parse_graph6
from .graphs import (
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    join,
    path_graph,
    star_graph,
    union,
    wheel_graph,
)

MAX_DEPTH = 8

_COMBINATORS = {"union": union, "join": join, "cart": cartesian_product}
_SIMPLE = {
    "path": path_graph,
    "cycle": cycle_graph,
    "wheel": wheel_graph,
    "complete": complete_graph,
    "star": star_graph,
}


def make_family(spec: str) -> Graph:
    """Build the graph named by a family spec string."""
    g, rest = _parse(spec, depth=0)
    if rest:
        raise GraphError(f"trailing input after spec: {rest!r}")
    return g


def _parse(s: str, depth: int) -> tuple[Graph, str]:
    if depth > MAX_DEPTH:
        raise GraphError(f"spec nesting deeper than {MAX_DEPTH}")
    for name, combine in _COMBINATORS.items():
        if s.startswith(name + "("):
            rest = s[len(name) + 1 :]
            left, rest = _parse(rest, depth + 1)
            if not rest.startswith(","):
                raise GraphError(f"expected ',' in {name}(...)")
            right, rest = _parse(rest[1:], depth + 1)
            if not rest.startswith(")"):
                raise GraphError(f"unclosed {name}(...)")
            return combine(left, right), rest[1:]
    head, sep, rest = s.partition(":")
    if not sep:
        raise GraphError(f"unrecognized spec: {s!r}")
    if head == "g6":
        # graph6 bytes are all >= '?' (63), so ',' and ')' end the payload.
        i = 0
        while i < len(rest) and ord(rest[i]) >= 63:
            i += 1
        if i == 0:
            raise GraphError("empty g6 payload")
        return parse_graph6(rest[:i]), rest[i:]
    if head == "kpartite":
        parts, rest = _parse_ints(rest)
        return complete_multipartite(parts), rest
    if head in _SIMPLE:
        sizes, rest = _parse_ints(rest)
        if len(sizes) != 1:
            raise GraphError(f"{head}: takes exactly one size")
        return _SIMPLE[head](sizes[0]), rest
    raise GraphError(f"unknown family {head!r}")


def _parse_ints(s: str) -> tuple[list[int], str]:
    out = []
    i = 0
    while True:
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i:
            raise GraphError(f"expected integer at {s[i:]!r}")
        out.append(int(s[i:j]))
        # a comma only continues the list when digits follow; otherwise it
        # belongs to an enclosing combinator
        if j + 1 < len(s) and s[j] == "," and s[j + 1].isdigit():
            i = j + 1
            continue
        return out, s[j:]


def parse_weighted_spec(spec: str):
    """Parse "wg:"GRAPH6";"weights into (Graph, weights dict)."""
    if not spec.startswith("wg:"):
        raise GraphError("weighted spec must start with 'wg:'")
    body = spec[3:]
    g6, sep, wtext = body.partition(";")
    if not sep:
        raise GraphError("weighted spec needs ';' before the weight list")
    g = parse_graph6(g6)
    weights, rest = _parse_ints(wtext)
    if rest:
        raise GraphError(f"trailing input after weights: {rest!r}")
    if len(weights) != g.n:
        raise GraphError(f"expected {g.n} weights, got {len(weights)}")
    return g, {v: w for v, w in zip(g.vertices, weights)}
