import random

import pytest

from grim.graph6 import emit_graph6, parse_graph6
from grim.graphs import Graph, GraphError, complete_graph, random_graph


def test_single_vertex_encodes_to_at_sign():
    # header byte is n + 63 = 64 = '@', no adjacency bits
    assert emit_graph6(Graph([0])) == "@"


def test_k3_encodes_to_Bw():
    # bits (0,1),(0,2),(1,2) = 111, zero-padded to 111000 -> 56 + 63 = 'w'
    assert emit_graph6(complete_graph(3)) == "Bw"


def test_empty_graph():
    assert emit_graph6(Graph(())) == "?"
    assert parse_graph6("?").n == 0


def test_known_small_codes():
    assert parse_graph6("A?") == Graph(range(2))  # two isolated vertices
    assert parse_graph6("A_") == complete_graph(2)
    assert emit_graph6(Graph(range(2))) == "A?"
    assert emit_graph6(complete_graph(2)) == "A_"


def test_roundtrip_random_graphs():
    rng = random.Random(99)
    for _ in range(100):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        assert parse_graph6(emit_graph6(g)) == g


def test_parse_header_variants():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)
    assert parse_graph6(" Bw \n") == complete_graph(3)


def test_parse_errors():
    with pytest.raises(GraphError):
        parse_graph6("")
    with pytest.raises(GraphError):
        parse_graph6("B")  # truncated bit field
    with pytest.raises(GraphError):
        parse_graph6("Bww")  # trailing bytes
    with pytest.raises(GraphError):
        parse_graph6("B\x1f")  # byte below printable range
    with pytest.raises(GraphError):
        parse_graph6("~??")  # long form unsupported
    with pytest.raises(GraphError):
        parse_graph6("Bx")  # nonzero padding bits


def test_emit_caps_at_62():
    with pytest.raises(GraphError):
        emit_graph6(Graph(range(63)))


def test_emit_uses_sorted_vertex_order():
    # non-dense ids map to positions by ascending id
    g = Graph([5, 9], [(5, 9)])
    assert emit_graph6(g) == "A_"
