import random

import pytest

from grim.canon import canonical_form
from grim.families import make_family, parse_weighted_spec
from grim.graphs import (
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    components,
    cycle_graph,
    join,
    path_graph,
    star_graph,
    union,
)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 0)])
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 2)])
    g = Graph([0, 1, 2], [(0, 1), (1, 0)])  # duplicate edge collapses
    assert g.m == 1
    assert g.has_edge(1, 0)


def test_path3_shape():
    g = make_family("path:3")
    assert g.vertices == (0, 1, 2)
    assert g.edges() == [(0, 1), (1, 2)]


def test_wheel5_shape():
    g = make_family("wheel:5")
    assert g.n == 5
    assert g.m == 8


def test_kpartite22_isomorphic_to_cycle4():
    assert canonical_form(make_family("kpartite:2,2")) == canonical_form(cycle_graph(4))


def test_union_counts_and_identity():
    g = union(path_graph(2), path_graph(2))
    assert (g.n, g.m) == (4, 2)
    h = union(Graph(()), path_graph(3))
    assert canonical_form(h) == canonical_form(path_graph(3))


def test_union_two_triangles_matches_reference_edge_list():
    got = union(cycle_graph(3), cycle_graph(3))
    ref = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_form(got) == canonical_form(ref)


def test_join_examples():
    assert canonical_form(join(cycle_graph(4), complete_graph(1))) == canonical_form(
        make_family("wheel:5")
    )
    assert canonical_form(join(complete_graph(1), complete_graph(1))) == canonical_form(
        complete_graph(2)
    )
    assert canonical_form(join(make_family("kpartite:2,2"), complete_graph(1))) == canonical_form(
        make_family("kpartite:1,2,2")
    )


def test_cartesian_examples():
    assert canonical_form(cartesian_product(path_graph(2), path_graph(2))) == canonical_form(
        cycle_graph(4)
    )
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    assert canonical_form(cartesian_product(complete_graph(1), g)) == canonical_form(g)
    ladder = cartesian_product(path_graph(2), path_graph(3))
    assert (ladder.n, ladder.m) == (6, 7)
    with pytest.raises(GraphError):
        cartesian_product(Graph(()), path_graph(2))


def test_components():
    parts = components(union(path_graph(3), cycle_graph(3)))
    assert sorted(c.n for c in parts) == [3, 3]
    assert components(Graph(())) == []
    assert len(components(path_graph(5))) == 1
    # vertex sets partition V and every edge stays inside one part
    g = union(union(path_graph(2), cycle_graph(4)), complete_graph(1))
    parts = components(g)
    seen = [v for c in parts for v in c.vertices]
    assert sorted(seen) == list(g.vertices)
    assert sum(c.m for c in parts) == g.m


def test_combinator_count_laws():
    rng = random.Random(5)
    for _ in range(30):
        from grim.graphs import random_graph

        g = random_graph(rng.randint(1, 5), rng.random(), rng)
        h = random_graph(rng.randint(1, 5), rng.random(), rng)
        assert union(g, h).n == g.n + h.n
        assert union(g, h).m == g.m + h.m
        assert join(g, h).m == g.m + h.m + g.n * h.n
        assert cartesian_product(g, h).n == g.n * h.n


def test_star_is_k1n():
    assert canonical_form(star_graph(2)) == canonical_form(path_graph(3))
    assert canonical_form(star_graph(4)) == canonical_form(make_family("kpartite:1,4"))


def test_family_size_floors():
    for bad in ("path:0", "cycle:2", "wheel:3", "complete:0", "star:0", "kpartite:0,2"):
        with pytest.raises(GraphError):
            make_family(bad)


def test_family_parse_errors():
    for bad in ("nope:3", "path", "union(path:2)", "union(path:2,path:2", "path:x"):
        with pytest.raises(GraphError):
            make_family(bad)


def test_nested_specs():
    g = make_family("union(join(path:2,complete:1),cycle:3)")
    assert g.n == 6
    deep = "union(" * 9 + "path:1" + ",path:1)" * 9
    with pytest.raises(GraphError):
        make_family(deep)


def test_g6_inside_spec():
    g = make_family("union(g6:Bw,g6:Bw)")
    assert canonical_form(g) == canonical_form(union(cycle_graph(3), cycle_graph(3)))


def test_weighted_spec_parsing():
    g, weights = parse_weighted_spec("wg:A_;2,1")
    assert g.n == 2 and g.m == 1
    assert weights == {0: 2, 1: 1}
    with pytest.raises(GraphError):
        parse_weighted_spec("wg:A_;2")
    with pytest.raises(GraphError):
        parse_weighted_spec("A_;2,1")
