import random

import pytest

from grim.canon import canonical_form
from grim.engine import (
    WeightedGraph,
    blowup,
    follower,
    followers,
    legal_moves,
    normalize,
    weighted_follower,
    weighted_moves,
    weighted_normalize,
    weighted_outcome,
)
from grim.graphs import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    star_graph,
    union,
)


def test_normalize_examples():
    assert normalize(Graph([0])).n == 0
    p4 = path_graph(4)
    assert normalize(p4) == p4
    g = union(path_graph(2), complete_graph(1))
    assert canonical_form(normalize(g)) == canonical_form(path_graph(2))


def test_normalize_idempotent():
    rng = random.Random(8)
    for _ in range(50):
        g = random_graph(rng.randint(0, 7), rng.random(), rng)
        assert normalize(normalize(g)) == normalize(g)


def test_legal_moves():
    assert len(legal_moves(path_graph(3))) == 3
    assert legal_moves(Graph(())) == ()
    assert len(legal_moves(cycle_graph(4))) == 4


def test_follower_examples():
    # deleting an inner vertex of path:4 strands an endpoint
    got = follower(path_graph(4), 1)
    assert canonical_form(got) == canonical_form(path_graph(2))
    assert got.vertices == (2, 3)  # survivors keep their ids
    assert follower(path_graph(2), 0).n == 0
    for v in range(5):
        assert canonical_form(follower(cycle_graph(5), v)) == canonical_form(path_graph(4))
    with pytest.raises(GraphError):
        follower(path_graph(2), 9)


def test_follower_strictly_shrinks_and_normalizes():
    rng = random.Random(21)
    for _ in range(100):
        g = normalize(random_graph(rng.randint(2, 7), rng.random(), rng))
        if g.n == 0:
            continue
        v = rng.choice(g.vertices)
        f = follower(g, v)
        assert f.n < g.n
        assert all(f.degree(u) > 0 for u in f.vertices)


def test_follower_commutes_with_relabeling():
    rng = random.Random(34)
    for _ in range(100):
        g = normalize(random_graph(rng.randint(2, 7), 0.5, rng))
        if g.n == 0:
            continue
        perm = list(g.vertices)
        rng.shuffle(perm)
        mapping = dict(zip(g.vertices, perm))
        h = g.relabel(mapping)
        v = rng.choice(g.vertices)
        assert canonical_form(follower(g, v)) == canonical_form(follower(h, mapping[v]))


def test_weighted_construction_validates():
    g = complete_graph(2)
    with pytest.raises(GraphError):
        WeightedGraph(g, {0: 1})
    with pytest.raises(GraphError):
        WeightedGraph(g, {0: 0, 1: 1})


def test_weighted_moves_and_follower():
    k2 = WeightedGraph(complete_graph(2), {0: 2, 1: 1})
    assert weighted_moves(k2) == (0, 1)
    after = weighted_follower(k2, 0)  # heavy vertex only loses weight
    assert after.graph == k2.graph
    assert after.weights == {0: 1, 1: 1}
    # selecting a weight-1 vertex deletes it and sweeps the isolated partner
    assert weighted_follower(after, 0).graph.n == 0
    hub = WeightedGraph(star_graph(2), {0: 1, 1: 1, 2: 1})
    assert weighted_follower(hub, 0).graph.n == 0


def test_weighted_isolation_removes_despite_weight():
    # partner has weight 3 but is swept once isolated
    wg = WeightedGraph(complete_graph(2), {0: 1, 1: 3})
    assert weighted_follower(wg, 0).graph.n == 0


def test_weighted_normalize_drops_isolated_any_weight():
    g = Graph([0, 1, 2], [(0, 1)])
    wg = weighted_normalize(WeightedGraph(g, {0: 1, 1: 1, 2: 3}))
    assert wg.graph.vertices == (0, 1)


def test_blowup_examples():
    k2 = WeightedGraph(complete_graph(2), {0: 2, 1: 1})
    assert canonical_form(blowup(k2)) == canonical_form(star_graph(2))
    g = cycle_graph(4)
    ones = WeightedGraph(g, {v: 1 for v in g.vertices})
    assert canonical_form(blowup(ones)) == canonical_form(g)
    iso = WeightedGraph(Graph([0]), {0: 3})
    b = blowup(iso)
    assert b.n == 3 and b.m == 0
    assert normalize(b).n == 0


def test_blowup_vertex_count():
    rng = random.Random(55)
    for _ in range(50):
        g = random_graph(rng.randint(1, 5), rng.random(), rng)
        ws = {v: rng.randint(1, 3) for v in g.vertices}
        assert blowup(WeightedGraph(g, ws)).n == sum(ws.values())


def test_weighted_outcome_small_cases():
    k2_11 = WeightedGraph(complete_graph(2), {0: 1, 1: 1})
    assert weighted_outcome(k2_11) == "N"  # one move clears the board
    k2_21 = WeightedGraph(complete_graph(2), {0: 2, 1: 1})
    # selecting the light vertex sweeps the heavy one with it
    assert weighted_outcome(k2_21) == "N"
    k2_22 = WeightedGraph(complete_graph(2), {0: 2, 1: 2})
    # every selection leaves the N position (2,1)
    assert weighted_outcome(k2_22) == "P"


def test_followers_helper():
    g = path_graph(3)
    assert sorted(v for v, _ in followers(g)) == [0, 1, 2]
