import random

import pytest

from grim.engine import normalize
from grim.graphs import (
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
    random_graph,
    union,
    wheel_graph,
)
from grim.octal import octal6_sequence
from grim.solver import outcome, sg_value, winning_moves
from grim.theory import (
    AutomorphismCapError,
    classify_family,
    classify_multipartite,
    enumerate_graphs,
    find_near_involution,
    find_pairing_involution,
    is_near_involution,
    is_pairing_involution,
    partitions,
    verify,
)


def test_classify_examples():
    assert classify_multipartite([4, 4]).outcome == "P"
    assert classify_multipartite([2, 2, 2]).outcome == "P"
    assert classify_multipartite([1, 3, 3]).outcome == "N"


def test_classify_rule_attribution():
    assert classify_multipartite([5]).rule == "single-part"
    assert classify_multipartite([1, 1, 1]).rule == "clique-parity"
    assert classify_multipartite([1, 6]).rule == "star-hub"
    assert classify_multipartite([3, 4]).rule == "bipartite-parity"
    assert classify_multipartite([1, 1, 4]).rule == "two-singletons"
    assert classify_multipartite([1, 2, 2]).rule == "one-two-n"
    assert classify_multipartite([1, 3, 4]).rule == "one-singleton-tripartite"
    assert classify_multipartite([2, 2, 3]).rule == "no-singletons-parity"
    assert classify_multipartite([1, 2, 3, 4]).rule == "one-singleton-parity"
    assert classify_multipartite([1, 1, 1, 2]).rule == "singleton-excess-parity"
    assert classify_multipartite([1, 1, 3, 5]).rule == "double-singleton-three"
    assert classify_multipartite([1, 1, 2, 2]).outcome == "Unknown"
    with pytest.raises(GraphError):
        classify_multipartite([0, 2])


def test_m2_precedence_reading():
    # the 1,2,n family stays with the always-first-player rule even though
    # the even-sum tripartite rule would claim otherwise at m=2
    pred = classify_multipartite([1, 2, 3])
    assert pred.rule == "one-two-n"
    assert pred.outcome == "N"
    assert outcome(complete_multipartite([1, 2, 3])) == "N"


def test_unknown_has_no_witness():
    pred = classify_multipartite([1, 1, 2, 2])
    assert pred.outcome == "Unknown" and pred.witness is None


def test_classify_family_examples():
    assert classify_family("path:7").outcome == "N"
    assert classify_family("cycle:8").outcome == "P"
    assert classify_family("wheel:6").outcome == "P"  # inner path:4 is a zero
    assert classify_family("path:1").outcome == "P"
    assert classify_family("path:4").outcome == "P"
    assert classify_family("star:9").outcome == "N"
    assert classify_family("complete:6").outcome == "N"
    assert classify_family("kpartite:2,2,2").outcome == "P"
    with pytest.raises(GraphError):
        classify_family("union(path:2,path:2)")


def test_classify_family_unknown_without_sequence():
    # even paths outside the stored zero list stay undecided until a
    # sequence is supplied
    assert classify_family("path:6").outcome == "Unknown"
    assert classify_family("cycle:7").outcome == "Unknown"
    seq = octal6_sequence(10)
    assert classify_family("path:6", seq=seq).outcome == "N"
    assert classify_family("cycle:7", seq=seq).outcome == "P"
    assert classify_family("wheel:4", seq=seq).outcome == "N"


def test_classifier_agrees_with_solver_small_partitions():
    for total in range(1, 9):
        for parts in partitions(total):
            pred = classify_multipartite(parts)
            if pred.outcome == "Unknown":
                continue
            if pred.rule in ("one-singleton-parity", "singleton-excess-parity"):
                continue  # documented refuted rules, see the verify suites
            assert pred.outcome == outcome(complete_multipartite(parts)), parts


def test_pairing_involution_examples():
    sigma = find_pairing_involution(cycle_graph(6))
    assert sigma is not None and is_pairing_involution(cycle_graph(6), sigma)
    assert find_pairing_involution(complete_graph(3)) is None
    two = union(cycle_graph(3), cycle_graph(3))
    sigma = find_pairing_involution(two)
    assert sigma is not None and is_pairing_involution(two, sigma)


def test_near_involution_examples():
    sigma, fixed = find_near_involution(path_graph(5))
    assert fixed == 2  # the middle vertex
    assert is_near_involution(path_graph(5), sigma)
    sigma, fixed = find_near_involution(wheel_graph(5))
    assert fixed == 4  # the hub
    assert find_near_involution(cycle_graph(4)) is None


def test_c4_near_involution_exhausted_by_oracle():
    # across all 8 automorphisms of C4 none has exactly one fixed point
    from itertools import permutations

    c4 = cycle_graph(4)
    count = 0
    for perm in permutations(range(4)):
        mapping = dict(zip(range(4), perm))
        if all(c4.has_edge(mapping[u], mapping[v]) for u, v in c4.edges()):
            count += 1
            fixed = sum(1 for v in range(4) if mapping[v] == v)
            order2 = all(mapping[mapping[v]] == v for v in range(4))
            assert not (order2 and fixed == 1)
    assert count == 8


def test_involution_validators_reject_identity_and_edges():
    k2 = complete_graph(2)
    assert not is_pairing_involution(k2, {0: 1, 1: 0})  # adjacent images
    p2 = Graph([0, 1], [])
    assert not is_near_involution(path_graph(3), {0: 0, 1: 1, 2: 2})
    assert is_pairing_involution(p2, {0: 1, 1: 0})


def test_near_involution_requires_no_isolated_vertices():
    with pytest.raises(GraphError):
        find_near_involution(Graph([0]))


def test_involution_cap():
    with pytest.raises(AutomorphismCapError):
        find_pairing_involution(Graph(range(13)))


def test_involution_soundness_exhaustive_to_six():
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected=True):
            sigma = find_pairing_involution(g)
            if sigma is not None:
                assert sg_value(g) == 0
            hit = find_near_involution(g)
            if hit is not None:
                s, v0 = hit
                assert outcome(g) == "N"
                assert v0 in winning_moves(g)


def test_involution_soundness_sampled_disconnected():
    rng = random.Random(40)
    for _ in range(150):
        g = normalize(random_graph(rng.randint(2, 8), rng.random(), rng))
        if g.n < 2:
            continue
        sigma = find_pairing_involution(g)
        if sigma is not None:
            assert sg_value(g) == 0


def test_enumerate_counts():
    assert [len(enumerate_graphs(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    assert [len(enumerate_graphs(n, connected=True)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_verify_suites_small_bounds():
    assert verify("complete", 7).ok
    assert verify("bipartite", 8).ok
    assert verify("k1mn", 8).ok
    assert verify("multipartite-no1s", 8).ok
    assert verify("k113n", 9).ok
    assert verify("paths-cycles-wheels", 9).ok
    assert verify("union-self", 4).ok
    assert verify("octal-equiv", 60).ok
    with pytest.raises(GraphError):
        verify("nope", 5)


def test_verify_workers_match_sequential():
    seq_report = verify("bipartite", 9)
    par_report = verify("bipartite", 9, workers=4)
    assert seq_report.checked == par_report.checked
    assert seq_report.failed == par_report.failed
    assert seq_report.counterexamples == par_report.counterexamples


def test_one_singleton_refutation_is_detected():
    # K_{1,2,3,4} disproves the even-with-a-2-part branch of the
    # one-singleton rule: all four followers are wins for their mover
    report = verify("one-singleton", 10)
    assert report.failed == 1
    assert "K_{1,2,3,4}" in report.counterexamples[0]
    g = complete_multipartite((1, 2, 3, 4))
    assert outcome(g) == "P"
    assert winning_moves(g) == []
    for parts in [(2, 3, 4), (1, 1, 3, 4), (1, 2, 2, 4), (1, 2, 3, 3)]:
        assert outcome(complete_multipartite(parts)) == "N"


def test_one_singleton_holds_below_ten():
    assert verify("one-singleton", 9).ok


def test_singleton_parity_rule_is_inverted_with_single_large_part():
    # the printed parity rule disagrees with play whenever exactly one
    # part exceeds 1; with two or more it holds in this range
    report = verify("singleton-parity", 10)
    assert report.failed > 0
    for parts in [(1, 1, 1, 2), (1, 1, 1, 1, 3)]:
        pred = classify_multipartite(parts)
        actual = outcome(complete_multipartite(parts))
        assert pred.outcome != actual
    for parts in [(1, 1, 1, 2, 2), (1, 1, 1, 1, 2, 3)]:
        pred = classify_multipartite(parts)
        actual = outcome(complete_multipartite(parts))
        assert pred.outcome == actual


def test_cartesian_suite():
    assert verify("cartesian", 16).ok


def test_blowup_suite_small():
    assert verify("blowup", 3).ok


def test_cartesian_product_involution_composed():
    c4 = cycle_graph(4)
    sigma = find_pairing_involution(c4)
    prod = cartesian_product(c4, c4)
    comp = {}
    for x in range(4):
        for y in range(4):
            comp[x * 4 + y] = sigma[x] * 4 + sigma[y]
    assert is_pairing_involution(prod, comp)
    assert outcome(prod) == "P"
