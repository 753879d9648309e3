import random

import pytest

from mixedcages import (
    CapExceededError,
    apply_permutation,
    girth,
    girth_bruteforce,
    has_girth_at_least,
    new_graph,
    validate_witness,
    Permutation,
)
from mixedcages.graphs import GraphError

from conftest import random_mixed_graph


def test_single_edge_has_no_cycle():
    # returning along the only edge would reuse it
    assert girth(new_graph(2, edges=[(0, 1)])).girth is None


def test_edge_plus_arc_is_two_cycle():
    res = girth(new_graph(2, edges=[(0, 1)], arcs=[(0, 1)]))
    assert res.girth == 2
    assert sorted(res.witness.steps) == ["arc", "edge"]


def test_antiparallel_arcs_are_two_cycle():
    res = girth(new_graph(2, arcs=[(0, 1), (1, 0)]))
    assert res.girth == 2
    assert res.witness.steps == ("arc", "arc")


def test_undirected_triangle():
    assert girth(new_graph(3, edges=[(0, 1), (1, 2), (2, 0)])).girth == 3


def test_directed_ten_cycle():
    g = new_graph(10, arcs=[(i, (i + 1) % 10) for i in range(10)])
    assert girth(g).girth == 10


def test_g30_girth_is_six(g30):
    res = girth(g30)
    assert res.girth == 6
    validate_witness(g30, res.witness)


def test_empty_graph_infinite():
    assert girth(new_graph(0)).girth is None
    assert girth(new_graph(5)).girth is None


def test_arcs_only_forward():
    # arc path 0->1->2 plus arc 0->2 gives no cycle (arcs are one-way)
    g = new_graph(3, arcs=[(0, 1), (1, 2), (0, 2)])
    assert girth(g).girth is None
    # reversing the chord closes a 3-cycle
    g = new_graph(3, arcs=[(0, 1), (1, 2), (2, 0)])
    assert girth(g).girth == 3


def test_bruteforce_basics():
    assert girth_bruteforce(new_graph(2, arcs=[(0, 1), (1, 0)])).girth == 2
    four = new_graph(4, edges=[(0, 1), (1, 2), (2, 3), (3, 0)])
    assert girth_bruteforce(four).girth == 4
    assert girth_bruteforce(new_graph(2, edges=[(0, 1)])).girth is None


def test_bruteforce_cap_semantics():
    four = new_graph(4, edges=[(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(CapExceededError):
        girth_bruteforce(four, max_len=3)
    assert girth_bruteforce(four, max_len=4).girth == 4
    # cap >= n makes a miss conclusive
    assert girth_bruteforce(new_graph(3, edges=[(0, 1)]), max_len=3).girth is None


def test_fast_matches_bruteforce_on_random_graphs():
    rng = random.Random(99)
    for _ in range(400):
        g = random_mixed_graph(rng)
        fast = girth(g)
        slow = girth_bruteforce(g)
        assert fast.girth == slow.girth, (sorted(g.edges), sorted(g.arcs))
        if fast.girth is not None:
            validate_witness(g, fast.witness)
            validate_witness(g, slow.witness)
            assert fast.witness.length == slow.witness.length == fast.girth


def test_witness_validation_rejects_junk(g30):
    from mixedcages import CycleWitness

    with pytest.raises(GraphError):
        validate_witness(g30, CycleWitness((0, 1), ("edge",)))  # open walk
    with pytest.raises(GraphError):
        # vertices 0 and 3 are not adjacent in g30
        validate_witness(g30, CycleWitness((0, 3, 0), ("edge", "edge")))
    with pytest.raises(GraphError):
        # reusing the single edge twice
        validate_witness(
            new_graph(2, edges=[(0, 1)]),
            CycleWitness((0, 1, 0), ("edge", "edge")),
        )


def test_adding_incidences_never_increases_girth():
    rng = random.Random(17)
    for _ in range(60):
        g = random_mixed_graph(rng, n_min=4, n_max=8)
        base = girth(g).girth
        pairs = [(i, j) for i in range(g.n) for j in range(g.n) if i != j]
        u, v = pairs[rng.randrange(len(pairs))]
        if g.has_edge(u, v):
            continue
        bigger = new_graph(
            g.n, list(g.edges) + [(u, v)] if u < v else list(g.edges) + [(v, u)],
            list(g.arcs),
        )
        after = girth(bigger).girth
        if base is not None:
            assert after is not None and after <= base


def test_girth_is_permutation_invariant():
    rng = random.Random(23)
    for _ in range(60):
        g = random_mixed_graph(rng, n_min=2)
        p = list(range(g.n))
        rng.shuffle(p)
        h = apply_permutation(g, Permutation(tuple(p)))
        assert girth(g).girth == girth(h).girth


def test_has_girth_at_least(g30):
    ok, witness = has_girth_at_least(g30, 6)
    assert ok and witness is None
    ok, witness = has_girth_at_least(g30, 7)
    assert not ok
    assert witness.length == 6
    validate_witness(g30, witness)
    assert has_girth_at_least(new_graph(4), 100)[0]


def test_incremental_check_matches_full():
    # grow a graph edge by edge; the incremental check through the new
    # incidence must agree with full recomputation at every step
    rng = random.Random(31)
    for _ in range(40):
        target = rng.randint(3, 6)
        n = rng.randint(4, 9)
        g = new_graph(n)
        for _ in range(2 * n):
            add_arc = rng.random() < 0.4
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            if add_arc:
                if g.has_arc(u, v):
                    continue
                candidate = new_graph(n, g.sorted_edges(), g.sorted_arcs() + [(u, v)])
                inc, _ = has_girth_at_least(candidate, target, new_arc=(u, v))
            else:
                if g.has_edge(u, v):
                    continue
                candidate = new_graph(n, g.sorted_edges() + [(min(u, v), max(u, v))], g.sorted_arcs())
                inc, _ = has_girth_at_least(candidate, target, new_edge=(u, v))
            full, _ = has_girth_at_least(candidate, target)
            if girth(g).girth is None or girth(g).girth >= target:
                # precondition for incremental equivalence holds
                assert inc == full
            if full:
                g = candidate  # keep the invariant girth >= target


def test_incremental_requires_present_incidence(g30):
    with pytest.raises(GraphError):
        has_girth_at_least(g30, 6, new_edge=(0, 3))
