import itertools
import random

import pytest

from mixedcages import (
    Permutation,
    TooLargeError,
    apply_permutation,
    automorphism_group,
    canonical_form,
    group_fingerprint,
    is_isomorphic,
    new_graph,
)
from mixedcages.constructions import (
    rotation_automorphism,
    row_transposition_automorphism,
)

from conftest import random_mixed_graph


def brute_force_automorphism_count(g):
    """Oracle: try all n! permutations."""
    return sum(
        1
        for p in itertools.permutations(range(g.n))
        if apply_permutation(g, Permutation(p)) == g
    )


def petersen():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    return new_graph(10, edges)


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(8)
    for _ in range(150):
        g = random_mixed_graph(rng, n_min=2)
        base = canonical_form(g).encoding
        p = list(range(g.n))
        rng.shuffle(p)
        h = apply_permutation(g, Permutation(tuple(p)))
        assert canonical_form(h).encoding == base


def test_canonical_permutation_realizes_encoding():
    rng = random.Random(12)
    for _ in range(50):
        g = random_mixed_graph(rng, n_min=2)
        cf = canonical_form(g)
        relabeled = apply_permutation(g, cf.permutation)
        assert canonical_form(relabeled).encoding == cf.encoding


def test_arc_direction_distinguishes():
    directed = new_graph(3, arcs=[(0, 1), (1, 2), (2, 0)])
    undirected = new_graph(3, edges=[(0, 1), (1, 2), (2, 0)])
    assert canonical_form(directed).encoding != canonical_form(undirected).encoding


def test_invariant_distinguished_pairs_get_different_forms():
    # graphs already separated by counts, degree multisets, or girth
    # must also separate under the canonical encoding
    from mixedcages import degree_profile, girth

    rng = random.Random(51)
    pairs_checked = 0
    while pairs_checked < 60:
        g = random_mixed_graph(rng, n_min=3, n_max=8)
        h = random_mixed_graph(rng, n_min=g.n, n_max=g.n)
        pg, ph = degree_profile(g), degree_profile(h)
        distinguished = (
            len(g.edges) != len(h.edges)
            or len(g.arcs) != len(h.arcs)
            or sorted(zip(pg.deg, pg.outdeg, pg.indeg))
            != sorted(zip(ph.deg, ph.outdeg, ph.indeg))
            or girth(g).girth != girth(h).girth
        )
        if not distinguished:
            continue
        pairs_checked += 1
        assert canonical_form(g).encoding != canonical_form(h).encoding


def test_is_isomorphic_with_witness():
    rng = random.Random(4)
    for _ in range(50):
        g = random_mixed_graph(rng, n_min=2, n_max=9)
        p = list(range(g.n))
        rng.shuffle(p)
        h = apply_permutation(g, Permutation(tuple(p)))
        verdict, witness = is_isomorphic(g, h)
        assert verdict
        assert apply_permutation(g, witness) == h


def test_non_isomorphic_detected(g30):
    smaller = new_graph(
        30, sorted(g30.edges)[:-1], sorted(g30.arcs)
    )
    verdict, witness = is_isomorphic(g30, smaller)
    assert not verdict and witness is None


def test_g30_isomorphic_to_its_converse(g30):
    # measured once and recorded: reversing every arc yields an
    # isomorphic mixed graph
    converse = new_graph(30, sorted(g30.edges), [(v, u) for u, v in g30.arcs])
    verdict, witness = is_isomorphic(g30, converse)
    assert verdict
    assert apply_permutation(g30, witness) == converse


def test_aut_counts_match_brute_force():
    rng = random.Random(16)
    for _ in range(30):
        g = random_mixed_graph(rng, n_min=1, n_max=5)
        assert automorphism_group(g).order == brute_force_automorphism_count(g)


def test_aut_triangle_is_s3():
    group = automorphism_group(new_graph(3, edges=[(0, 1), (1, 2), (2, 0)]))
    assert group.order == 6
    fp = group_fingerprint(group)
    assert not fp.abelian and fp.name == "S3"


def test_aut_directed_triangle_is_z3():
    group = automorphism_group(new_graph(3, arcs=[(0, 1), (1, 2), (2, 0)]))
    assert group.order == 3


def test_aut_directed_ten_cycle_is_z10():
    g = new_graph(10, arcs=[(i, (i + 1) % 10) for i in range(10)])
    group = automorphism_group(g)
    fp = group_fingerprint(group)
    assert group.order == 10 and fp.abelian and fp.max_element_order == 10
    assert fp.name == "Z10"


def test_aut_petersen():
    assert automorphism_group(petersen()).order == 120


def test_aut_symmetric_shortcuts():
    assert automorphism_group(new_graph(6)).order == 720
    k4 = new_graph(4, edges=[(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert automorphism_group(k4).order == 24


def test_aut_generators_validate():
    rng = random.Random(77)
    for _ in range(20):
        g = random_mixed_graph(rng, n_min=2, n_max=8)
        group = automorphism_group(g)
        for p in group.generators:
            assert apply_permutation(g, p) == g


def test_aut_g30(g30):
    group = automorphism_group(g30)
    assert group.order == 20
    elements = {p.image for p in group.elements()}
    assert len(elements) == 20  # closure agrees with the chain order
    assert rotation_automorphism().image in elements
    assert row_transposition_automorphism().image in elements
    fp = group_fingerprint(group)
    assert fp.abelian and fp.max_element_order == 10
    assert fp.name == "Z2 x Z10"


def test_fingerprint_cap():
    group = automorphism_group(new_graph(7))  # S7, order 5040
    with pytest.raises(TooLargeError):
        group_fingerprint(group, cap=1000)
