import random

import pytest

from mixedcages import MixedGraph, build_g30, new_graph


def random_mixed_graph(rng: random.Random, n_min: int = 1, n_max: int = 10) -> MixedGraph:
    """Random mixed graph with a spread of densities, including sparse
    and acyclic shapes that stress the slow-path oracles."""
    n = rng.randint(n_min, n_max)
    style = rng.random()
    if style < 0.15:  # arc-heavy
        edge_p, arc_p = 0.0, rng.uniform(0.1, 0.5)
    elif style < 0.3:  # edge-heavy
        edge_p, arc_p = rng.uniform(0.1, 0.6), 0.0
    elif style < 0.45:  # very sparse, often acyclic
        edge_p, arc_p = rng.uniform(0.0, 0.08), rng.uniform(0.0, 0.08)
    else:
        edge_p, arc_p = rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.4)
    edges = []
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_p:
                edges.append((i, j))
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < arc_p:
                arcs.append((i, j))
    return new_graph(n, edges, arcs)


@pytest.fixture(scope="session")
def g30() -> MixedGraph:
    return build_g30()
