"""Girth of a mixed graph, with shortest-cycle witnesses.

A cycle is a vertex sequence v_0..v_k, v_0 = v_k, with no other repeated
vertex, where each consecutive pair is an edge or a forward arc and no
edge or arc is used twice.  Lengths 1 and 2 are possible in principle;
loops cannot occur in the simple graphs this package builds, and
2-cycles arise exactly from antiparallel arcs or an edge coexisting with
an arc on the same pair.

The fast path works per starting incidence: the shortest cycle through
an arc (u,v) is 1 plus the shortest v->u path in the arc-augmented
digraph (edges usable in both directions); for an edge the same holds
per orientation with that edge itself banned from the return path.
Vertex-distinctness comes free from breadth-first search, and banning
the start edge is the only non-reuse constraint that can bind: in a
vertex-distinct cycle of length >= 3 no incidence can repeat anywhere
else.  `girth_bruteforce` is an independent oracle that enumerates
vertex sequences against the definition literally.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import GraphError, MixedGraph, Pair, _normalize_edge

ARC = "arc"
EDGE = "edge"


class CapExceededError(ValueError):
    """Brute-force search exhausted its length cap without a verdict."""


@dataclass(frozen=True)
class CycleWitness:
    """A closed vertex walk certifying a cycle.

    ``vertices`` is v_0..v_k with v_0 == v_k; ``steps[i]`` tags the
    incidence used between vertices i and i+1 as "edge" or "arc".
    """

    vertices: tuple[int, ...]
    steps: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class GirthResult:
    """Girth value plus a witness; girth None means acyclic."""

    girth: int | None
    witness: CycleWitness | None

    @property
    def is_finite(self) -> bool:
        return self.girth is not None


def validate_witness(g: MixedGraph, w: CycleWitness) -> None:
    """Check a witness against the cycle definition; raise on violation."""
    vs = w.vertices
    if len(vs) < 2 or vs[0] != vs[-1]:
        raise GraphError("witness must start and end at the same vertex")
    if len(w.steps) != len(vs) - 1:
        raise GraphError("step count does not match vertex count")
    interior = vs[:-1]
    if len(set(interior)) != len(interior):
        raise GraphError("witness repeats a vertex other than the endpoint")
    used: set[tuple[str, Pair]] = set()
    for i, kind in enumerate(w.steps):
        u, v = vs[i], vs[i + 1]
        if kind == EDGE:
            if not g.has_edge(u, v):
                raise GraphError(f"no edge {{{u},{v}}} in host graph")
            key = (EDGE, _normalize_edge(u, v))
        elif kind == ARC:
            if not g.has_arc(u, v):
                raise GraphError(f"no arc ({u},{v}) in host graph")
            key = (ARC, (u, v))
        else:
            raise GraphError(f"unknown step kind {kind!r}")
        if key in used:
            raise GraphError(f"witness reuses {key}")
        used.add(key)


def girth(g: MixedGraph) -> GirthResult:
    """Shortest cycle length and witness, or girth None when acyclic."""
    two = _shortest_two_cycle(g)
    if two is not None:
        return GirthResult(2, two)
    w = _shortest_cycle(g, max_len=g.n)
    if w is None:
        return GirthResult(None, None)
    return GirthResult(w.length, w)


def has_girth_at_least(
    g: MixedGraph,
    target: int,
    new_edge: Pair | None = None,
    new_arc: Pair | None = None,
) -> tuple[bool, CycleWitness | None]:
    """True iff girth(g) >= target; otherwise a violating witness.

    Incremental use: pass ``new_edge`` or ``new_arc`` (already present
    in ``g``) to check only cycles through that incidence.  This is
    equivalent to a full recomputation whenever the graph without the
    new incidence already had girth >= target, which is how a growing
    search uses it.
    """
    if target <= 1:
        return True, None
    starts: list[tuple[str, int, int]] | None = None
    if new_edge is not None:
        u, v = new_edge
        if not g.has_edge(u, v):
            raise GraphError(f"new_edge {{{u},{v}}} not present in graph")
        starts = [(EDGE, u, v), (EDGE, v, u)]
    elif new_arc is not None:
        u, v = new_arc
        if not g.has_arc(u, v):
            raise GraphError(f"new_arc ({u},{v}) not present in graph")
        starts = [(ARC, u, v)]
    w = _shortest_cycle(g, max_len=target - 1, starts=starts)
    if w is None:
        return True, None
    return False, w


def girth_bruteforce(g: MixedGraph, max_len: int | None = None) -> GirthResult:
    """Independent oracle: enumerate vertex sequences per the definition.

    Intended for small graphs.  Raises CapExceededError when no cycle of
    length <= max_len exists but max_len < n leaves longer cycles
    unexplored; with max_len >= n a miss genuinely means acyclic.
    """
    cap = g.n if max_len is None else min(max_len, g.n)
    best: list[CycleWitness | None] = [None]

    def options(x: int) -> list[tuple[int, str]]:
        opts = [(w, ARC) for w in g.out_neighbors[x]]
        opts += [(w, EDGE) for w in g.edge_neighbors[x]]
        opts.sort(key=lambda t: (t[0], t[1] != ARC))
        return opts

    def extend(
        s: int,
        path: list[int],
        steps: list[str],
        used: set[tuple[str, Pair]],
    ) -> None:
        x = path[-1]
        limit = cap if best[0] is None else min(cap, best[0].length - 1)
        for w, kind in options(x):
            key = (
                (EDGE, _normalize_edge(x, w)) if kind == EDGE else (ARC, (x, w))
            )
            if key in used:
                continue
            if w == s:
                length = len(path)
                if length >= 2 and length <= limit:
                    best[0] = CycleWitness(
                        tuple(path + [s]), tuple(steps + [kind])
                    )
                continue
            if w in path:
                continue
            if len(path) > limit - 1:
                continue
            path.append(w)
            steps.append(kind)
            used.add(key)
            extend(s, path, steps, used)
            used.discard(key)
            steps.pop()
            path.pop()

    for s in range(g.n):
        extend(s, [s], [], set())
        if best[0] is not None and best[0].length == 2:
            break
    if best[0] is not None:
        return GirthResult(best[0].length, best[0])
    if cap >= g.n:
        return GirthResult(None, None)
    raise CapExceededError(f"no cycle of length <= {cap} found; longer ones unexplored")


def _shortest_two_cycle(g: MixedGraph) -> CycleWitness | None:
    """Direct scan for 2-cycles; returns the lexicographically first."""
    pairs = set()
    for u, v in g.arcs:
        if (v, u) in g.arcs or _normalize_edge(u, v) in g.edges:
            pairs.add(_normalize_edge(u, v))
    if not pairs:
        return None
    a, b = min(pairs)
    first = ARC if g.has_arc(a, b) else EDGE
    second = ARC if g.has_arc(b, a) else EDGE
    return CycleWitness((a, b, a), (first, second))


def _shortest_cycle(
    g: MixedGraph,
    max_len: int,
    starts: list[tuple[str, int, int]] | None = None,
) -> CycleWitness | None:
    """Shortest cycle of length <= max_len, restricted to given starting
    incidences if provided.  Deterministic: starting steps are scanned
    in sorted order and BFS visits neighbors in ascending order."""
    if starts is None:
        starts = [(ARC, u, v) for u, v in g.arcs]
        for u, v in g.edges:
            starts.append((EDGE, u, v))
            starts.append((EDGE, v, u))
    starts = sorted(starts, key=lambda t: (t[1], t[2], t[0] != ARC))
    best: CycleWitness | None = None
    for kind0, u, v in starts:
        limit = max_len if best is None else best.length - 1
        if limit < 2:
            break
        banned = _normalize_edge(u, v) if kind0 == EDGE else None
        found = _bfs_path(g, v, u, banned, limit - 1)
        if found is None:
            continue
        path_vertices, path_steps = found
        w = CycleWitness((u, *path_vertices), (kind0, *path_steps))
        if best is None or w.length < best.length:
            best = w
    return best


def _bfs_path(
    g: MixedGraph,
    src: int,
    dst: int,
    banned_edge: Pair | None,
    cap: int,
) -> tuple[tuple[int, ...], tuple[str, ...]] | None:
    """Shortest src->dst path of length <= cap in the arc-augmented
    digraph, never traversing banned_edge; returns (vertices, steps)
    with vertices starting at src and ending at dst."""
    if cap < 1:
        return None
    parent: dict[int, tuple[int, str]] = {src: (-1, "")}
    frontier = deque([(src, 0)])
    while frontier:
        x, d = frontier.popleft()
        if d >= cap:
            break
        opts = [(w, ARC) for w in g.out_neighbors[x]]
        opts += [
            (w, EDGE)
            for w in g.edge_neighbors[x]
            if banned_edge is None or _normalize_edge(x, w) != banned_edge
        ]
        opts.sort(key=lambda t: (t[0], t[1] != ARC))
        for w, kind in opts:
            if w in parent:
                continue
            parent[w] = (x, kind)
            if w == dst:
                verts = [w]
                steps = []
                cur = w
                while cur != src:
                    prev, k = parent[cur]
                    steps.append(k)
                    verts.append(prev)
                    cur = prev
                verts.reverse()
                steps.reverse()
                return tuple(verts), tuple(steps)
            frontier.append((w, d + 1))
    return None
