"""Exhaustive search for (r,1,g)-graphs of minimum order.

With out-degree and in-degree 1, the arcs of a candidate graph form a
permutation digraph: a disjoint union of directed cycles.  Every arc
cycle is a mixed cycle, so each cycle needs length >= g, and the arc
structure is determined up to isomorphism by a partition of n into
parts >= g.  The search therefore fixes one canonical arc skeleton per
partition and extends it with undirected edges.

Edge completion proceeds one vertex at a time: pick a deficient vertex
and branch over the sorted combinations of its remaining partners,
which makes every reachable edge set appear along exactly one path.
Enumerate mode picks the least-index deficient vertex, keeping the
accumulated edge list sorted, and extends a partial edge set only if it
is lexicographically least in its orbit under the skeleton's
automorphism group (cycle rotations and swaps of equal-length cycles),
so the output has one representative per isomorphism class.  Decide
mode instead completes the most constrained vertex first, which
surfaces contradictions far earlier.  Pruning is exact distance
filtering (bounded-reachability matrix powers) for cycles through new
edges, degree-demand feasibility against the partners still reachable
at girth-compatible distance, and a parity cut.

Searches are resumable: the depth-first position is the list of
combination indices per level, and combination lists are recomputed
deterministically on replay, so a budget-interrupted run serializes to
a small checkpoint and the resumed run reproduces identical statistics.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations, product
from math import comb as _comb

import numpy as _np

from .bounds import ahm_bound
from .girth import girth
from .graphs import CageParams, MixedGraph, Pair, degree_profile, new_graph
from .isomorphism import canonical_form

CHECKPOINT_FORMAT = "mixedcages-checkpoint"
CHECKPOINT_VERSION = 1

_INF = float("inf")


class InconclusiveError(ValueError):
    """Cage-number determination hit its order cap or budget.

    Carries the orders proven empty before the run stopped.
    """

    def __init__(self, message: str, exhausted_orders: tuple[int, ...]) -> None:
        super().__init__(message)
        self.exhausted_orders = exhausted_orders


@dataclass(frozen=True)
class SearchSpec:
    """Parameters for one fixed-order search.

    ``mode`` is "decide" (stop at the first witness) or "enumerate"
    (all witnesses up to isomorphism).  Node budgets are deterministic;
    wall-clock budgets are best effort.  In decide mode skeletons are
    served round-robin in quanta of ``rotation_quantum`` nodes so a
    witness-free skeleton cannot stall the verdict; enumerate mode
    exhausts skeletons in order.  ``canonicity_cap`` bounds the size of
    skeleton automorphism groups used for orderly rejection; a skeleton
    with a larger group runs without interior rejection and relies on
    emission-time deduplication.
    """

    r: int
    g: int
    n: int
    z: int = 1
    mode: str = "decide"
    node_budget: int | None = None
    time_budget: float | None = None
    rotation_quantum: int = 1_000
    canonicity_cap: int = 100_000
    branch_policy: str = "auto"

    def __post_init__(self) -> None:
        if self.z != 1:
            raise ValueError("search supports out-degree z = 1 only")
        if self.r < 1:
            raise ValueError(f"edge-degree must be >= 1, got {self.r}")
        if self.g < 1:
            raise ValueError(f"girth must be >= 1, got {self.g}")
        if self.n < self.g:
            raise ValueError(f"order {self.n} below girth {self.g}")
        if self.mode not in ("decide", "enumerate"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.branch_policy not in ("auto", "lex", "focus"):
            raise ValueError(f"unknown branch policy {self.branch_policy!r}")

    def effective_policy(self) -> str:
        """Vertex-selection policy.

        "lex" completes the least-index deficient vertex, which keeps
        the accumulated edge list sorted and enables orderly
        isomorph rejection -- required for enumerate mode.  "focus"
        completes the most constrained vertex first (fail-first), which
        surfaces contradictions much earlier and is the default for
        decide mode, where isomorph rejection is unnecessary.
        """
        if self.branch_policy != "auto":
            return self.branch_policy
        return "lex" if self.mode == "enumerate" else "focus"

    @property
    def params(self) -> CageParams:
        return CageParams(r=self.r, z=self.z, g=self.g)

    def key(self) -> dict:
        """Fields a checkpoint must match to be resumable: anything that
        shapes the search tree or the rotation schedule."""
        return {"r": self.r, "g": self.g, "n": self.n, "z": self.z,
                "mode": self.mode, "policy": self.effective_policy(),
                "rotation_quantum": self.rotation_quantum,
                "canonicity_cap": self.canonicity_cap}


@dataclass
class SearchStats:
    nodes: int = 0
    girth_prunes: int = 0
    canonicity_prunes: int = 0
    infeasible_prunes: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "nodes": self.nodes,
            "girth_prunes": self.girth_prunes,
            "canonicity_prunes": self.canonicity_prunes,
            "infeasible_prunes": self.infeasible_prunes,
        }

    @staticmethod
    def from_dict(d: dict) -> SearchStats:
        return SearchStats(
            nodes=d["nodes"],
            girth_prunes=d["girth_prunes"],
            canonicity_prunes=d["canonicity_prunes"],
            infeasible_prunes=d["infeasible_prunes"],
        )


@dataclass
class SearchOutcome:
    """Result of search_order.

    ``status`` is "found", "exhausted", or "budget_exceeded"; in the
    last case ``checkpoint`` is a JSON-serializable frontier accepted by
    ``search_order(spec, checkpoint=...)``.  "exhausted" with no
    witnesses is a proof that no (r,1,g)-graph of this order exists.
    """

    status: str
    witnesses: list[MixedGraph]
    stats: SearchStats
    checkpoint: dict | None = None


@dataclass(frozen=True)
class CageNumber:
    """A determined minimum order, with provenance.

    "bound-matched" means a witness exists at the closed-form lower
    bound, so no smaller order needed searching; "search-determined"
    records the orders exhaustively proven empty in ``exhausted_below``.
    """

    r: int
    z: int
    g: int
    value: int
    provenance: str
    witness: MixedGraph
    exhausted_below: tuple[int, ...]


@dataclass(frozen=True)
class ArcSkeleton:
    """Canonical arc layout for one partition: consecutive blocks, each
    inducing a directed cycle."""

    parts: tuple[int, ...]
    arcs: tuple[Pair, ...]


def graph_payload(g: MixedGraph) -> dict:
    """Lossless JSON-ready form of a graph (checkpoints, workers)."""
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "arcs": [list(a) for a in g.sorted_arcs()],
    }


def graph_from_payload(d: dict) -> MixedGraph:
    return new_graph(
        d["n"],
        [tuple(e) for e in d["edges"]],
        [tuple(a) for a in d["arcs"]],
    )


def arc_skeletons(n: int, g: int):
    """Yield the arc skeletons for order n and girth target g.

    One skeleton per partition of n into parts >= max(g, 2), parts
    sorted descending, partitions in descending lexicographic order.
    (Length-1 arc cycles would be loops; simple mixed graphs exclude
    them, hence the floor of 2.)
    """
    for parts in _partitions(n, max(g, 2)):
        yield ArcSkeleton(parts, tuple(_skeleton_arcs(parts)))


def _partitions(n: int, min_part: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), min_part - 1, -1):
        rest = n - first
        if rest == 0:
            yield (first,)
        elif rest >= min_part:
            for sub in _partitions(rest, min_part, first):
                yield (first,) + sub


def _block_starts(parts: tuple[int, ...]) -> list[int]:
    starts, acc = [], 0
    for p in parts:
        starts.append(acc)
        acc += p
    return starts


def _skeleton_arcs(parts: tuple[int, ...]) -> list[Pair]:
    arcs = []
    for start, length in zip(_block_starts(parts), parts):
        for i in range(length):
            arcs.append((start + i, start + (i + 1) % length))
    return arcs


def skeleton_group_order(parts: tuple[int, ...]) -> int:
    """|Aut| of the labeled skeleton: rotations of each cycle times
    permutations of equal-length cycles."""
    total = 1
    for p in parts:
        total *= p
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    for c in counts.values():
        for k in range(2, c + 1):
            total *= k
    return total


def _skeleton_autos(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All skeleton automorphisms as vertex image tuples."""
    n = sum(parts)
    starts = _block_starts(parts)
    by_len: dict[int, list[int]] = {}
    for idx, length in enumerate(parts):
        by_len.setdefault(length, []).append(idx)
    classes = [by_len[length] for length in sorted(by_len)]
    class_maps = [list(permutations(c)) for c in classes]
    out = []
    for assignment in product(*class_maps):
        sigma: dict[int, int] = {}
        for cls, mapped in zip(classes, assignment):
            for src, dst in zip(cls, mapped):
                sigma[src] = dst
        for rots in product(*[range(p) for p in parts]):
            img = [0] * n
            for i, length in enumerate(parts):
                s, d, r = starts[i], starts[sigma[i]], rots[i]
                for pos in range(length):
                    img[s + pos] = d + (pos + r) % length
            out.append(tuple(img))
    return out


# ---------------------------------------------------------------------------
# canonicity under the skeleton group


def _map_edge(gamma: tuple[int, ...], e: Pair) -> Pair:
    a, b = gamma[e[0]], gamma[e[1]]
    return (a, b) if a < b else (b, a)


def _full_compare(
    gamma: tuple[int, ...], edges: tuple[Pair, ...]
) -> tuple[int, Pair | None]:
    """Compare sorted(gamma(edges)) against edges.

    Returns (-1/0/+1, d) with d the gamma-side value at the first
    difference (None on ties); d feeds the incremental bookkeeping.
    """
    mapped = sorted(_map_edge(gamma, e) for e in edges)
    for m, e in zip(mapped, edges):
        if m < e:
            return -1, m
        if m > e:
            return 1, m
    return 0, None


class _CanonicityTracker:
    """Incremental lexicographic-minimality test under the skeleton group.

    Each frame stores, per group element, whether it ties the current
    edge list setwise or strictly exceeds it, plus the exact deciding
    value for strict elements.  Every accepted batch sorts after all
    earlier edges, so a tie needs only its mapped batch compared with
    the batch, and a strict element can only flip when a mapped batch
    edge drops below its deciding value.
    """

    def __init__(self, autos: list[tuple[int, ...]]) -> None:
        self.autos = autos

    def root(self) -> tuple[list[int], list[tuple[int, Pair]]]:
        return list(range(len(self.autos))), []

    def child(
        self,
        edges: tuple[Pair, ...],
        batch: tuple[Pair, ...],
        ties: list[int],
        strict: list[tuple[int, Pair]],
    ) -> tuple[list[int], list[tuple[int, Pair]]] | None:
        """State after appending a sorted batch; None when not minimal."""
        batch_list = list(batch)
        new_ties: list[int] = []
        new_strict: list[tuple[int, Pair]] = []
        for gi in ties:
            gamma = self.autos[gi]
            mapped = sorted(_map_edge(gamma, e) for e in batch)
            if mapped < batch_list:
                return None
            if mapped == batch_list:
                new_ties.append(gi)
            else:
                verdict, d = _full_compare(gamma, edges)
                assert verdict > 0 and d is not None
                new_strict.append((gi, d))
        for gi, d in strict:
            gamma = self.autos[gi]
            m = min(_map_edge(gamma, e) for e in batch)
            if m >= d:
                new_strict.append((gi, d))
                continue
            verdict, d2 = _full_compare(gamma, edges)
            if verdict < 0:
                return None
            if verdict == 0:
                new_ties.append(gi)
            else:
                assert d2 is not None
                new_strict.append((gi, d2))
        return new_ties, new_strict


def _is_lex_min_full(
    edges: tuple[Pair, ...], autos: list[tuple[int, ...]]
) -> bool:
    """Reference full-scan implementation (kept for tests)."""
    lst = list(edges)
    for gamma in autos:
        if sorted(_map_edge(gamma, e) for e in edges) < lst:
            return False
    return True


# ---------------------------------------------------------------------------
# per-skeleton depth-first search


class _Frame:
    __slots__ = ("vertex", "combos", "next_idx", "applied", "ties", "strict")

    def __init__(self, vertex, combos, applied, ties, strict):
        self.vertex = vertex
        self.combos = combos
        self.next_idx = 0
        self.applied = applied  # batch size applied to enter this frame
        self.ties = ties
        self.strict = strict


class _SkeletonSearch:
    """Suspendable edge-completion search over one arc skeleton."""

    def __init__(self, spec: SearchSpec, skeleton: ArcSkeleton) -> None:
        self.spec = spec
        self.skeleton = skeleton
        n = spec.n
        self.n = n
        self.arc_mat = _np.zeros((n, n), dtype=bool)
        for u, v in skeleton.arcs:
            self.arc_mat[u, v] = True
        self.edge_mat = _np.zeros((n, n), dtype=bool)
        self.deg = _np.zeros(n, dtype=_np.int32)
        self.edges: list[Pair] = []  # under "lex" policy: stays sorted
        self.exhausted = False
        self.started = False
        self.policy = spec.effective_policy()
        self.tracker: _CanonicityTracker | None = None
        if (
            self.policy == "lex"
            and skeleton_group_order(skeleton.parts) <= spec.canonicity_cap
        ):
            self.tracker = _CanonicityTracker(_skeleton_autos(skeleton.parts))
        self.stack: list[_Frame] = []
        self._near_cache: _np.ndarray | None = None

    # -- bounded-distance reachability (boolean matrix powers)

    def _trans(self) -> _np.ndarray:
        return self.arc_mat | self.edge_mat

    def _near_all(self) -> _np.ndarray:
        """near[u, w]: a mixed path of length 1..g-2 joins u to w in
        either direction, i.e. an edge {u,w} would close a cycle < g."""
        if self._near_cache is not None:
            return self._near_cache
        cap = self.spec.g - 2
        n = self.n
        if cap < 1:
            near = _np.zeros((n, n), dtype=bool)
        else:
            f = self._trans()
            fu = f.astype(_np.uint16)
            reach = f.copy()
            power = fu
            for _ in range(cap - 1):
                power = (power @ fu).astype(bool).astype(_np.uint16)
                reach |= power.astype(bool)
            near = reach | reach.T
        self._near_cache = near
        return near

    # -- state mutation

    def _add_edge(self, u: int, v: int) -> None:
        self.edge_mat[u, v] = True
        self.edge_mat[v, u] = True
        self.deg[u] += 1
        self.deg[v] += 1
        self.edges.append((u, v) if u < v else (v, u))
        self._near_cache = None

    def _remove_last(self, count: int) -> None:
        for _ in range(count):
            u, v = self.edges.pop()
            self.edge_mat[u, v] = False
            self.edge_mat[v, u] = False
            self.deg[u] -= 1
            self.deg[v] -= 1
        if count:
            self._near_cache = None

    # -- search proper

    def _branch_vertex(self) -> int | None:
        """Vertex to complete next, per the configured branch policy.

        "lex": least-index deficient vertex (partners then all sit above
        it, keeping the edge list sorted).  "focus": the deficient
        vertex with the least candidate slack, so contradictions
        surface early.
        """
        deficient = _np.nonzero(self.deg < self.spec.r)[0]
        if len(deficient) == 0:
            return None
        if self.policy == "lex":
            return int(deficient[0])
        near = self._near_all()
        need = self.spec.r - self.deg[deficient]
        pool = (
            (self.deg < self.spec.r)[None, :]
            & ~near[deficient]
            & ~self.edge_mat[deficient]
        )
        pool[_np.arange(len(deficient)), deficient] = False
        slack = pool.sum(axis=1) - need
        return int(deficient[int(slack.argmin())])

    def _candidates(self, v: int) -> list[int]:
        """Partners that can take an edge to v without closing a cycle
        shorter than g (single-edge criterion, exact).  Under "lex" the
        completion order restricts partners to u > v."""
        near_v = self._near_all()[v]
        ok = (self.deg < self.spec.r) & ~near_v & ~self.edge_mat[v]
        if self.policy == "lex":
            ok[: v + 1] = False
        else:
            ok[v] = False
        return [int(u) for u in _np.nonzero(ok)[0]]

    def _combos_for(self, v: int) -> tuple[list[tuple[int, ...]], int]:
        """Sorted partner combinations for completing vertex v, plus the
        count of raw combinations eliminated by girth constraints.

        The girth filtering here is exact, not merely necessary: every
        new edge of a batch is incident to v, so a too-short cycle
        through the batch uses either one new edge plus an old return
        path (the per-candidate distance criterion, cap g-2) or two new
        edges meeting at v plus an old path avoiding v (the pairwise
        criterion, cap g-3).  Three new edges cannot lie on one cycle
        since the cycle would visit v twice, and old paths cannot use
        new edges without passing through v.
        """
        need = self.spec.r - int(self.deg[v])
        cands = self._candidates(v)
        if len(cands) < need:
            return [], 0
        cap = self.spec.g - 3
        if cap >= 1 and len(cands) > 1:
            # bounded reach among candidates with v deleted
            f = self._trans().copy()
            f[v, :] = False
            f[:, v] = False
            fu = f.astype(_np.uint16)
            reach = f.copy()
            power = fu
            for _ in range(cap - 1):
                power = (power @ fu).astype(bool).astype(_np.uint16)
                reach |= power.astype(bool)
            bad = reach | reach.T

            def pair_ok(a: int, b: int) -> bool:
                return not bad[a, b]

        else:

            def pair_ok(a: int, b: int) -> bool:
                return True

        out: list[tuple[int, ...]] = []
        chosen: list[int] = []

        def rec(start: int) -> None:
            if len(chosen) == need:
                out.append(tuple(chosen))
                return
            remaining = need - len(chosen)
            for i in range(start, len(cands) - remaining + 1):
                u = cands[i]
                if all(pair_ok(w, u) for w in chosen):
                    chosen.append(u)
                    rec(i + 1)
                    chosen.pop()

        rec(0)
        return out, _comb(len(cands), need) - len(out)

    def _feasible(self) -> bool:
        """Every deficient vertex still sees enough girth-compatible
        deficient partners to meet its remaining demand."""
        deficient = self.deg < self.spec.r
        if not deficient.any():
            return True
        near = self._near_all()
        rows = _np.nonzero(deficient)[0]
        avail = (
            deficient[None, :]
            & ~near[rows]
            & ~self.edge_mat[rows]
        )
        avail[_np.arange(len(rows)), rows] = False
        counts = avail.sum(axis=1)
        need = self.spec.r - self.deg[rows]
        return bool((counts >= need).all())

    def _push_frame(
        self, applied: int, ties: list[int], strict: list[tuple[int, Pair]]
    ) -> tuple[bool, int]:
        """Create the frame for the current state.

        Returns (pushed, girth-pruned combo count); pushed is False when
        the state is already complete."""
        v = self._branch_vertex()
        if v is None:
            return False, 0
        combos, pruned = self._combos_for(v)
        self.stack.append(_Frame(v, combos, applied, ties, strict))
        return True, pruned

    def run(self, quota: float, deadline: float | None, stats: SearchStats,
            emit) -> tuple[str, int]:
        """Advance until the node quota or deadline is consumed, the
        emit callback accepts a complete graph (decide), or the skeleton
        is exhausted.  Returns ("found" | "paused" | "exhausted",
        nodes consumed this visit)."""
        if self.exhausted:
            return "exhausted", 0
        used = 0
        if not self.started:
            self.started = True
            ties, strict = self.tracker.root() if self.tracker else ([], [])
            if not self._feasible():
                stats.infeasible_prunes += 1
                self.exhausted = True
                return "exhausted", used
            pushed, pruned = self._push_frame(0, ties, strict)
            stats.girth_prunes += pruned
            if not pushed:
                done = emit(self._graph())
                self.exhausted = True
                return ("found" if done else "exhausted"), used
        while self.stack:
            if used >= quota:
                return "paused", used
            if deadline is not None and time.monotonic() > deadline:
                return "paused", used
            frame = self.stack[-1]
            if frame.next_idx >= len(frame.combos):
                self.stack.pop()
                self._remove_last(frame.applied)
                continue
            combo = frame.combos[frame.next_idx]
            frame.next_idx += 1
            used += 1
            stats.nodes += 1
            v = frame.vertex
            for u in combo:
                self._add_edge(v, u)
            ties: list[int] = []
            strict: list[tuple[int, Pair]] = []
            if self.tracker is not None:
                res = self.tracker.child(
                    tuple(self.edges),
                    tuple((v, u) for u in combo),
                    frame.ties,
                    frame.strict,
                )
                if res is None:
                    stats.canonicity_prunes += 1
                    self._remove_last(len(combo))
                    continue
                ties, strict = res
            if not self._feasible():
                stats.infeasible_prunes += 1
                self._remove_last(len(combo))
                continue
            pushed, pruned = self._push_frame(len(combo), ties, strict)
            stats.girth_prunes += pruned
            if not pushed:
                done = emit(self._graph())
                self._remove_last(len(combo))
                if done:
                    return "found", used
        self.exhausted = True
        return "exhausted", used

    def _graph(self) -> MixedGraph:
        return new_graph(self.n, list(self.edges), list(self.skeleton.arcs))

    # -- suspension

    def to_state(self) -> dict:
        return {
            "parts": list(self.skeleton.parts),
            "exhausted": self.exhausted,
            "started": self.started,
            "path": [f.next_idx for f in self.stack],
        }

    def restore(self, state: dict) -> None:
        assert tuple(state["parts"]) == self.skeleton.parts
        self.exhausted = state["exhausted"]
        self.started = state["started"]
        if self.exhausted or not self.started:
            return
        path = state["path"]
        ties, strict = self.tracker.root() if self.tracker else ([], [])
        pushed, _ = self._push_frame(0, ties, strict)
        assert pushed, "checkpoint replay diverged"
        for depth, next_idx in enumerate(path):
            frame = self.stack[-1]
            frame.next_idx = next_idx
            if depth == len(path) - 1:
                break
            combo = frame.combos[next_idx - 1]
            v = frame.vertex
            for u in combo:
                self._add_edge(v, u)
            ties, strict = frame.ties, frame.strict
            if self.tracker is not None:
                res = self.tracker.child(
                    tuple(self.edges),
                    tuple((v, u) for u in combo),
                    frame.ties,
                    frame.strict,
                )
                assert res is not None, "checkpoint replay diverged"
                ties, strict = res
            pushed, _ = self._push_frame(len(combo), ties, strict)
            assert pushed, "checkpoint replay diverged"


# ---------------------------------------------------------------------------
# engine


def search_order(spec: SearchSpec, checkpoint: dict | None = None) -> SearchOutcome:
    """Search for (r,1,g)-graphs of order exactly spec.n.

    Witnesses are verified complete graphs: regular (r, 1) with girth
    exactly g.  Pass a checkpoint from an earlier budget-exceeded
    outcome to resume; statistics accumulate across resumes and node
    budgets apply to the cumulative count.
    """
    stats = SearchStats()
    if spec.n * spec.r % 2 == 1:
        # an r-regular edge layer needs an even degree sum
        return SearchOutcome("exhausted", [], stats)
    skeletons = list(arc_skeletons(spec.n, spec.g))
    if not skeletons:
        return SearchOutcome("exhausted", [], stats)
    searches = [_SkeletonSearch(spec, sk) for sk in skeletons]
    witnesses: list[MixedGraph] = []
    seen_forms: set[bytes] = set()
    cursor = 0
    visit_quota_left: float | None = None
    if checkpoint is not None:
        _validate_checkpoint(spec, checkpoint, len(searches))
        stats = SearchStats.from_dict(checkpoint["stats"])
        for search, st in zip(searches, checkpoint["skeletons"]):
            search.restore(st)
        for payload in checkpoint["witnesses"]:
            witnesses.append(graph_from_payload(payload))
        seen_forms = {bytes.fromhex(h) for h in checkpoint["seen_forms"]}
        cursor = checkpoint["cursor"]
        visit_quota_left = checkpoint["visit_quota_left"]

    def emit(g: MixedGraph) -> bool:
        if degree_profile(g).regular != (spec.r, spec.z):
            return False
        if girth(g).girth != spec.g:
            return False
        if spec.mode == "decide":
            witnesses.append(g)
            return True
        enc = canonical_form(g).encoding
        if enc not in seen_forms:
            seen_forms.add(enc)
            witnesses.append(g)
        return False

    deadline = None
    if spec.time_budget is not None:
        deadline = time.monotonic() + spec.time_budget
    quantum: float = spec.rotation_quantum if spec.mode == "decide" else _INF

    def make_checkpoint(cur: int, quota_left: float) -> dict:
        return {
            "format": CHECKPOINT_FORMAT,
            "version": CHECKPOINT_VERSION,
            "spec": spec.key(),
            "cursor": cur,
            "visit_quota_left": (
                None if quota_left == _INF else int(quota_left)
            ),
            "stats": stats.as_dict(),
            "skeletons": [s.to_state() for s in searches],
            "witnesses": [graph_payload(w) for w in witnesses],
            "seen_forms": sorted(f.hex() for f in seen_forms),
        }

    while True:
        pending = [
            i for i in range(len(searches)) if not searches[i].exhausted
        ]
        if not pending:
            break
        for idx in pending:
            if idx < cursor:
                continue
            # a resumed search finishes its interrupted visit first so
            # the rotation schedule matches an uninterrupted run
            visit_quota = quantum
            if visit_quota_left is not None:
                visit_quota = visit_quota_left
                visit_quota_left = None
            remaining = _INF
            if spec.node_budget is not None:
                remaining = spec.node_budget - stats.nodes
                if remaining <= 0:
                    return SearchOutcome(
                        "budget_exceeded",
                        witnesses,
                        stats,
                        make_checkpoint(idx, visit_quota),
                    )
            status, used = searches[idx].run(
                min(visit_quota, remaining), deadline, stats, emit
            )
            if status == "found":
                return SearchOutcome("found", witnesses, stats)
            if status == "paused" and used < visit_quota:
                # stopped by the global budget or the deadline mid-visit
                return SearchOutcome(
                    "budget_exceeded",
                    witnesses,
                    stats,
                    make_checkpoint(idx, visit_quota - used),
                )
        cursor = 0
    status = "found" if witnesses else "exhausted"
    return SearchOutcome(status, witnesses, stats)


def _validate_checkpoint(spec: SearchSpec, cp: dict, n_skeletons: int) -> None:
    if cp.get("format") != CHECKPOINT_FORMAT:
        raise ValueError("not a search checkpoint")
    if cp.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {cp.get('version')}")
    if cp.get("spec") != spec.key():
        raise ValueError(
            f"checkpoint spec {cp.get('spec')} does not match {spec.key()}"
        )
    if len(cp.get("skeletons", [])) != n_skeletons:
        raise ValueError("checkpoint skeleton list does not match")


def _run_single_skeleton(payload: tuple) -> dict:
    """Worker: exhaust one skeleton; used by search_order_parallel."""
    spec_fields, parts = payload
    spec = SearchSpec(**spec_fields)
    skeleton = ArcSkeleton(tuple(parts), tuple(_skeleton_arcs(tuple(parts))))
    search = _SkeletonSearch(spec, skeleton)
    stats = SearchStats()
    witnesses: list[MixedGraph] = []
    seen: set[bytes] = set()

    def emit(g: MixedGraph) -> bool:
        if degree_profile(g).regular != (spec.r, spec.z):
            return False
        if girth(g).girth != spec.g:
            return False
        if spec.mode == "decide":
            witnesses.append(g)
            return True
        enc = canonical_form(g).encoding
        if enc not in seen:
            seen.add(enc)
            witnesses.append(g)
        return False

    status, _ = search.run(_INF, None, stats, emit)
    return {
        "status": status,
        "witnesses": [graph_payload(w) for w in witnesses],
        "stats": stats.as_dict(),
    }


def search_order_parallel(spec: SearchSpec, threads: int) -> SearchOutcome:
    """search_order with skeletons exhausted across worker processes.

    Results are schedule independent: in decide mode the reported
    witness comes from the lowest-index skeleton that found one, and the
    verdict is issued only once every lower-index skeleton has completed
    (statistics then cover exactly the skeletons up to the deciding
    one).  Budgets and checkpoints are not supported here; use the
    sequential engine for resumable runs.
    """
    from concurrent.futures import ProcessPoolExecutor, as_completed

    if spec.node_budget is not None or spec.time_budget is not None:
        raise ValueError("budgets are not supported with parallel search")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    stats = SearchStats()
    if spec.n * spec.r % 2 == 1:
        return SearchOutcome("exhausted", [], stats)
    skeletons = list(arc_skeletons(spec.n, spec.g))
    if not skeletons:
        return SearchOutcome("exhausted", [], stats)
    spec_fields = {
        "r": spec.r, "g": spec.g, "n": spec.n, "z": spec.z,
        "mode": spec.mode, "canonicity_cap": spec.canonicity_cap,
        "branch_policy": spec.branch_policy,
    }
    payloads = [(spec_fields, list(sk.parts)) for sk in skeletons]
    results: list[dict | None] = [None] * len(skeletons)
    decided = None
    pool = ProcessPoolExecutor(max_workers=threads)
    try:
        futures = {
            pool.submit(_run_single_skeleton, p): i
            for i, p in enumerate(payloads)
        }
        for fut in as_completed(futures):
            results[futures[fut]] = fut.result()
            if spec.mode == "decide":
                # earliest skeleton with a witness, decidable only once
                # every lower-index skeleton has completed
                for i, res in enumerate(results):
                    if res is None:
                        break
                    if res["status"] == "found":
                        decided = i
                        break
                if decided is not None:
                    break
    finally:
        pool.shutdown(wait=True, cancel_futures=True)
    if spec.mode == "decide" and decided is not None:
        for res in results[: decided + 1]:
            assert res is not None
            for key, val in res["stats"].items():
                setattr(stats, key, getattr(stats, key) + val)
        witness = graph_from_payload(results[decided]["witnesses"][0])
        return SearchOutcome("found", [witness], stats)
    witnesses: list[MixedGraph] = []
    seen: set[bytes] = set()
    for res in results:
        assert res is not None
        for key, val in res["stats"].items():
            setattr(stats, key, getattr(stats, key) + val)
        for payload in res["witnesses"]:
            w = graph_from_payload(payload)
            enc = canonical_form(w).encoding
            if enc not in seen:
                seen.add(enc)
                witnesses.append(w)
    status = "found" if witnesses else "exhausted"
    return SearchOutcome(status, witnesses, stats)


def determine_cage_number(
    r: int,
    g: int,
    n_max: int,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> CageNumber:
    """Smallest order admitting an (r,1,g)-graph, with witness.

    Orders below the closed-form lower bound are excluded by the bound
    itself and not searched.  Budgets apply per order; running out, or
    reaching n_max without a witness, raises InconclusiveError carrying
    the orders proven empty.
    """
    lower = ahm_bound(r, g)
    exhausted: list[int] = []
    if n_max < lower:
        raise InconclusiveError(
            f"order cap {n_max} is below the lower bound {lower}",
            tuple(exhausted),
        )
    for n in range(lower, n_max + 1):
        spec = SearchSpec(
            r=r, g=g, n=n, mode="decide",
            node_budget=node_budget, time_budget=time_budget,
        )
        outcome = search_order(spec)
        if outcome.status == "found":
            return CageNumber(
                r=r,
                z=1,
                g=g,
                value=n,
                provenance="bound-matched" if n == lower else "search-determined",
                witness=outcome.witnesses[0],
                exhausted_below=tuple(exhausted),
            )
        if outcome.status == "exhausted":
            exhausted.append(n)
            continue
        raise InconclusiveError(
            f"budget exceeded at order {n}", tuple(exhausted)
        )
    raise InconclusiveError(
        f"no witness up to order cap {n_max}", tuple(exhausted)
    )
