"""Canonical labeling, isomorphism testing, and automorphism groups.

Mixed graphs carry three adjacency relations (edge, arc-out, arc-in),
and all three drive an iterative color refinement.  Canonical labeling
runs the usual individualization-refinement backtrack: refine to an
equitable coloring, branch on the vertices of the first smallest
non-singleton color class, and keep the lexicographically least
adjacency encoding over all discrete leaves.  Whenever two leaves
produce the same encoding, composing their labelings yields a graph
automorphism; discovered automorphisms prune equivalent branches at the
top branching level and, collected together, generate the full
automorphism group.  Group order is computed from a stabilizer chain
over the collected elements, which doubles as a cross-check against
plain closure enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .graphs import MixedGraph, Permutation, apply_permutation, degree_profile


class TooLargeError(ValueError):
    """Group enumeration exceeded its cap."""


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant encoding plus a permutation achieving it.

    Two mixed graphs are isomorphic iff their encodings are equal.
    ``apply_permutation(g, permutation)`` realizes the canonical
    labeling of ``g``.
    """

    encoding: bytes
    permutation: Permutation


@dataclass(frozen=True)
class AutGroup:
    """Automorphism group given by generators and exact order."""

    n: int
    generators: tuple[Permutation, ...]
    order: int

    def elements(self, cap: int = 10_000) -> list[Permutation]:
        """All group elements by closure enumeration (TooLargeError past cap)."""
        return [
            Permutation(t)
            for t in _closure([p.image for p in self.generators], self.n, cap)
        ]


@dataclass(frozen=True)
class GroupFingerprint:
    """Coarse structure report: order, commutativity, max element order."""

    order: int
    abelian: bool
    max_element_order: int
    name: str | None


def canonical_form(g: MixedGraph) -> CanonicalForm:
    """Canonical encoding; equal across all relabelings of the same graph."""
    enc, perm, _ = _ir_search(g)
    return CanonicalForm(enc, perm)


def is_isomorphic(
    g: MixedGraph, h: MixedGraph
) -> tuple[bool, Permutation | None]:
    """Isomorphism test with witness mapping g onto h."""
    if g.n != h.n or len(g.edges) != len(h.edges) or len(g.arcs) != len(h.arcs):
        return False, None
    pg, ph = degree_profile(g), degree_profile(h)
    if sorted(zip(pg.deg, pg.outdeg, pg.indeg)) != sorted(
        zip(ph.deg, ph.outdeg, ph.indeg)
    ):
        return False, None
    cg = canonical_form(g)
    ch = canonical_form(h)
    if cg.encoding != ch.encoding:
        return False, None
    witness = ch.permutation.inverse() @ cg.permutation
    return True, witness


def automorphism_group(g: MixedGraph) -> AutGroup:
    """Generators and exact order of the automorphism group.

    Order comes from a stabilizer chain over the automorphisms collected
    during canonical labeling; every generator is re-verified against
    the graph before being reported.
    """
    special = _symmetric_special_case(g)
    if special is not None:
        return special
    _, _, elements = _ir_search(g)
    chain = _StabChain(g.n)
    gens: list[Permutation] = []
    for img in sorted(elements):
        if chain.extend(img):
            p = Permutation(img)
            assert apply_permutation(g, p) == g
            gens.append(p)
    return AutGroup(n=g.n, generators=tuple(gens), order=chain.order())


def group_fingerprint(group: AutGroup, cap: int = 1000) -> GroupFingerprint:
    """Order, abelianness, and max element order, with a name when the
    combination pins the group down.

    An abelian group of order 20 with maximum element order 10 is
    Z2 x Z10 (the only other abelian order-20 group is cyclic, with an
    element of order 20).  Cyclic groups are recognized by max element
    order equal to the group order.
    """
    if group.order > cap:
        raise TooLargeError(
            f"group order {group.order} exceeds enumeration cap {cap}"
        )
    gens = [p.image for p in group.generators]
    elements = _closure(gens, group.n, cap)
    abelian = all(
        _compose(a, b) == _compose(b, a) for a in gens for b in gens
    )
    if abelian:
        # generators commuting with every element puts them in the
        # center, and they generate, so the whole group is abelian
        assert all(
            _compose(a, e) == _compose(e, a) for a in gens for e in elements
        )
    max_order = max(
        (Permutation(e).order() for e in elements), default=1
    )
    name = None
    if abelian and max_order == group.order:
        name = f"Z{group.order}"
    elif abelian and group.order == 20 and max_order == 10:
        name = "Z2 x Z10"
    elif not abelian and group.order == 6:
        name = "S3"
    return GroupFingerprint(group.order, abelian, max_order, name)


# ---------------------------------------------------------------------------
# individualization-refinement search


def _refine(g: MixedGraph, colors: list[int]) -> list[int]:
    """Equitable refinement over the three relations, canonically ranked."""
    n = g.n
    ncolors = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in g.edge_neighbors[v])),
                tuple(sorted(colors[w] for w in g.out_neighbors[v])),
                tuple(sorted(colors[w] for w in g.in_neighbors[v])),
            )
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    return [c * 2 + (0 if u == v else 1) for u, c in enumerate(colors)]


def _target_cell(colors: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    nonsingle = [(len(vs), c, vs) for c, vs in cells.items() if len(vs) > 1]
    _, _, vs = min(nonsingle)
    return sorted(vs)


def _encode(g: MixedGraph, pos: list[int]) -> bytes:
    """Row-major byte encoding of the three relations under a labeling."""
    n = g.n
    buf = bytearray(n * n)
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        buf[i * n + j] |= 1
        buf[j * n + i] |= 1
    for u, v in g.arcs:
        buf[pos[u] * n + pos[v]] |= 2
    return bytes(buf)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _ir_search(
    g: MixedGraph,
) -> tuple[bytes, Permutation, list[tuple[int, ...]]]:
    """Backtracking search; returns the canonical encoding, one canonical
    labeling, and all automorphisms discovered from equal-encoding leaves.

    Branch pruning: two candidate vertices of a target cell lead to
    interchangeable subtrees whenever a known automorphism that fixes
    every previously individualized vertex maps one to the other, so
    only one orbit representative per prefix-stabilizer orbit is
    explored.  The skipped subtrees contribute neither a smaller
    encoding nor automorphisms outside the group already generated.
    """
    n = g.n
    if n == 0:
        return b"", Permutation(()), []
    best: list[bytes | None] = [None]
    best_perm: list[Permutation | None] = [None]
    seen: dict[bytes, tuple[int, ...]] = {}
    autos: list[tuple[int, ...]] = []

    def leaf(colors: list[int]) -> None:
        enc = _encode(g, colors)
        perm = tuple(colors)
        if enc in seen:
            other = seen[enc]
            # apply(g, other) == apply(g, perm), so inv(other) . perm
            # fixes g; record it
            inv_other = [0] * n
            for i, j in enumerate(other):
                inv_other[j] = i
            phi = tuple(inv_other[perm[v]] for v in range(n))
            p = Permutation(phi)
            if apply_permutation(g, p) == g:
                autos.append(phi)
        else:
            seen[enc] = perm
        if best[0] is None or enc < best[0]:
            best[0] = enc
            best_perm[0] = Permutation(perm)

    def prefix_orbit_uf(prefix: tuple[int, ...]) -> _UnionFind:
        uf = _UnionFind(n)
        for phi in autos:
            if all(phi[x] == x for x in prefix):
                for x in range(n):
                    uf.union(x, phi[x])
        return uf

    def descend(colors: list[int], prefix: tuple[int, ...]) -> None:
        colors = _refine(g, colors)
        if len(set(colors)) == n:
            leaf(colors)
            return
        cell = _target_cell(colors)
        tried: list[int] = []
        autos_seen = -1
        uf = None
        for v in cell:
            if tried:
                if len(autos) != autos_seen:
                    uf = prefix_orbit_uf(prefix)
                    autos_seen = len(autos)
                if any(uf.find(v) == uf.find(u) for u in tried):
                    continue
            tried.append(v)
            descend(_individualize(colors, v), prefix + (v,))

    descend([0] * n, ())
    assert best[0] is not None and best_perm[0] is not None
    return best[0], best_perm[0], autos


def _symmetric_special_case(g: MixedGraph) -> AutGroup | None:
    """Full symmetric group shortcuts for the all-or-nothing graphs."""
    n = g.n
    full_edges = n * (n - 1) // 2
    if g.arcs:
        return None
    if len(g.edges) not in (0, full_edges):
        return None
    if n <= 2:
        gens: tuple[Permutation, ...] = ()
        if n == 2:
            gens = (Permutation((1, 0)),)
        return AutGroup(n=n, generators=gens, order=factorial(n))
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = [(i + 1) % n for i in range(n)]
    return AutGroup(
        n=n,
        generators=(Permutation(tuple(swap)), Permutation(tuple(cycle))),
        order=factorial(n),
    )


# ---------------------------------------------------------------------------
# permutation group machinery


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p . q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _closure(
    gens: list[tuple[int, ...]], n: int, cap: int
) -> list[tuple[int, ...]]:
    """All elements generated by gens, in sorted order."""
    identity = tuple(range(n))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                f = _compose(s, e)
                if f not in elements:
                    if len(elements) >= cap:
                        raise TooLargeError(
                            f"closure exceeded enumeration cap {cap}"
                        )
                    elements.add(f)
                    nxt.append(f)
        frontier = nxt
    return sorted(elements)


class _StabChain:
    """Deterministic Schreier-Sims stabilizer chain for small groups.

    ``extend(p)`` sifts p and, when a residue survives, installs it and
    re-stabilizes the whole chain to a fixpoint: at every level the
    orbit of the base point is closed under all generators fixing the
    base prefix (which includes generators installed at deeper levels),
    and every Schreier generator sifts to the identity.  At the
    fixpoint, Schreier's lemma makes the order the product of the orbit
    sizes.  Quadratic re-closure is fine at the group sizes this
    package meets.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.identity = tuple(range(n))
        self.base: list[int] = []
        self.level_gens: list[list[tuple[int, ...]]] = []
        self.transversal: list[dict[int, tuple[int, ...]]] = []

    def order(self) -> int:
        total = 1
        for t in self.transversal:
            total *= len(t)
        return total

    def sift(self, p: tuple[int, ...]) -> tuple[int, ...]:
        return self._sift_from(p, 0)

    def extend(self, p: tuple[int, ...]) -> bool:
        """Add p to the group; returns True if the group grew."""
        residue = self.sift(p)
        if residue == self.identity:
            return False
        self._raw_install(residue)
        self._stabilize()
        return True

    def _sift_from(self, p: tuple[int, ...], start: int) -> tuple[int, ...]:
        for lvl in range(start, len(self.base)):
            x = p[self.base[lvl]]
            t = self.transversal[lvl].get(x)
            if t is None:
                return p
            p = _compose(_invert(t), p)
        return p

    def _raw_install(self, p: tuple[int, ...]) -> None:
        # place p at the first level whose base point it moves
        for lvl in range(len(self.base)):
            if p[self.base[lvl]] != self.base[lvl]:
                self.level_gens[lvl].append(p)
                return
        b = min(i for i in range(self.n) if p[i] != i)
        self.base.append(b)
        self.level_gens.append([p])
        self.transversal.append({b: self.identity})

    def _gens_at(self, lvl: int) -> list[tuple[int, ...]]:
        # generators of the stabilizer of base[0..lvl-1]: everything
        # installed at this level or deeper fixes that prefix
        return [s for gens in self.level_gens[lvl:] for s in gens]

    def _stabilize(self) -> None:
        changed = True
        while changed:
            changed = False
            for lvl in range(len(self.base)):
                gens = self._gens_at(lvl)
                trans = self._orbit(self.base[lvl], gens)
                if len(trans) != len(self.transversal[lvl]):
                    changed = True
                self.transversal[lvl] = trans
                for x in sorted(trans):
                    tx = trans[x]
                    for s in gens:
                        sg = _compose(
                            _invert(trans[s[x]]), _compose(s, tx)
                        )
                        residue = self._sift_from(sg, lvl + 1)
                        if residue != self.identity:
                            self._raw_install(residue)
                            changed = True

    def _orbit(
        self, b: int, gens: list[tuple[int, ...]]
    ) -> dict[int, tuple[int, ...]]:
        trans = {b: self.identity}
        queue = [b]
        while queue:
            x = queue.pop(0)
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _compose(s, trans[x])
                    queue.append(y)
        return trans
