"""Closed-form lower bounds for regular mixed graphs with out-degree 1.

Two quantities are computed exactly:

* ``moore_bound(r, d)`` -- the number of vertices of a complete r-regular
  tree of depth d (the classical degree/diameter ball size),
  1 + r * sum_{k<d} (r-1)^k.
* ``ahm_bound(r, g)`` -- a lower bound on the order of a mixed graph that
  is r-regular in edges, has out-degree and in-degree 1, and girth g.
  It sums Moore-tree sizes along a directed path of length g-1, hanging a
  tree of depth min(i, g-1-i) at position i so that all tree vertices
  stay distinct.

All arithmetic is exact integer arithmetic.  Results feed search
cutoffs, so silent truncation is never acceptable; absurdly large inputs
raise OverflowError instead of grinding through million-digit powers.
"""

from __future__ import annotations

# Refuse computations whose result would exceed roughly this many bits.
_MAX_RESULT_BITS = 1_000_000


def moore_bound(r: int, d: int) -> int:
    """Vertices in a complete r-regular tree of depth d.

    Implemented as the level sum 1 + r * sum_{k=0}^{d-1} (r-1)^k, which
    is valid for every r >= 1 (the closed-form fraction
    (r(r-1)^d - 2)/(r-2) only makes sense for r >= 3).  For r = 2 this
    degenerates to the path count 2d + 1.
    """
    if r < 1:
        raise ValueError(f"degree must be >= 1, got {r}")
    if d < 0:
        raise ValueError(f"depth must be >= 0, got {d}")
    _check_magnitude(r, d)
    total = 1
    level = r  # vertices at distance k+1 = level * (r-1)
    for _ in range(d):
        total += level
        level *= r - 1
    return total


def ahm_bound(r: int, g: int) -> int:
    """Lower bound on the order of an (r, 1, g)-graph.

    Sums moore_bound(r, min(i, g-1-i)) for i in 0..g-1.  The depth
    profile is mirror symmetric, so the summand sequence is a
    palindrome.
    """
    if r < 1:
        raise ValueError(f"degree must be >= 1, got {r}")
    if g < 1:
        raise ValueError(f"girth must be >= 1, got {g}")
    return sum(moore_bound(r, min(i, g - 1 - i)) for i in range(g))


def _check_magnitude(r: int, d: int) -> None:
    # (r-1)^d has about d * log2(r-1) bits; refuse astronomically large
    # requests up front rather than allocating huge integers.
    if d > 0 and max(r - 1, 2).bit_length() * d > _MAX_RESULT_BITS:
        raise OverflowError(
            f"moore_bound({r}, {d}) would exceed the configured size limit"
        )
