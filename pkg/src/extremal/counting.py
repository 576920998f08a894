"""Exact counting of (not necessarily induced) K_{s,t} copies."""

from __future__ import annotations

import math
from collections.abc import Iterator
from itertools import combinations
from typing import NewType, Optional

from ..config import get_settings
from ..exceptions import ConsistencyError, DomainError, ScaleError
from ..graphs.core import Graph

CopyCount = NewType("CopyCount", int)


def binomial(n: int, k: int) -> CopyCount:
    """C(n, k) with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"binomial top must be >= 0, got {n}")
    if k < 0 or k > n:
        return CopyCount(0)
    return CopyCount(math.comb(n, k))


def _check_sides(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise DomainError(f"K_{{s,t}} needs s >= 1 and t >= 1, got s={s}, t={t}")


def count_kst(g: Graph, s: int, t: int) -> CopyCount:
    """N(K_{s,t}, g): unordered pairs {S, T}, |S| = s, |T| = t, S fully joined to T.

    Walks s-subsets S in lexicographic order while intersecting neighborhood
    rows; W(S) never meets S because rows are irreflexive. Each S adds
    C(|W(S)|, t). For s = t every copy is seen from both sides, so the
    ordered total is halved.
    """
    _check_sides(s, t)
    small, large = min(s, t), max(s, t)
    rows = g.rows
    comb = math.comb
    candidates = 0
    for v, row in enumerate(rows):
        if row.bit_count() >= large:
            candidates |= 1 << v

    total = 0

    def walk(pool: int, common: int, need: int) -> None:
        nonlocal total
        if need == 0:
            total += comb(common.bit_count(), large)
            return
        while pool.bit_count() >= need:
            low = pool & -pool
            pool ^= low
            narrowed = common & rows[low.bit_length() - 1]
            if narrowed.bit_count() >= large:
                walk(pool, narrowed, need - 1)

    walk(candidates, g.vertex_mask, small)
    if s == t:
        if total % 2:
            raise ConsistencyError(f"ordered K_{{{s},{s}}} total {total} is odd")
        total //= 2
    return CopyCount(total)


def iter_kst_copies(g: Graph, s: int, t: int, max_order: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Naively enumerate every copy as (S, T); for s = t only the orientation with min(S) < min(T)."""
    _check_sides(s, t)
    limit = get_settings().oracle_max_order if max_order is None else max_order
    if g.order > limit:
        raise ScaleError(f"oracle enumeration limited to order {limit}, got {g.order}")
    vertices = range(g.order)
    for left in combinations(vertices, s):
        rest = [v for v in vertices if v not in left]
        for right in combinations(rest, t):
            if s == t and right[0] < left[0]:
                continue
            if all(g.has_edge(u, v) for u in left for v in right):
                yield left, right


def count_kst_oracle(g: Graph, s: int, t: int) -> CopyCount:
    """Same contract as count_kst, by plain set-pair enumeration."""
    return CopyCount(sum(1 for _ in iter_kst_copies(g, s, t)))
