"""Exact long-cycle and long-path solvers.

Orders up to `dfs_max_order` use DFS backtracking over bitset state with a
reachability bound and best-so-far cutoff. Larger orders use a layered
subset DP (paths keyed by vertex set, endpoints kept as a bitset), which
stays exact on dense hosts where backtracking explodes.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Optional

import structlog

from ..config import get_settings
from ..exceptions import DomainError, ScaleError
from ..graphs.core import Graph, component_mask, iter_bits

logger = structlog.get_logger()


class _Found(Exception):
    pass


def _check_scale(g: Graph, limit: Optional[int] = None) -> None:
    limit = get_settings().solver_max_order if limit is None else limit
    if g.order > limit:
        raise ScaleError(f"exact solver limited to order {limit}, got {g.order}; raise EXTURAN_SOLVER_MAX_ORDER")


def _use_dfs(g: Graph) -> bool:
    return g.order <= get_settings().dfs_max_order


def _balance_cap(region: int, x_mask: Optional[int]) -> int:
    """Largest even cycle a bipartite region can hold; unbounded without a bipartition."""
    if x_mask is None:
        return region.bit_count()
    return 2 * min((region & x_mask).bit_count(), (region & ~x_mask).bit_count())


# Cycles


def _cycle_dfs(g: Graph, need: Optional[int], x_mask: Optional[int]) -> int:
    rows = g.rows
    n = g.order
    best = 0
    cap = n if need is None else need

    def extend(start: int, end: int, visited: int, length: int, allowed: int) -> None:
        nonlocal best
        if length >= 3 and rows[end] >> start & 1 and length > best:
            best = length
            if best >= cap:
                raise _Found
        avail = allowed & ~visited
        for w in iter_bits(rows[end] & avail):
            reach = component_mask(g, w, avail)
            # the closing vertex lies in `reach`
            if not reach & rows[start]:
                continue
            floor = best if need is None else max(best, need - 1)
            if _balance_cap(visited | reach, x_mask) <= floor or length + reach.bit_count() <= floor:
                continue
            extend(start, w, visited | 1 << w, length + 1, allowed)

    try:
        for start in range(n):
            allowed = g.vertex_mask & ~((1 << (start + 1)) - 1)
            block = component_mask(g, start, allowed | 1 << start)
            if min(block.bit_count(), _balance_cap(block, x_mask)) <= best:
                continue
            extend(start, start, 1 << start, 1, allowed)
    except _Found:
        pass
    return best


def _cycle_dp(g: Graph, need: Optional[int], exact: Optional[int] = None) -> int:
    """Layered DP; the cycle's smallest vertex is the fixed start."""
    rows = g.rows
    n = g.order
    best = 0
    for start in range(n):
        if n - start <= best or (need is not None and n - start < need):
            break
        if exact is not None and n - start < exact:
            break
        allowed = g.vertex_mask & ~((1 << (start + 1)) - 1)
        back = rows[start]
        layer = {1 << start: 1 << start}
        size = 1
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                free = allowed & ~mask
                for e in iter_bits(ends):
                    for w in iter_bits(rows[e] & free):
                        key = mask | 1 << w
                        nxt[key] = nxt.get(key, 0) | 1 << w
            size += 1
            layer = nxt
            if size >= 3 and any(ends & back for ends in layer.values()):
                if exact is not None and size == exact:
                    return size
                best = max(best, size)
                if need is not None and best >= need:
                    return best
            if exact is not None and size >= exact:
                break
    return best


def circumference(g: Graph, x_mask: Optional[int] = None) -> int:
    """Length of a longest cycle, 0 if acyclic. `x_mask` enables the bipartite balance bound."""
    _check_scale(g)
    if _use_dfs(g):
        return _cycle_dfs(g, None, x_mask)
    logger.debug("Circumference via subset DP", order=g.order)
    return _cycle_dp(g, None)


def has_cycle_at_least(g: Graph, length: int, x_mask: Optional[int] = None) -> bool:
    """Decide whether g contains a cycle of length >= `length`."""
    if length <= 3:
        return circumference(g, x_mask) >= max(length, 3) if g.order >= 3 else False
    if length > g.order:
        return False
    _check_scale(g)
    if _use_dfs(g):
        return _cycle_dfs(g, length, x_mask) >= length
    return _cycle_dp(g, length) >= length


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Decide whether g contains a cycle of length exactly `length`."""
    if length < 3 or length > g.order:
        return False
    _check_scale(g)
    return _cycle_dp(g, None, exact=length) == length


# Paths


def _path_dfs(g: Graph, need: Optional[int]) -> int:
    rows = g.rows
    n = g.order
    best = 1 if n else 0
    cap = n if need is None else need
    if best >= cap:
        return best

    def extend(end: int, visited: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
            if best >= cap:
                raise _Found
        avail = g.vertex_mask & ~visited
        for w in iter_bits(rows[end] & avail):
            floor = best if need is None else max(best, need - 1)
            if length + component_mask(g, w, avail).bit_count() <= floor:
                continue
            extend(w, visited | 1 << w, length + 1)

    try:
        for start in range(n):
            if component_mask(g, start).bit_count() <= best:
                continue
            extend(start, 1 << start, 1)
    except _Found:
        pass
    return best


def _path_dp(g: Graph, need: Optional[int]) -> int:
    rows = g.rows
    layer = {1 << v: 1 << v for v in range(g.order)}
    size = 1 if layer else 0
    while layer:
        if need is not None and size >= need:
            return size
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            free = g.vertex_mask & ~mask
            for e in iter_bits(ends):
                for w in iter_bits(rows[e] & free):
                    key = mask | 1 << w
                    nxt[key] = nxt.get(key, 0) | 1 << w
        if not nxt:
            break
        layer = nxt
        size += 1
    return size


def longest_path_order(g: Graph) -> int:
    """Vertex count of a longest path: 0 for the empty graph, 1 for an edgeless one."""
    _check_scale(g)
    if _use_dfs(g):
        return _path_dfs(g, None)
    return _path_dp(g, None)


def has_path_at_least(g: Graph, vertices: int) -> bool:
    """Decide whether g contains a path on >= `vertices` vertices."""
    if vertices <= 1:
        return g.order >= vertices
    if vertices > g.order:
        return False
    _check_scale(g)
    if _use_dfs(g):
        return _path_dfs(g, vertices) >= vertices
    return _path_dp(g, vertices) >= vertices


def longest_path_between(g: Graph, u: int, v: int, at_least: Optional[int] = None) -> int:
    """Vertex count of a longest u-v path, 0 if u and v are disconnected.

    With `at_least` the search stops as soon as a path that long is found.
    """
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise DomainError(f"terminals ({u}, {v}) outside the graph")
    if u == v:
        return 1
    _check_scale(g)
    rows = g.rows
    target = 1 << v
    best = 0
    cap = g.order if at_least is None else at_least

    def extend(end: int, visited: int, length: int) -> None:
        nonlocal best
        if rows[end] & target and length + 1 > best:
            best = length + 1
            if best >= cap:
                raise _Found
        avail = g.vertex_mask & ~visited & ~target
        for w in iter_bits(rows[end] & avail):
            reach = component_mask(g, w, avail | target)
            if not reach & target or length + reach.bit_count() <= best:
                continue
            extend(w, visited | 1 << w, length + 1)

    try:
        extend(u, 1 << u, 1)
    except _Found:
        pass
    return best


# Permutation oracles


def _oracle_scale(g: Graph) -> None:
    if g.order > 8:
        raise ScaleError(f"permutation oracle limited to order 8, got {g.order}")


def circumference_oracle(g: Graph) -> int:
    """Longest cycle by trying every vertex sequence."""
    _oracle_scale(g)
    for length in range(g.order, 2, -1):
        for subset in combinations(range(g.order), length):
            first, rest = subset[0], subset[1:]
            for order in permutations(rest):
                seq = (first,) + order
                if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                    return length
    return 0


def longest_path_oracle(g: Graph) -> int:
    """Longest path by trying every vertex sequence."""
    _oracle_scale(g)
    for length in range(g.order, 1, -1):
        for subset in combinations(range(g.order), length):
            for seq in permutations(subset):
                if all(g.has_edge(seq[i], seq[i + 1]) for i in range(length - 1)):
                    return length
    return 1 if g.order else 0
