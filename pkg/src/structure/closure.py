"""Edge-maximal bipartite supergraphs without long cycles."""

from __future__ import annotations

import structlog

from ..exceptions import DomainError
from ..graphs.core import BipartiteGraph, GraphBuilder
from .paths import has_cycle_at_least, longest_path_between

logger = structlog.get_logger()


def _cross_pairs(g: BipartiteGraph) -> list[tuple[int, int]]:
    pairs = []
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.part_of(u) is not g.part_of(v):
                pairs.append((u, v))
    return pairs


def closure_long_cycle(g: BipartiteGraph, length: int) -> BipartiteGraph:
    """Add cross edges in lexicographic order while no cycle of length >= `length` appears.

    uv is added iff the longest u-v path has fewer than `length` vertices.
    A rejected pair stays rejected as edges are added, so one pass reaches
    the same fixed point as restarting after every addition.
    """
    if length < 3:
        raise DomainError("constraint violated: L >= 3")
    if has_cycle_at_least(g.graph, length, g.x_mask):
        raise DomainError(f"input already contains a cycle of length >= {length}")
    builder = GraphBuilder(g.order, g.graph.rows)
    added = 0
    for u, v in _cross_pairs(g):
        if builder.rows[u] >> v & 1:
            continue
        current = builder.build()
        if longest_path_between(current, u, v, at_least=length) < length:
            builder.add_edge(u, v)
            added += 1
    logger.debug("Closure finished", length=length, added=added)
    return BipartiteGraph(builder.build(), g.x_mask)


def closure_violations(h: BipartiteGraph, length: int) -> list[tuple[int, int]]:
    """Cross non-edges whose addition would not create a cycle of length >= `length`."""
    return [
        (u, v)
        for u, v in _cross_pairs(h)
        if not h.graph.has_edge(u, v) and longest_path_between(h.graph, u, v, at_least=length) < length
    ]
