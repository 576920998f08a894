"""Labeled graph classes: exhaustive edge-subset walks and seeded sampling.

Bit j of an edge mask selects `edge_pairs(spec)[j]`. A shard fixes the low
`shard_width` bits of the mask in exhaustive mode and takes every
`2**shard_width`-th sample index in random mode.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations
from typing import Optional, Union

import numpy as np
import structlog

from ..config import get_settings
from ..exceptions import DomainError, ScaleError
from ..graphs.core import BipartiteGraph, Graph, is_biconnected, is_connected
from ..graphs.generators import philox
from ..models import ClassMode, EnumerationMode, GraphClassSpec

logger = structlog.get_logger()

Host = Union[Graph, BipartiteGraph]


def edge_pairs(spec: GraphClassSpec) -> list[tuple[int, int]]:
    """Candidate edges of the class; X = 0..n-1 and Y = n..n+b-1 when bipartite."""
    if spec.mode is ClassMode.BIPARTITE:
        return [(x, spec.n + y) for x in range(spec.n) for y in range(spec.b)]
    return list(combinations(range(spec.n), 2))


def space_size(spec: GraphClassSpec) -> int:
    if spec.enumeration is EnumerationMode.RANDOM:
        return spec.count
    return 1 << spec.edge_slots


def check_budget(spec: GraphClassSpec, budget: Optional[int] = None) -> None:
    if spec.n < 1 or spec.b < 0 or (spec.mode is ClassMode.BIPARTITE and spec.b < 1):
        raise DomainError("constraint violated: class parts must be nonempty")
    if budget is None:
        budget = get_settings().budget
    if spec.enumeration is EnumerationMode.RANDOM:
        if spec.seed is None:
            raise DomainError("random enumeration requires a seed")
        if spec.count < 0:
            raise DomainError("constraint violated: count >= 0")
    size = space_size(spec)
    if size > budget:
        raise ScaleError(
            f"class space has {size} graphs (2^{spec.edge_slots} edge subsets) "
            f"but the budget is {budget}; raise EXTURAN_BUDGET"
            if spec.enumeration is EnumerationMode.EXHAUSTIVE
            else f"sample count {size} exceeds the budget {budget}"
        )


class RowTable:
    """Adjacency rows for an edge mask, joined from two precomputed halves."""

    def __init__(self, order: int, pairs: list[tuple[int, int]]):
        self.order = order
        self.low_bits = len(pairs) // 2
        self.low_mask = (1 << self.low_bits) - 1
        self.low = self._table(order, pairs[: self.low_bits])
        self.high = self._table(order, pairs[self.low_bits:])

    @staticmethod
    def _table(order: int, pairs: list[tuple[int, int]]) -> list[tuple[int, ...]]:
        table = [(0,) * order]
        for u, v in pairs:
            extended = []
            for rows in table:
                row = list(rows)
                row[u] |= 1 << v
                row[v] |= 1 << u
                extended.append(tuple(row))
            table += extended
        return table

    def rows(self, mask: int) -> tuple[int, ...]:
        low = self.low[mask & self.low_mask]
        high = self.high[mask >> self.low_bits]
        return tuple(a | b for a, b in zip(low, high))


def admits(spec: GraphClassSpec, g: Graph) -> bool:
    """Class filters: edge floor, minimum degree, connectivity."""
    if g.order != spec.order:
        return False
    if spec.min_edges and g.size < spec.min_edges:
        return False
    if spec.min_degree and min(row.bit_count() for row in g.rows) < spec.min_degree:
        return False
    if spec.biconnected:
        return is_biconnected(g)
    if spec.connected:
        return is_connected(g)
    return True


def shard_count(spec: GraphClassSpec, shard_width: Optional[int] = None) -> int:
    if shard_width is None:
        shard_width = get_settings().shard_width
    if spec.enumeration is EnumerationMode.RANDOM:
        return max(1, min(1 << shard_width, spec.count))
    return 1 << min(shard_width, spec.edge_slots)


def _masks(spec: GraphClassSpec, shard: Optional[int], shard_width: int) -> Iterator[int]:
    slots = spec.edge_slots
    if spec.enumeration is EnumerationMode.EXHAUSTIVE:
        if shard is None:
            yield from range(1 << slots)
            return
        width = min(shard_width, slots)
        for high in range(1 << (slots - width)):
            yield high << width | shard
        return

    assert spec.seed is not None
    shards = shard_count(spec, shard_width)
    indices = range(spec.count) if shard is None else range(shard, spec.count, shards)
    for index in indices:
        bits = philox(spec.seed, index).integers(0, 2, size=slots, dtype=np.uint8)
        mask = 0
        for j in np.flatnonzero(bits):
            mask |= 1 << int(j)
        yield mask


def enumerate_class(
    spec: GraphClassSpec,
    shard: Optional[int] = None,
    shard_width: Optional[int] = None,
    budget: Optional[int] = None,
) -> Iterator[Host]:
    """Every labeled graph of the class exactly once (exhaustive), or the
    seeded samples that pass the class filters (random).

    Bipartite classes yield BipartiteGraph with X = 0..n-1.
    """
    check_budget(spec, budget)
    if shard_width is None:
        shard_width = get_settings().shard_width
    if shard is not None and not 0 <= shard < shard_count(spec, shard_width):
        raise DomainError(f"shard {shard} outside 0..{shard_count(spec, shard_width) - 1}")

    table = RowTable(spec.order, edge_pairs(spec))
    bipartite = spec.mode is ClassMode.BIPARTITE
    x_mask = (1 << spec.n) - 1
    for mask in _masks(spec, shard, shard_width):
        if mask.bit_count() < spec.min_edges:
            continue
        g = Graph.trusted(spec.order, table.rows(mask))
        if not admits(spec, g):
            continue
        yield BipartiteGraph.trusted(g, x_mask) if bipartite else g
