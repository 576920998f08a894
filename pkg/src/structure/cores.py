"""Kopylov core: iterated deletion of low-degree vertices."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from ..exceptions import DomainError
from ..graphs.core import Graph, iter_bits


@dataclass(frozen=True)
class CoreTrace:
    """H(G, alpha) plus the peeling that produced it."""

    alpha: int
    surviving: int
    deletion_order: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> list[int]:
        return list(iter_bits(self.surviving))

    @property
    def size(self) -> int:
        return self.surviving.bit_count()

    def is_valid_for(self, g: Graph) -> bool:
        """Replay the peeling and check both ends of the contract."""
        alive = g.vertex_mask
        for v, degree in self.deletion_order:
            if not alive >> v & 1 or g.induced_degree(v, alive) != degree or degree > self.alpha:
                return False
            alive &= ~(1 << v)
        if alive != self.surviving:
            return False
        return all(g.induced_degree(v, alive) >= self.alpha + 1 for v in iter_bits(alive))


def core(g: Graph, alpha: int, priority: Optional[Sequence[int]] = None) -> CoreTrace:
    """(alpha+1)-core of g.

    Repeatedly deletes a vertex of current degree <= alpha; among the
    candidates the one earliest in `priority` (default: ascending label)
    goes first. The surviving set does not depend on the priority.
    """
    if alpha < 0:
        raise DomainError("constraint violated: alpha >= 0")
    rank = list(range(g.order)) if priority is None else list(priority)
    if sorted(rank) != list(range(g.order)):
        raise DomainError("priority must be a permutation of the vertices")
    alive = g.vertex_mask
    degree = g.degrees()
    order: list[tuple[int, int]] = []
    while True:
        for v in rank:
            if alive >> v & 1 and degree[v] <= alpha:
                break
        else:
            break
        order.append((v, degree[v]))
        alive &= ~(1 << v)
        for u in iter_bits(g.rows[v] & alive):
            degree[u] -= 1
    return CoreTrace(alpha, alive, tuple(order))
