"""Maximum matching in bipartite graphs (Hopcroft-Karp)."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from ..exceptions import ScaleError
from ..graphs.core import BipartiteGraph, Graph, iter_bits

_NIL = -1


class HopcroftKarp:
    """Maximum-cardinality matching from X to Y, keeping the search state of one run."""

    def __init__(self, g: BipartiteGraph):
        self.graph = g
        self.left = g.x_vertices
        self.adj = {u: list(iter_bits(g.graph.rows[u])) for u in self.left}
        self.mate: dict[int, int] = {}
        self.dist: dict[int, float] = {}

    def _layer(self) -> bool:
        """BFS from free X vertices; True if some augmenting path exists."""
        queue: deque[int] = deque()
        for u in self.left:
            if u in self.mate:
                self.dist[u] = float("inf")
            else:
                self.dist[u] = 0
                queue.append(u)
        self.dist[_NIL] = float("inf")
        while queue:
            u = queue.popleft()
            if self.dist[u] < self.dist[_NIL]:
                for v in self.adj[u]:
                    w = self.mate.get(v, _NIL)
                    if self.dist[w] == float("inf"):
                        self.dist[w] = self.dist[u] + 1
                        if w != _NIL:
                            queue.append(w)
        return self.dist[_NIL] != float("inf")

    def _augment(self, u: int) -> bool:
        for v in self.adj[u]:
            w = self.mate.get(v, _NIL)
            if self.dist[w] == self.dist[u] + 1 and (w == _NIL or self._augment(w)):
                self.mate[u] = v
                self.mate[v] = u
                return True
        self.dist[u] = float("inf")
        return False

    def __call__(self) -> list[tuple[int, int]]:
        self.mate.clear()
        while self._layer():
            for u in self.left:
                if u not in self.mate:
                    self._augment(u)
        return sorted((u, self.mate[u]) for u in self.left if u in self.mate)


def max_matching(g: BipartiteGraph) -> int:
    """Size of a maximum matching."""
    return len(HopcroftKarp(g)())


def max_matching_bruteforce(g: Graph, max_edges: int = 12) -> int:
    """Largest set of pairwise disjoint edges by subset search."""
    edges = list(g.edges())
    if len(edges) > max_edges:
        raise ScaleError(f"brute-force matching limited to {max_edges} edges, got {len(edges)}")
    for size in range(min(len(edges), g.order // 2), 0, -1):
        for chosen in combinations(edges, size):
            used = 0
            for u, v in chosen:
                pair = 1 << u | 1 << v
                if used & pair:
                    break
                used |= pair
            else:
                return size
    return 0
