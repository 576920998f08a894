"""Standard graph families and seeded random graphs."""

from __future__ import annotations

import numpy as np

from .core import BipartiteGraph, Graph, GraphBuilder, PathView, bits_of, iter_bits


def complete(n: int) -> Graph:
    builder = GraphBuilder(n)
    builder.add_clique(range(n))
    return builder.build()


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else path(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(m: int, p: int) -> BipartiteGraph:
    builder = GraphBuilder(m + p)
    builder.add_biclique(range(m), range(m, m + p))
    return BipartiteGraph(builder.build(), (1 << m) - 1)


def even_cycle_bipartite(n: int) -> BipartiteGraph:
    """C_{2n} with parts alternating; X = even positions relabeled 0..n-1."""
    order = 2 * n
    label = [i // 2 if i % 2 == 0 else n + i // 2 for i in range(order)]
    edges = [(label[i], label[(i + 1) % order]) for i in range(order)]
    return BipartiteGraph.from_parts(n, n, edges)


def philox(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator; `stream` selects a disjoint counter block."""
    return np.random.Generator(np.random.Philox(key=seed, counter=stream << 192))


def random_graph(order: int, p: float, rng: np.random.Generator) -> Graph:
    builder = GraphBuilder(order)
    for u in range(order):
        for v in range(u + 1, order):
            if rng.random() < p:
                builder.add_edge(u, v)
    return builder.build()


def random_bipartite(n: int, b: int, p: float, rng: np.random.Generator) -> BipartiteGraph:
    builder = GraphBuilder(n + b)
    for x in range(n):
        for y in range(n, n + b):
            if rng.random() < p:
                builder.add_edge(x, y)
    return BipartiteGraph(builder.build(), (1 << n) - 1)


def random_path(g: Graph, rng: np.random.Generator, maximal: bool = False) -> PathView:
    """Self-avoiding random walk; stops when stuck, or at a random length unless `maximal`.

    With `maximal` both ends are extended until neither endpoint has a
    neighbor off the path.
    """
    start = int(rng.integers(g.order))
    walk = [start]
    used = 1 << start
    target = g.order if maximal else int(rng.integers(1, g.order + 1))
    while len(walk) < target:
        options = list(iter_bits(g.rows[walk[-1]] & ~used))
        if not options:
            break
        nxt = options[int(rng.integers(len(options)))]
        walk.append(nxt)
        used |= 1 << nxt
    if maximal:
        while True:
            options = list(iter_bits(g.rows[walk[0]] & ~used))
            if options:
                nxt = options[int(rng.integers(len(options)))]
                walk.insert(0, nxt)
                used |= 1 << nxt
                continue
            options = list(iter_bits(g.rows[walk[-1]] & ~used))
            if not options:
                break
            nxt = options[int(rng.integers(len(options)))]
            walk.append(nxt)
            used |= 1 << nxt
    return PathView(g, tuple(walk))


def relabel(g: Graph, permutation: list[int]) -> Graph:
    """Graph with vertex v renamed permutation[v]."""
    rows = [0] * g.order
    for v, row in enumerate(g.rows):
        rows[permutation[v]] = bits_of(permutation[u] for u in iter_bits(row))
    return Graph(g.order, tuple(rows))
