"""Bitset graph representations and structural predicates.

Rows are Python ints used as bitsets: bit `u` of `rows[v]` is set iff u~v.
Orders up to 64 fit one machine word; larger orders simply use wider ints,
so there is no separate multi-word code path.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from ..exceptions import ConsistencyError, DomainError, InvalidBipartitionError


class Part(str, Enum):
    """Side of a bipartition."""
    X = "X"
    Y = "Y"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..order-1."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise DomainError("graph order must be >= 0")
        if len(self.rows) != self.order:
            raise ConsistencyError(f"expected {self.order} rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ConsistencyError(f"row {v} references a vertex outside 0..{self.order - 1}")
            if row >> v & 1:
                raise ConsistencyError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ConsistencyError(f"asymmetric adjacency between {v} and {u}")

    # Construction

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def trusted(cls, order: int, rows: tuple[int, ...]) -> "Graph":
        """Skip validation; rows must already be symmetric and loop-free."""
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        builder = GraphBuilder(order)
        for u, v in edges:
            builder.add_edge(u, v)
        return builder.build()

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy with `edges` added."""
        builder = GraphBuilder(self.order, self.rows)
        for u, v in edges:
            builder.add_edge(u, v)
        return builder.build()

    # Queries

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def size(self) -> int:
        """Edge count e(G)."""
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def induced_degree(self, v: int, within: int) -> int:
        return (self.rows[v] & within).bit_count()


class GraphBuilder:
    """Mutable adjacency used only while a graph is being built."""

    def __init__(self, order: int, rows: Sequence[int] = ()):
        if order < 0:
            raise DomainError("graph order must be >= 0")
        self.order = order
        self.rows = list(rows) if rows else [0] * order

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.order and 0 <= v < self.order):
            raise DomainError(f"edge ({u}, {v}) outside vertex range 0..{self.order - 1}")
        if u == v:
            raise ConsistencyError(f"self-loop at vertex {u}")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def add_biclique(self, left: Iterable[int], right: Iterable[int]) -> None:
        right = list(right)
        for u in left:
            for v in right:
                self.add_edge(u, v)

    def add_clique(self, vertices: Iterable[int]) -> None:
        vertices = list(vertices)
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                self.add_edge(u, v)

    def build(self) -> Graph:
        return Graph(self.order, tuple(self.rows))


PartAssignment = Union[Sequence[Union[Part, str]], Mapping[int, Union[Part, str]]]


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a bipartition (X, Y); |X| = n, |Y| = b."""

    graph: Graph
    x_mask: int

    def __post_init__(self) -> None:
        if self.x_mask & ~self.graph.vertex_mask:
            raise ConsistencyError("part X references a vertex outside the graph")
        for u, v in self.graph.edges():
            ux = bool(self.x_mask >> u & 1)
            if ux == bool(self.x_mask >> v & 1):
                raise InvalidBipartitionError(u, v, "X" if ux else "Y")

    @classmethod
    def trusted(cls, graph: Graph, x_mask: int) -> "BipartiteGraph":
        """Skip the intra-part edge scan; used by the class enumerator."""
        bg = object.__new__(cls)
        object.__setattr__(bg, "graph", graph)
        object.__setattr__(bg, "x_mask", x_mask)
        return bg

    @classmethod
    def from_parts(cls, n: int, b: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Standard labeling: X = 0..n-1, Y = n..n+b-1; edges given as global labels."""
        return cls(Graph.from_edges(n + b, edges), (1 << n) - 1)

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def y_mask(self) -> int:
        return self.graph.vertex_mask & ~self.x_mask

    @property
    def n(self) -> int:
        return self.x_mask.bit_count()

    @property
    def b(self) -> int:
        return self.y_mask.bit_count()

    def part_of(self, v: int) -> Part:
        return Part.X if self.x_mask >> v & 1 else Part.Y

    @property
    def x_vertices(self) -> list[int]:
        return list(iter_bits(self.x_mask))

    @property
    def y_vertices(self) -> list[int]:
        return list(iter_bits(self.y_mask))

    def is_standard(self) -> bool:
        """True when X is exactly 0..n-1."""
        return self.x_mask == (1 << self.n) - 1


@dataclass(frozen=True)
class PathView:
    """A path in `host` given by its vertex sequence."""

    host: Graph
    vertices: tuple[int, ...]
    mask: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.vertices:
            raise DomainError("a path needs at least one vertex")
        seen = 0
        for i, v in enumerate(self.vertices):
            if not 0 <= v < self.host.order:
                raise DomainError(f"path vertex {v} is not in the host graph")
            if seen >> v & 1:
                raise DomainError(f"path repeats vertex {v}")
            seen |= 1 << v
            if i and not self.host.has_edge(self.vertices[i - 1], v):
                raise DomainError(f"path step ({self.vertices[i - 1]}, {v}) is not a host edge")
        object.__setattr__(self, "mask", seen)

    @property
    def order(self) -> int:
        """|V(P)|."""
        return len(self.vertices)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def path_degree(self, v: int) -> int:
        """d_P(v) = |N_G(v) ∩ V(P)|."""
        return (self.host.rows[v] & self.mask).bit_count()

    def is_maximal(self) -> bool:
        """No endpoint has a neighbor off the path."""
        x, y = self.endpoints
        rows = self.host.rows
        return not (rows[x] | rows[y]) & ~self.mask


# Predicates


def component_mask(g: Graph, start: int, allowed: int | None = None) -> int:
    """Vertices reachable from `start` inside `allowed` (default: all)."""
    if allowed is None:
        allowed = g.vertex_mask
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    return component_mask(g, 0) == g.vertex_mask


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal disconnects their component."""
    cuts = []
    full = g.vertex_mask
    for v in range(g.order):
        rest = full & ~(1 << v)
        if not rest:
            continue
        nbrs = g.rows[v]
        if not nbrs:
            continue
        first = (nbrs & -nbrs).bit_length() - 1
        if nbrs & ~component_mask(g, first, rest):
            cuts.append(v)
    return cuts


def is_biconnected(g: Graph) -> bool:
    if g.order < 3 or not is_connected(g):
        return False
    return not cut_vertices(g)


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise DomainError("minimum degree of the empty graph is undefined")
    return min(row.bit_count() for row in g.rows)


def bipartition_check(g: Graph, part_of: PartAssignment) -> BipartiteGraph:
    """Attach a part assignment to `g`, rejecting intra-part edges."""
    x_mask = 0
    for v in range(g.order):
        try:
            label = part_of[v]
        except (KeyError, IndexError):
            raise DomainError(f"vertex {v} has no part assignment") from None
        try:
            part = Part(label.value if isinstance(label, Part) else str(label).upper())
        except ValueError:
            raise DomainError(f"vertex {v} has unknown part {label!r}") from None
        if part is Part.X:
            x_mask |= 1 << v
    return BipartiteGraph(g, x_mask)
