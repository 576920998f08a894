"""Pósa-type lower bounds on the circumference from a single path."""

from __future__ import annotations

from ..exceptions import DomainError
from ..graphs.core import BipartiteGraph, Graph, PathView


def _endpoints(g: Graph, p: PathView) -> tuple[int, int]:
    if p.host.rows != g.rows:
        raise DomainError("path does not belong to this graph")
    if p.order < 2:
        raise DomainError("path needs two distinct endpoints")
    return p.endpoints


def posa_bound(g: Graph, p: PathView) -> int:
    """min{|V(P)|, d_P(x) + d_P(y)} for the endpoints x, y of P."""
    x, y = _endpoints(g, p)
    return min(p.order, p.path_degree(x) + p.path_degree(y))


def bipartite_posa_bound(g: BipartiteGraph, p: PathView) -> int:
    """Bipartite analogue: endpoints in different parts give
    min{|V(P)|, 2(d_P(u)+d_P(v)-1)}; in the same part
    min{|V(P)|-1, 2(d_P(u)+d_P(v)-2)}.

    The circumference guarantee needs g 2-connected; the value is defined for any path.
    """
    u, v = _endpoints(g.graph, p)
    degrees = p.path_degree(u) + p.path_degree(v)
    if g.part_of(u) is not g.part_of(v):
        return min(p.order, 2 * (degrees - 1))
    return min(p.order - 1, 2 * (degrees - 2))
