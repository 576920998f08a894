"""Sharpness constructions F_{b,n,n-k,a} (bipartite) and H_{n,k,a} (general).

Vertices are labeled region by region in ascending order: A, B, then C, D.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

import structlog

from ..config import get_settings
from ..exceptions import ConsistencyError, DomainError
from ..graphs.core import BipartiteGraph, Graph, GraphBuilder, is_biconnected, min_degree
from ..models import BoundParams, Claim
from ..structure.paths import circumference
from .counting import count_kst
from .formulas import branch_value, eval_g

logger = structlog.get_logger()

_CHECK_SIDES = ((1, 1), (1, 2), (2, 2))


@dataclass(frozen=True)
class LabeledConstruction:
    """A construction with its region labels and parameters."""

    kind: str
    graph: Graph
    region_of: tuple[str, ...]
    params: dict[str, int] = field(hash=False)
    bipartite: Optional[BipartiteGraph] = None

    @property
    def host(self) -> Union[Graph, BipartiteGraph]:
        return self.bipartite if self.bipartite is not None else self.graph

    def region_sizes(self) -> dict[str, int]:
        sizes: dict[str, int] = {}
        for label in self.region_of:
            sizes[label] = sizes.get(label, 0) + 1
        return sizes

    def metadata(self) -> dict[str, Any]:
        return {"construction": self.kind, **self.params}


def _fail(message: str) -> None:
    raise ConsistencyError(message)


def _should_check(check: Optional[bool]) -> bool:
    return get_settings().check_constructions if check is None else check


def _circumference_within_scale(g: Graph) -> Optional[int]:
    if g.order > get_settings().solver_max_order:
        logger.warning("Skipping circumference check above solver scale", order=g.order)
        return None
    return circumference(g)


def build_F(b: int, n: int, k: int, a: int, check: Optional[bool] = None) -> LabeledConstruction:
    """F_{b,n,n-k,a}: X = A ∪ B, Y = C ∪ D, N(x) = C on A and N(x) = Y on B."""
    if not b >= n:
        raise DomainError("constraint violated: b >= n")
    if not (a >= 1 and k >= 0):
        raise DomainError("constraint violated: a >= 1, k >= 0")
    if not n - k - a >= 1:
        raise DomainError("constraint violated: n - k - a >= 1 (B nonempty)")
    if not a <= b:
        raise DomainError("constraint violated: a <= b")

    size_a, size_b = k + a, n - k - a
    A = range(0, size_a)
    B = range(size_a, n)
    C = range(n, n + a)
    D = range(n + a, n + b)
    builder = GraphBuilder(n + b)
    builder.add_biclique(A, C)
    builder.add_biclique(B, list(C) + list(D))
    graph = builder.build()
    regions = ("A",) * size_a + ("B",) * size_b + ("C",) * a + ("D",) * (b - a)
    result = LabeledConstruction(
        "F", graph, regions, {"b": b, "n": n, "k": k, "a": a}, BipartiteGraph(graph, (1 << n) - 1)
    )

    if _should_check(check):
        if n >= 2 * k + 2 * a and min_degree(graph) != a:
            _fail(f"F({b},{n},{k},{a}) has minimum degree {min_degree(graph)}, expected {a}")
        length = _circumference_within_scale(graph)
        if length is not None and length > 2 * n - 2 * k - 2:
            _fail(f"F({b},{n},{k},{a}) has a cycle of length {length} >= 2n-2k")
        for s, t in _CHECK_SIDES:
            expected = branch_value(b, n, n - k, a, s, t)
            if count_kst(graph, s, t) != expected:
                _fail(f"F({b},{n},{k},{a}) K_{{{s},{t}}} count differs from f = {expected}")
    return result


def build_H(n: int, k: int, a: int, check: Optional[bool] = None) -> LabeledConstruction:
    """H_{n,k,a}: A-B complete bipartite plus a clique on A ∪ C.

    k >= 3 is accepted so the path theorem can use H_{n,k-1,a} at k = 4.
    """
    if not n >= k >= 3:
        raise DomainError("constraint violated: n >= k >= 3")
    if not (1 <= a and 2 * a < k):
        raise DomainError("constraint violated: k/2 > a >= 1")

    size_b = n - k + a
    A = range(0, a)
    B = range(a, a + size_b)
    C = range(a + size_b, n)
    builder = GraphBuilder(n)
    builder.add_biclique(A, B)
    builder.add_clique(list(A) + list(C))
    graph = builder.build()
    regions = ("A",) * a + ("B",) * size_b + ("C",) * (k - 2 * a)
    result = LabeledConstruction("H", graph, regions, {"n": n, "k": k, "a": a})

    if _should_check(check):
        length = _circumference_within_scale(graph)
        if length is not None and length > k - 1:
            _fail(f"H({n},{k},{a}) has a cycle of length {length} >= k")
        if a >= 2 and not is_biconnected(graph):
            _fail(f"H({n},{k},{a}) is not 2-connected")
        for s, t in _CHECK_SIDES:
            expected = eval_g(n, k, a, s, t)
            if count_kst(graph, s, t) != expected:
                _fail(f"H({n},{k},{a}) K_{{{s},{t}}} count differs from g = {expected}")
    return result


def sharpness_construction(claim: Claim, p: BoundParams, a: int, check: Optional[bool] = None) -> LabeledConstruction:
    """The construction attaining the claim's bound at this a."""
    if claim in (Claim.CB, Claim.CONJ_41):
        return build_F(p.b, p.n, p.k, a, check)
    if claim in (Claim.PB, Claim.MB):
        return build_F(p.b, p.n, p.k + 1, a, check)
    if claim is Claim.C:
        return build_H(p.n, p.k, a, check)
    if claim is Claim.P:
        return build_H(p.n, p.k - 1, a, check)
    raise DomainError(f"claim {claim.value} has no sharpness construction")
