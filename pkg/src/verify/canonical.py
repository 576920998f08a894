"""Canonical labeling by exhaustive permutation search (small orders only)."""

from __future__ import annotations

from itertools import combinations, permutations

from ..config import get_settings
from ..exceptions import ScaleError
from ..graphs.core import Graph
from ..graphs.generators import relabel
from ..graphs.graph6 import decode_graph6, to_graph6_str


def _check_scale(g: Graph) -> None:
    limit = get_settings().canonical_max_order
    if g.order > limit:
        raise ScaleError(f"canonical form supports order <= {limit}, got {g.order}")


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation (old -> new label) giving the smallest upper-triangle bitstring."""
    _check_scale(g)
    pairs = list(combinations(range(g.order), 2))
    best_code = None
    best_perm: tuple[int, ...] = tuple(range(g.order))
    for perm in permutations(range(g.order)):
        # perm[i] is the old vertex placed at position i
        code = 0
        for i, j in pairs:
            code = code << 1 | (g.rows[perm[i]] >> perm[j] & 1)
        if best_code is None or code < best_code:
            best_code, best_perm = code, perm
    labeling = [0] * g.order
    for position, vertex in enumerate(best_perm):
        labeling[vertex] = position
    return labeling


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_graph6(g: Graph) -> str:
    return to_graph6_str(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph6(g) == canonical_graph6(h)


def dedup_isomorphic(records: list[str]) -> list[str]:
    """Keep the first graph6 record of each isomorphism class, in input order."""
    seen: set[str] = set()
    kept = []
    for record in records:
        key = canonical_graph6(decode_graph6(record))
        if key not in seen:
            seen.add(key)
            kept.append(record)
    return kept
