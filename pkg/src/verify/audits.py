"""Seeded property sweeps over the structural procedures and the bound formulas.

Each audit returns a VerifyReport: `class_size` is the number of checked
cases and `violations` holds a graph6 record (or a parameter tuple for the
formula grids) per failing case.
"""

from __future__ import annotations

import time
from typing import Callable

import structlog

from ..config import get_settings
from ..exceptions import DomainError
from ..extremal.formulas import branch_value, check_discrete_convexity, endpoint_max_holds, eval_g
from ..graphs.core import is_biconnected
from ..graphs.generators import philox, random_bipartite, random_graph, random_path
from ..graphs.graph6 import to_graph6_str
from ..models import Claim, VerifyReport
from ..structure.closure import closure_long_cycle, closure_violations
from ..structure.cores import core
from ..structure.paths import circumference, has_cycle_at_least
from ..structure.posa import bipartite_posa_bound, posa_bound
from .tally import SweepTally

logger = structlog.get_logger()


def _report(claim: Claim, params: dict, tally: SweepTally, seed: int | None, started: float) -> VerifyReport:
    tally.finalized()
    report = VerifyReport(
        claim=claim.value,
        params=params,
        class_size=tally.class_size,
        violation_count=tally.violation_count,
        violations=tally.violations,
        seed=seed,
        runtime_ms=int((time.perf_counter() - started) * 1000),
    )
    logger.info("Audit finished", claim=claim.value, cases=report.class_size, violations=report.violation_count)
    return report


def _check_pairs(pairs: int, paths: int) -> None:
    if pairs < 0 or paths < 1:
        raise DomainError(f"need pairs >= 0 and paths >= 1, got pairs={pairs}, paths={paths}")


def audit_posa(seed: int, pairs: int = 10_000, paths: int = 50, max_order: int = 9) -> VerifyReport:
    """circumference(g) >= posa_bound(g, P) on random 2-connected graphs and paths.

    Draws graphs until `pairs` (graph, path) cases are checked, at most `paths` per graph.
    """
    _check_pairs(pairs, paths)
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    accepted, stream = 0, 0
    while tally.class_size < pairs:
        rng = philox(seed, stream)
        stream += 1
        order = int(rng.integers(3, max_order + 1))
        g = random_graph(order, float(rng.uniform(0.3, 0.9)), rng)
        if not is_biconnected(g):
            continue
        accepted += 1
        length = circumference(g)
        for j in range(paths):
            if tally.class_size == pairs:
                break
            path = random_path(g, rng, maximal=j % 2 == 0)
            if path.order < 2:
                continue
            tally.class_size += 1
            if length < posa_bound(g, path):
                tally.add_violation(to_graph6_str(g))
    params = {"pairs": pairs, "paths": paths, "max_order": max_order, "graphs": accepted}
    return _report(Claim.POSA, params, tally, seed, started)


def audit_bipartite_posa(seed: int, pairs: int = 10_000, paths: int = 50, max_part: int = 5) -> VerifyReport:
    """Bipartite analogue on random 2-connected bipartite graphs.

    Even path indices use maximal paths, where path degree equals degree.
    """
    _check_pairs(pairs, paths)
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    accepted, stream = 0, 0
    while tally.class_size < pairs:
        rng = philox(seed, stream)
        stream += 1
        n = int(rng.integers(2, max_part + 1))
        b = int(rng.integers(2, max_part + 1))
        bg = random_bipartite(n, b, float(rng.uniform(0.4, 0.9)), rng)
        if not is_biconnected(bg.graph):
            continue
        accepted += 1
        length = circumference(bg.graph, bg.x_mask)
        for j in range(paths):
            if tally.class_size == pairs:
                break
            path = random_path(bg.graph, rng, maximal=j % 2 == 0)
            if path.order < 2:
                continue
            tally.class_size += 1
            if length < bipartite_posa_bound(bg, path):
                tally.add_violation(to_graph6_str(bg.graph))
    params = {"pairs": pairs, "paths": paths, "max_part": max_part, "graphs": accepted}
    return _report(Claim.BIPARTITE_POSA, params, tally, seed, started)


def audit_core_order(
    seed: int, graphs: int = 100, max_order: int = 12, max_alpha: int = 4, orders: int = 10
) -> VerifyReport:
    """The surviving core does not depend on the peeling order."""
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    for i in range(graphs):
        rng = philox(seed, i)
        order = int(rng.integers(1, max_order + 1))
        g = random_graph(order, float(rng.uniform(0.1, 0.7)), rng)
        for alpha in range(max_alpha + 1):
            tally.class_size += 1
            reference = core(g, alpha)
            for _ in range(orders):
                priority = [int(v) for v in rng.permutation(order)]
                trace = core(g, alpha, priority)
                if trace.surviving != reference.surviving or not trace.is_valid_for(g):
                    tally.add_violation(to_graph6_str(g))
                    break
    params = {"graphs": graphs, "max_order": max_order, "max_alpha": max_alpha, "orders": orders}
    return _report(Claim.CORE_ORDER, params, tally, seed, started)


def audit_closure(seed: int, instances: int = 50, max_part: int = 5) -> VerifyReport:
    """Closure keeps the input, adds no long cycle, and leaves no addable cross pair."""
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    for i in range(instances):
        rng = philox(seed, i)
        n = int(rng.integers(2, max_part + 1))
        b = int(rng.integers(2, max_part + 1))
        bg = random_bipartite(n, b, float(rng.uniform(0.1, 0.5)), rng)
        shortest = max(circumference(bg.graph, bg.x_mask) + 1, 3)
        length = int(rng.integers(shortest, 2 * min(n, b) + 2))
        closed = closure_long_cycle(bg, length)
        tally.class_size += 1
        keeps_input = all(old & ~new == 0 for old, new in zip(bg.graph.rows, closed.graph.rows))
        if (
            not keeps_input
            or has_cycle_at_least(closed.graph, length, closed.x_mask)
            or closure_violations(closed, length)
        ):
            tally.add_violation(f"{to_graph6_str(bg.graph)} L={length}")
    params = {"instances": instances, "max_part": max_part}
    return _report(Claim.CLOSURE, params, tally, seed, started)


def _check_curve(tally: SweepTally, label: str, fn: Callable[[int], int], lo: int, hi: int, floor: int) -> None:
    """Convexity on [lo, hi] and the endpoint max on [r, hi] for every r >= floor."""
    tally.class_size += 1
    ok = check_discrete_convexity(fn, lo, hi)
    ok = ok and all(endpoint_max_holds(fn, r, hi) for r in range(max(lo, floor), hi + 1))
    if not ok:
        tally.add_violation(label)


def audit_convexity_f(max_size: int = 10, max_side: int = 3) -> VerifyReport:
    """f in a over [0, (n-k)/2] for every b >= n, k, s, t on the grid."""
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    for b in range(1, max_size + 1):
        for n in range(1, b + 1):
            for k in range(0, n):
                hi = (n - k) // 2
                for s in range(1, max_side + 1):
                    for t in range(1, max_side + 1):
                        fn = lambda a, b=b, n=n, k=k, s=s, t=t: branch_value(b, n, n - k, a, s, t)  # noqa: E731
                        _check_curve(tally, f"b={b},n={n},k={k},s={s},t={t}", fn, 0, hi, 1)
    return _report(Claim.CONVEXITY_F, {"max_size": max_size, "max_side": max_side}, tally, None, started)


def audit_convexity_g(max_n: int = 12, max_k: int = 9, max_side: int = 3) -> VerifyReport:
    """g in a over [1, (k-1)/2] for every n >= k >= 4, s, t on the grid."""
    started = time.perf_counter()
    tally = SweepTally(get_settings().max_witnesses)
    for n in range(4, max_n + 1):
        for k in range(4, min(n, max_k) + 1):
            hi = (k - 1) // 2
            for s in range(1, max_side + 1):
                for t in range(1, max_side + 1):
                    fn = lambda a, n=n, k=k, s=s, t=t: eval_g(n, k, a, s, t)  # noqa: E731
                    _check_curve(tally, f"n={n},k={k},s={s},t={t}", fn, 1, hi, 1)
    params = {"max_n": max_n, "max_k": max_k, "max_side": max_side}
    return _report(Claim.CONVEXITY_G, params, tally, None, started)


AUDITS: dict[Claim, Callable[..., VerifyReport]] = {
    Claim.POSA: audit_posa,
    Claim.BIPARTITE_POSA: audit_bipartite_posa,
    Claim.CORE_ORDER: audit_core_order,
    Claim.CLOSURE: audit_closure,
    Claim.CONVEXITY_F: audit_convexity_f,
    Claim.CONVEXITY_G: audit_convexity_g,
}
