"""Theorem, baseline and conjecture sweeps over labeled graph classes."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from functools import reduce
from multiprocessing import Pool
from typing import Any, Optional, Union

import structlog
from tqdm import tqdm

from ..config import get_settings
from ..exceptions import DomainError
from ..extremal.constructions import sharpness_construction
from ..extremal.counting import count_kst
from ..extremal.formulas import (
    THRESHOLDS,
    adamus_edge_bound,
    erdos_bound,
    exbip_long_cycle,
    jackson_bound,
    moon_moser_bound,
    ore_bound,
    wang_matching_value,
)
from ..graphs.core import BipartiteGraph, Graph
from ..graphs.graph6 import decode_graph6, to_graph6_str
from ..models import (
    BASELINE_CLAIMS,
    BIPARTITE_CLAIMS,
    CONJECTURE_CLAIMS,
    THEOREM_CLAIMS,
    BoundParams,
    Claim,
    ClassMode,
    EnumerationMode,
    GraphClassSpec,
    VerifyReport,
)
from ..structure.matching import max_matching
from ..structure.paths import has_cycle_at_least, has_cycle_of_length, has_path_at_least
from .canonical import dedup_isomorphic
from .enumeration import Host, admits, enumerate_class, shard_count
from .tally import SweepTally

logger = structlog.get_logger()

# Claims whose value is N(K_{s,t}); the rest count edges.
_COPY_CLAIMS = frozenset(THEOREM_CLAIMS | {Claim.WANG, Claim.CONJ_41})
_BALANCED_CLAIMS = frozenset({Claim.WANG, Claim.MOON_MOSER, Claim.ADAMUS})
_CONNECTED_CLAIMS = frozenset({Claim.CB, Claim.PB, Claim.MB, Claim.P, Claim.CONJ_41})
_DEGREE_CLAIMS = frozenset(_CONNECTED_CLAIMS | {Claim.C, Claim.MOON_MOSER, Claim.ERDOS, Claim.ADAMUS})


def _graph(host: Host) -> Graph:
    return host.graph if isinstance(host, BipartiteGraph) else host


def _x_mask(host: Host) -> Optional[int]:
    return host.x_mask if isinstance(host, BipartiteGraph) else None


def claim_threshold(claim: Claim, p: BoundParams) -> int:
    """The bound a sweep compares against with strict inequality."""
    if claim in THRESHOLDS:
        return THRESHOLDS[claim](p)
    if claim in (Claim.JACKSON, Claim.LI_NING):
        return exbip_long_cycle(p.b, p.n, p.k)
    if claim is Claim.WANG:
        return wang_matching_value(p.n, p.k, p.s, p.t)
    if claim is Claim.MOON_MOSER:
        return moon_moser_bound(p.n, p.r)
    if claim is Claim.ERDOS:
        return erdos_bound(p.n, p.r)
    if claim is Claim.ORE:
        return ore_bound(p.n)
    if claim is Claim.ADAMUS:
        return adamus_edge_bound(p.n, p.k, p.r)
    raise DomainError(f"claim {claim.value} is not a sweep claim")


def check_class(claim: Claim, p: BoundParams, spec: GraphClassSpec) -> None:
    """The class must sit inside the claim's hypotheses."""
    if claim in BIPARTITE_CLAIMS:
        if spec.mode is not ClassMode.BIPARTITE:
            raise DomainError(f"claim {claim.value} needs a bipartite class")
        if (spec.n, spec.b) != (p.n, p.b):
            raise DomainError(f"class parts {spec.n}x{spec.b} differ from (n, b) = ({p.n}, {p.b})")
        if claim in _BALANCED_CLAIMS and p.b != p.n:
            raise DomainError(f"constraint violated: b = n for {claim.value}")
    else:
        if spec.mode is not ClassMode.GENERAL:
            raise DomainError(f"claim {claim.value} needs a general class")
        if spec.n != p.n:
            raise DomainError(f"class order {spec.n} differs from n = {p.n}")
    if claim is Claim.C and not spec.biconnected:
        raise DomainError("claim c needs a 2-connected class")
    if claim in _CONNECTED_CLAIMS and not (spec.connected or spec.biconnected):
        raise DomainError(f"claim {claim.value} needs a connected class")
    if claim in _DEGREE_CLAIMS and spec.min_degree < p.r:
        raise DomainError(f"constraint violated: class min_degree >= r = {p.r}")


@dataclass(frozen=True)
class SweepPlan:
    """Everything a worker needs to sweep one shard."""

    claim: Claim
    params: BoundParams
    spec: GraphClassSpec
    threshold: int
    cap: int
    shard_width: int
    budget: int
    extras: dict[str, Any] = field(default_factory=dict, hash=False)

    def value(self, host: Host) -> int:
        g = _graph(host)
        if self.claim in _COPY_CLAIMS:
            return count_kst(g, self.params.s, self.params.t)
        return g.size

    def fails(self, host: Host) -> bool:
        """True when the graph misses the conclusion (or is in the extremal family)."""
        g, x_mask, p = _graph(host), _x_mask(host), self.params
        claim = self.claim
        if claim in (Claim.CB, Claim.JACKSON):
            return not has_cycle_at_least(g, 2 * (p.n - p.k), x_mask)
        if claim in (Claim.LI_NING, Claim.ADAMUS, Claim.CONJ_41):
            return not has_cycle_of_length(g, 2 * (p.n - p.k))
        if claim is Claim.PB:
            return not has_path_at_least(g, 2 * (p.n - p.k))
        if claim in (Claim.MB, Claim.WANG):
            assert isinstance(host, BipartiteGraph)
            return max_matching(host) < p.n - p.k
        if claim is Claim.C:
            return not has_cycle_at_least(g, p.k)
        if claim is Claim.P:
            return not has_path_at_least(g, p.k)
        if claim is Claim.MOON_MOSER:
            return not has_cycle_at_least(g, 2 * p.n, x_mask)
        return not has_cycle_at_least(g, p.n)

    def fails_at_least(self, host: Host) -> bool:
        return not has_cycle_at_least(_graph(host), 2 * (self.params.n - self.params.k), _x_mask(host))

    def observe(self, host: Host, tally: SweepTally) -> None:
        value = self.value(host)
        above = value > self.threshold
        # Below the bound a graph only matters if it can reach the current max.
        if not above and value < tally.best:
            return
        if not self.fails(host):
            return
        g = _graph(host)
        record = to_graph6_str(g)
        if above:
            tally.add_violation(record)
            if self.claim in CONJECTURE_CLAIMS and self.fails_at_least(host):
                tally.add_at_least(record)
        tally.observe_failure(value, record, (g.order, g.size, value))

    def is_violation(self, host: Host) -> bool:
        return admits(self.spec, _graph(host)) and self.value(host) > self.threshold and self.fails(host)


def plan_sweep(claim: Claim, p: BoundParams, spec: GraphClassSpec) -> SweepPlan:
    settings = get_settings()
    threshold = claim_threshold(claim, p)
    check_class(claim, p, spec)
    extras: dict[str, Any] = {}
    if claim is Claim.JACKSON:
        extras["jackson_bound"] = jackson_bound(p.b, p.n, p.k)
    return SweepPlan(
        claim=claim,
        params=p,
        spec=spec,
        threshold=threshold,
        cap=settings.max_witnesses,
        shard_width=settings.shard_width,
        budget=settings.budget,
        extras=extras,
    )


def _run_shard(task: tuple[SweepPlan, int]) -> SweepTally:
    plan, shard = task
    tally = SweepTally(plan.cap)
    for host in enumerate_class(plan.spec, shard=shard, shard_width=plan.shard_width, budget=plan.budget):
        tally.class_size += 1
        plan.observe(host, tally)
    return tally.finalized()


def run_sweep(plan: SweepPlan, jobs: Optional[int] = None, progress: Optional[bool] = None) -> SweepTally:
    """Sweep every shard and fold the results; the fold order does not matter."""
    settings = get_settings()
    jobs = settings.jobs if jobs is None else jobs
    progress = settings.progress if progress is None else progress
    if jobs < 1:
        raise DomainError("constraint violated: jobs >= 1")
    shards = shard_count(plan.spec, plan.shard_width)
    tasks = [(plan, shard) for shard in range(shards)]
    bar = {"total": shards, "desc": plan.claim.value, "disable": not progress, "file": sys.stderr}
    if jobs > 1 and shards > 1:
        with Pool(processes=min(jobs, shards)) as pool:
            results = list(tqdm(pool.imap_unordered(_run_shard, tasks), **bar))
    else:
        results = [_run_shard(task) for task in tqdm(tasks, **bar)]
    return reduce(SweepTally.merge, results, SweepTally(plan.cap))


def _construction_signatures(plan: SweepPlan) -> list[tuple[int, int, str]]:
    """Signatures of the sharpness constructions at a in {r, h} that lie in the class."""
    claim, p = plan.claim, plan.params
    if claim not in THEOREM_CLAIMS and claim is not Claim.CONJ_41:
        return []
    signatures = set()
    for a in sorted({p.r, p.h(claim)}):
        try:
            construction = sharpness_construction(claim, p, a, check=False)
        except DomainError:
            continue
        g = construction.graph
        if admits(plan.spec, g):
            signatures.add((g.order, g.size, str(plan.value(construction.host))))
    return sorted(signatures)


def build_report(
    plan: SweepPlan, tally: SweepTally, runtime_ms: Optional[int] = None, dedup: bool = False
) -> VerifyReport:
    witnesses = tally.witnesses
    if dedup:
        if plan.spec.order <= get_settings().canonical_max_order:
            witnesses = dedup_isomorphic(witnesses)
        else:
            logger.warning("Skipping witness dedup above canonical scale", order=plan.spec.order)
    extremal = tally.extremal_value
    return VerifyReport(
        claim=plan.claim.value,
        params={**plan.params.as_dict(plan.claim), **plan.extras},
        class_spec=plan.spec.describe(),
        class_size=tally.class_size,
        threshold=str(plan.threshold),
        violation_count=tally.violation_count,
        violations=tally.violations,
        extremal_value=None if extremal is None else str(extremal),
        tight=extremal == plan.threshold,
        witnesses=witnesses,
        extremal_signatures=sorted((o, s, str(v)) for o, s, v in tally.signatures),
        construction_signatures=_construction_signatures(plan),
        at_least_violations=tally.at_least_violations,
        seed=plan.spec.seed,
        runtime_ms=runtime_ms,
    )


def _sweep(
    claim: Claim, p: BoundParams, spec: GraphClassSpec, jobs: Optional[int], dedup: bool
) -> VerifyReport:
    plan = plan_sweep(claim, p, spec)
    started = time.perf_counter()
    tally = run_sweep(plan, jobs)
    runtime_ms = int((time.perf_counter() - started) * 1000)
    report = build_report(plan, tally, runtime_ms, dedup)
    logger.info(
        "Sweep finished",
        claim=claim.value,
        class_size=report.class_size,
        violations=report.violation_count,
        extremal_value=report.extremal_value,
        tight=report.tight,
    )
    if report.violation_count:
        logger.warning("Violations found", claim=claim.value, first=report.violations[0])
    return report


def verify_theorem(
    claim: Claim, p: BoundParams, spec: GraphClassSpec, jobs: Optional[int] = None, dedup: bool = False
) -> VerifyReport:
    """Check the theorem's conclusion on every class graph above the threshold."""
    if claim not in THEOREM_CLAIMS:
        raise DomainError(f"{claim.value} is not a theorem claim")
    return _sweep(claim, p, spec, jobs, dedup)


def verify_baseline(
    claim: Claim, p: BoundParams, spec: GraphClassSpec, jobs: Optional[int] = None, dedup: bool = False
) -> VerifyReport:
    """Compute the extremal value over the class and compare with the closed form."""
    if claim not in BASELINE_CLAIMS:
        raise DomainError(f"{claim.value} is not a baseline claim")
    return _sweep(claim, p, spec, jobs, dedup)


def search_conjecture(
    claim: Claim, p: BoundParams, spec: GraphClassSpec, jobs: Optional[int] = None, dedup: bool = False
) -> VerifyReport:
    """Look for graphs above the conjectured bound without a cycle of length exactly 2n-2k.

    `at_least_violations` lists the ones that also miss every cycle of length >= 2n-2k.
    """
    if claim not in CONJECTURE_CLAIMS:
        raise DomainError(f"{claim.value} is not a conjecture claim")
    return _sweep(claim, p, spec, jobs, dedup)


def run_claim(
    claim: Claim, p: BoundParams, spec: GraphClassSpec, jobs: Optional[int] = None, dedup: bool = False
) -> VerifyReport:
    if claim in THEOREM_CLAIMS:
        return verify_theorem(claim, p, spec, jobs, dedup)
    if claim in BASELINE_CLAIMS:
        return verify_baseline(claim, p, spec, jobs, dedup)
    return search_conjecture(claim, p, spec, jobs, dedup)


def replay_violation(claim: Claim, p: BoundParams, spec: GraphClassSpec, record: Union[str, bytes]) -> bool:
    """Reload a witness and recheck it from scratch: in class, above the bound, conclusion missing."""
    plan = plan_sweep(claim, p, spec)
    g = decode_graph6(record)
    host: Host = BipartiteGraph(g, (1 << spec.n) - 1) if spec.mode is ClassMode.BIPARTITE else g
    return plan.is_violation(host)


def default_class(
    claim: Claim,
    p: BoundParams,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    connected: bool = False,
    min_edges: int = 0,
) -> GraphClassSpec:
    """The class matching the claim's hypotheses; random when `samples` is given."""
    options: dict[str, Any] = {
        "connected": connected or claim in _CONNECTED_CLAIMS,
        "biconnected": claim is Claim.C,
        "min_degree": p.r if claim in _DEGREE_CLAIMS else 0,
        "min_edges": min_edges,
    }
    if samples is not None:
        options.update(enumeration=EnumerationMode.RANDOM, count=samples, seed=seed)
    if claim in BIPARTITE_CLAIMS:
        return GraphClassSpec.bipartite(p.n, p.b, **options)
    return GraphClassSpec.general(p.n, **options)
