"""Closed-form bound functions, theorem thresholds and baseline values.

Every function returns the exact bound; the strict comparison
"N(K_{s,t}, G) > threshold" belongs to the sweeps.
"""

from __future__ import annotations

from collections.abc import Callable

from ..exceptions import ConsistencyError, DomainError
from ..models import BoundParams, Claim
from .counting import CopyCount, binomial


def _require(condition: bool, constraint: str) -> None:
    if not condition:
        raise DomainError(f"constraint violated: {constraint}")


def eval_f(b: int, n: int, m: int, a: int, s: int, t: int) -> CopyCount:
    """f_{s,t}(b, n, m, a) with m in the n-k slot.

    C(b,s)C(m-a,t) + C(a,s)C(n,t) - C(a,s)C(m-a,t)
    """
    _require(b >= n >= 1, "b >= n >= 1")
    _require(0 <= a <= m <= n, "0 <= a <= m <= n")
    _require(s >= 1 and t >= 1, "s, t >= 1")
    inner = binomial(m - a, t)
    value = binomial(b, s) * inner + binomial(a, s) * (binomial(n, t) - inner)
    return CopyCount(value)


def branch_value(b: int, n: int, m: int, a: int, s: int, t: int) -> CopyCount:
    """f_{s,s} when s = t, otherwise f_{s,t} + f_{t,s}: N(K_{s,t}) of F at this a."""
    if s == t:
        return eval_f(b, n, m, a, s, s)
    return CopyCount(eval_f(b, n, m, a, s, t) + eval_f(b, n, m, a, t, s))


def _g_term(coefficient: int, top: int, bottom: int) -> int:
    return coefficient * binomial(top, bottom) if coefficient else 0


def eval_g(n: int, k: int, a: int, s: int, t: int) -> CopyCount:
    """g_{s,t}(n, k, a), the K_{s,t} count of H_{n,k,a}.

    k >= 3 is accepted so the path theorem can instantiate g at k-1.
    """
    _require(n >= k >= 3, "n >= k >= 3")
    _require(1 <= a and 2 * a < k, "k/2 > a >= 1")
    _require(s >= 1 and t >= 1, "s, t >= 1")
    as_, at = binomial(a, s), binomial(a, t)
    total = 0
    if s == t:
        for i in range(1, n - k + a + 1):
            total += _g_term(as_, n - s - i, s - 1)
        clique = binomial(k - a, 2 * s) * binomial(2 * s, s)
        if clique % 2:
            raise ConsistencyError(f"clique term {clique} is odd before halving")
        total += clique // 2
    else:
        for i in range(1, n - k + a + 1):
            total += _g_term(as_, n - s - i, t - 1) + _g_term(at, n - t - i, s - 1)
        total += binomial(k - a, s + t) * binomial(s + t, s)
    return CopyCount(total)


# Theorem thresholds


def _check_bipartite_theorem(p: BoundParams, claim: Claim) -> int:
    _require(p.s >= 1 and p.t >= 1, "s, t >= 1")
    _require(p.r >= 1, "r >= 1")
    _require(p.k >= 0, "k >= 0")
    _require(p.b >= p.n, "b >= n")
    _require(p.n >= 2 * p.k + 2 * p.r, "n >= 2k + 2r")
    h = p.h(claim)
    _require(p.r <= h, f"r <= h = {h}")
    return h


def _bipartite_threshold(p: BoundParams, m: int, h: int) -> CopyCount:
    return CopyCount(max(
        branch_value(p.b, p.n, m, p.r, p.s, p.t),
        branch_value(p.b, p.n, m, h, p.s, p.t),
    ))


def threshold_cycle_bipartite(p: BoundParams) -> CopyCount:
    """Bound above which a connected bipartite G has a cycle of length >= 2n-2k."""
    h = _check_bipartite_theorem(p, Claim.CB)
    return _bipartite_threshold(p, p.n - p.k, h)


def threshold_path_bipartite(p: BoundParams) -> CopyCount:
    """Bound above which a connected bipartite G has a path on 2n-2k vertices."""
    h = _check_bipartite_theorem(p, Claim.PB)
    return _bipartite_threshold(p, p.n - p.k - 1, h)


def threshold_matching_bipartite(p: BoundParams) -> CopyCount:
    """Same displayed condition as the path theorem; guarantees a matching of n-k edges."""
    h = _check_bipartite_theorem(p, Claim.MB)
    return _bipartite_threshold(p, p.n - p.k - 1, h)


def threshold_cycle_general(p: BoundParams) -> CopyCount:
    """Bound above which a 2-connected G has a cycle of length >= k."""
    _require(p.s >= 1 and p.t >= 1, "s, t >= 1")
    _require(p.n >= p.k >= 5, "n >= k >= 5")
    h = p.h(Claim.C)
    _require(2 <= p.r <= h, f"2 <= r <= h = {h}")
    return CopyCount(max(eval_g(p.n, p.k, p.r, p.s, p.t), eval_g(p.n, p.k, h, p.s, p.t)))


def threshold_path_general(p: BoundParams) -> CopyCount:
    """Bound above which a connected G has a path on k vertices."""
    _require(p.s >= 1 and p.t >= 1, "s, t >= 1")
    _require(p.n >= p.k >= 4, "n >= k >= 4")
    h = p.h(Claim.P)
    _require(1 <= p.r <= h, f"1 <= r <= h = {h}")
    return CopyCount(max(eval_g(p.n, p.k - 1, p.r, p.s, p.t), eval_g(p.n, p.k - 1, h, p.s, p.t)))


THRESHOLDS: dict[Claim, Callable[[BoundParams], CopyCount]] = {
    Claim.CB: threshold_cycle_bipartite,
    Claim.PB: threshold_path_bipartite,
    Claim.MB: threshold_matching_bipartite,
    Claim.C: threshold_cycle_general,
    Claim.P: threshold_path_general,
    Claim.CONJ_41: threshold_cycle_bipartite,
}


def branch_function(claim: Claim, p: BoundParams) -> Callable[[int], CopyCount]:
    """a -> value of the construction branch inside the claim's max."""
    if claim in (Claim.CB, Claim.CONJ_41):
        return lambda a: branch_value(p.b, p.n, p.n - p.k, a, p.s, p.t)
    if claim in (Claim.PB, Claim.MB):
        return lambda a: branch_value(p.b, p.n, p.n - p.k - 1, a, p.s, p.t)
    if claim is Claim.C:
        return lambda a: eval_g(p.n, p.k, a, p.s, p.t)
    if claim is Claim.P:
        return lambda a: eval_g(p.n, p.k - 1, a, p.s, p.t)
    raise DomainError(f"claim {claim.value} has no construction branch")


# Convexity


def check_discrete_convexity(fn: Callable[[int], int], lo: int, hi: int) -> bool:
    """fn(a-1) + fn(a+1) >= 2 fn(a) for every lo < a < hi."""
    if lo > hi:
        raise DomainError("constraint violated: lo <= hi")
    values = [fn(a) for a in range(lo, hi + 1)]
    return all(values[i - 1] + values[i + 1] >= 2 * values[i] for i in range(1, len(values) - 1))


def endpoint_max_holds(fn: Callable[[int], int], lo: int, hi: int) -> bool:
    """The max over lo..hi is attained at lo or hi."""
    if lo > hi:
        raise DomainError("constraint violated: lo <= hi")
    return max(fn(a) for a in range(lo, hi + 1)) == max(fn(lo), fn(hi))


# Baselines from the literature


def moon_moser_bound(n: int, r: int) -> CopyCount:
    """n(n-r) + r^2 edges force a Hamilton cycle in a balanced bipartite graph."""
    _require(1 <= r and 2 * r <= n, "1 <= r <= n/2")
    return CopyCount(n * (n - r) + r * r)


def erdos_bound(n: int, r: int) -> CopyCount:
    """max{C(n-r,2)+r^2, C(n-h,2)+h^2}, h = floor((n-1)/2)."""
    _require(1 <= r and 2 * r <= n - 1, "1 <= r <= (n-1)/2")
    h = (n - 1) // 2
    return CopyCount(max(binomial(n - r, 2) + r * r, binomial(n - h, 2) + h * h))


def ore_bound(n: int) -> CopyCount:
    """C(n-1, 2) + 1 edges force a Hamilton cycle."""
    _require(n >= 3, "n >= 3")
    return CopyCount(binomial(n - 1, 2) + 1)


def jackson_bound(b: int, n: int, k: int) -> CopyCount:
    """Two-case edge bound forcing a cycle of length >= 2n-2k."""
    _require(b >= n >= n - k >= 2, "b >= n >= n-k >= 2")
    m = n - k
    if n <= 2 * m - 2:
        return CopyCount((b - 1) * (m - 1) + n)
    return CopyCount((b - n + 2 * k + 3) * (m - 1))


def exbip_long_cycle(b: int, n: int, k: int) -> CopyCount:
    """(n-k-1)b + k + 1, valid for b >= n >= n-k >= n/2 + 1."""
    _require(b >= n >= n - k and 2 * (n - k) >= n + 2, "b >= n >= n-k >= n/2 + 1")
    return CopyCount((n - k - 1) * b + k + 1)


def wang_matching_value(n: int, k: int, s: int, t: int) -> CopyCount:
    """Max K_{s,t} count in an n x n bipartite graph without a matching of n-k edges."""
    _require(k >= 0 and n - k - 1 >= 0, "0 <= k <= n-1")
    _require(s >= 1 and t >= 1, "s, t >= 1")
    m = n - k - 1
    if s == t:
        return CopyCount(binomial(m, s) * binomial(n, s))
    return CopyCount(binomial(m, s) * binomial(n, t) + binomial(m, t) * binomial(n, s))


def adamus_edge_bound(n: int, k: int, r: int) -> CopyCount:
    """n(n-k-r) + r(k+r), the conjectured edge bound for a cycle of length exactly 2n-2k."""
    _require(r >= 1 and k >= 0, "r >= 1, k >= 0")
    _require(n >= 2 * k + 2 * r, "n >= 2k + 2r")
    return CopyCount(n * (n - k - r) + r * (k + r))
