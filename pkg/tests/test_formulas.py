"""Tests for the closed-form bounds."""

import pytest

from src.exceptions import DomainError
from src.extremal.counting import binomial
from src.extremal.formulas import (
    adamus_edge_bound,
    branch_function,
    branch_value,
    check_discrete_convexity,
    endpoint_max_holds,
    erdos_bound,
    eval_f,
    eval_g,
    exbip_long_cycle,
    jackson_bound,
    moon_moser_bound,
    ore_bound,
    threshold_cycle_bipartite,
    threshold_cycle_general,
    threshold_matching_bipartite,
    threshold_path_bipartite,
    threshold_path_general,
    wang_matching_value,
)
from src.models import BoundParams, Claim


class TestEvalF:
    """f_{s,t}(b, n, m, a)."""

    def test_edge_bound_specialization(self):
        assert eval_f(6, 6, 5, 2, 1, 1) == 24
        assert eval_f(6, 6, 5, 2, 1, 1) == adamus_edge_bound(6, 1, 2)

    def test_mixed_sides(self):
        assert eval_f(5, 4, 3, 1, 2, 1) == 20

    def test_a_zero(self):
        for b in range(1, 7):
            for n in range(1, b + 1):
                for m in range(0, n + 1):
                    for s in range(1, 3):
                        for t in range(1, 3):
                            assert eval_f(b, n, m, 0, s, t) == binomial(b, s) * binomial(m, t)

    def test_edge_form(self):
        """s = t = 1 collapses to b(m-a) + an - a(m-a)."""
        for b in range(1, 8):
            for n in range(1, b + 1):
                for m in range(0, n + 1):
                    for a in range(0, m + 1):
                        assert eval_f(b, n, m, a, 1, 1) == b * (m - a) + a * n - a * (m - a)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            eval_f(3, 4, 2, 1, 1, 1)
        with pytest.raises(DomainError):
            eval_f(4, 4, 2, 3, 1, 1)
        with pytest.raises(DomainError):
            eval_f(4, 4, 2, 1, 0, 1)

    def test_branch_value_sums_orientations(self):
        assert branch_value(5, 4, 3, 1, 1, 2) == eval_f(5, 4, 3, 1, 1, 2) + eval_f(5, 4, 3, 1, 2, 1)
        assert branch_value(5, 4, 3, 1, 2, 2) == eval_f(5, 4, 3, 1, 2, 2)


class TestEvalG:
    """g_{s,t}(n, k, a)."""

    def test_examples(self):
        assert eval_g(10, 5, 2, 1, 1) == 17
        assert eval_g(8, 6, 2, 2, 2) == 17

    def test_edge_form(self):
        for n in range(4, 13):
            for k in range(4, n + 1):
                for a in range(1, (k + 1) // 2):
                    assert eval_g(n, k, a, 1, 1) == a * (n - k + a) + binomial(k - a, 2)

    def test_constraint_message(self):
        with pytest.raises(DomainError, match=r"k/2 > a >= 1"):
            eval_g(10, 5, 3, 1, 1)
        with pytest.raises(DomainError):
            eval_g(10, 5, 0, 1, 1)
        with pytest.raises(DomainError):
            eval_g(4, 5, 1, 1, 1)


class TestThresholds:
    """Theorem thresholds."""

    def test_cycle_bipartite(self):
        assert threshold_cycle_bipartite(BoundParams(6, 6, 1, 2, 1, 1)) == 24
        assert threshold_cycle_bipartite(BoundParams(8, 8, 1, 1, 1, 1)) == 50
        assert threshold_cycle_bipartite(BoundParams(4, 4, 0, 1, 1, 1)) == 13

    def test_r_equals_h_branches_coincide(self):
        p = BoundParams(6, 6, 1, 2, 1, 2)
        branch = branch_function(Claim.CB, p)

        assert p.h(Claim.CB) == 2
        assert branch(p.r) == branch(p.h(Claim.CB))

    def test_path_and_matching_agree(self):
        assert threshold_path_bipartite(BoundParams(6, 6, 1, 1, 1, 1)) == 21
        for b in range(4, 9):
            for n in range(4, b + 1):
                for k in range(0, 2):
                    p = BoundParams(b, n, k, 1, 1, 2)
                    assert threshold_path_bipartite(p) == threshold_matching_bipartite(p)

    def test_cycle_general(self):
        assert threshold_cycle_general(BoundParams(n=10, k=5, r=2)) == 17
        assert threshold_cycle_general(BoundParams(n=10, k=7, r=2)) == 24

    def test_path_general_uses_k_minus_one(self):
        assert threshold_path_general(BoundParams(n=6, k=4, r=1)) == 5
        assert threshold_path_general(BoundParams(n=6, k=4, r=1, s=1, t=2)) == eval_g(6, 3, 1, 1, 2)

    def test_hamilton_shape(self):
        """k = n, r branch at s = t = 1 gives C(n-r, 2) + r^2."""
        for n in range(5, 12):
            for r in range(1, (n - 1) // 2 + 1):
                assert eval_g(n, n, r, 1, 1) == binomial(n - r, 2) + r * r

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            threshold_cycle_bipartite(BoundParams(4, 4, -1, 1, 1, 1))
        with pytest.raises(DomainError):
            threshold_cycle_bipartite(BoundParams(3, 4, 0, 1, 1, 1))
        with pytest.raises(DomainError):
            threshold_cycle_bipartite(BoundParams(6, 6, 1, 3, 1, 1))
        with pytest.raises(DomainError):
            threshold_cycle_general(BoundParams(n=10, k=5, r=1))
        with pytest.raises(DomainError):
            threshold_path_general(BoundParams(n=6, k=3, r=1))


class TestConvexity:
    """Discrete convexity and the endpoint-max property."""

    def test_simple_functions(self):
        assert check_discrete_convexity(lambda a: 5, 0, 4)
        assert check_discrete_convexity(lambda a: a * a, -3, 3)
        assert not check_discrete_convexity(lambda a: -a * a, -3, 3)
        assert endpoint_max_holds(lambda a: a * a, -2, 3)
        assert not endpoint_max_holds(lambda a: -a * a, -2, 3)

    def test_bad_range(self):
        with pytest.raises(DomainError):
            check_discrete_convexity(lambda a: a, 3, 2)

    def test_endpoint_max_on_cycle_thresholds(self):
        """The max over a in [r, h] is the max over {r, h}."""
        for b in range(4, 9):
            for n in range(4, b + 1):
                for k in range(0, n // 2):
                    p = BoundParams(b, n, k, 1, 2, 2)
                    h = p.h(Claim.CB)
                    for r in range(1, h + 1):
                        assert endpoint_max_holds(branch_function(Claim.CB, p), r, h)


class TestBaselines:
    """Closed forms from the literature."""

    def test_values(self):
        assert wang_matching_value(4, 1, 1, 1) == 8
        assert wang_matching_value(4, 1, 2, 2) == 6
        assert exbip_long_cycle(4, 4, 1) == 10
        assert jackson_bound(4, 4, 1) == 10
        assert moon_moser_bound(4, 1) == 13
        assert erdos_bound(5, 1) == 7
        assert ore_bound(5) == 7
        assert adamus_edge_bound(4, 1, 1) == 10

    def test_moon_moser_is_cycle_threshold_at_k_zero(self):
        for n in range(4, 10):
            for r in range(1, n // 2 + 1):
                assert moon_moser_bound(n, r) == branch_value(n, n, n, r, 1, 1)

    def test_domains(self):
        with pytest.raises(DomainError):
            exbip_long_cycle(4, 4, 2)
        with pytest.raises(DomainError):
            ore_bound(2)
