import math

import pytest

from starsmm import mitigation


class TestGammaFactors:
    def test_gamma_sq_t_noiseless(self):
        assert mitigation.gamma_sq_T(0.0) == 1.0

    def test_gamma_sq_t_cultivation_rate(self):
        got = mitigation.gamma_sq_T(2e-9)
        assert abs(got - (1.0 + 8e-9)) / got < 1e-16

    def test_gamma_sq_t_point_value(self):
        assert mitigation.gamma_sq_T(0.01) == pytest.approx(0.98 ** -2, rel=1e-15)
        assert mitigation.gamma_sq_T(0.01) == pytest.approx(1.0412328196584758, rel=1e-12)

    def test_gamma_sq_t_domain(self):
        with pytest.raises(ValueError):
            mitigation.gamma_sq_T(0.5)

    def test_gamma_sq_rotation(self):
        assert mitigation.gamma_sq_rotation(0.0) == 1.0
        p_l = 0.1 * 1e-5 * 1e-3
        assert mitigation.gamma_sq_rotation(p_l) == pytest.approx(1.0 + 4e-9, rel=1e-15)


class TestTotalBudget:
    def test_empty_circuit(self):
        profile = mitigation.CircuitProfile(n_t=0, architecture="v1")
        budget = mitigation.total_budget(profile)
        assert budget.p_total == 0.0
        assert budget.gamma_total_sq == 1.0
        assert budget.feasible

    def test_v1_closed_form(self):
        profile = mitigation.CircuitProfile(
            n_t=100, rotations=((1e-5, 50),), architecture="v1"
        )
        budget = mitigation.total_budget(profile)
        assert budget.p_total == pytest.approx((2 / 15) * (100 + 2 * 50) * 1e-3, rel=1e-12)

    def test_v2_closed_form(self):
        profile = mitigation.CircuitProfile(
            n_t=10, rotations=((1e-5, 1000),), architecture="v2"
        )
        budget = mitigation.total_budget(profile)
        expected = ((2 / 15) * 10 + 1.6 * 1000 * 1e-5) * 1e-3
        assert budget.p_total == pytest.approx(expected, rel=1e-12)

    def test_v3_with_constant_alpha(self):
        profile = mitigation.CircuitProfile(
            n_t=5, rotations=((1e-5, 1000),), architecture="v3"
        )
        budget = mitigation.total_budget(profile, alpha_model=0.1)
        expected = 5 * 2e-9 + 1000 * 0.1 * 1e-5 * 1e-3
        assert budget.p_total == pytest.approx(expected, rel=1e-12)

    def test_v3_requires_alpha(self):
        profile = mitigation.CircuitProfile(n_t=1, architecture="v3")
        with pytest.raises(ValueError):
            mitigation.total_budget(profile)

    def test_cultivation_closed_form(self):
        profile = mitigation.CircuitProfile(
            n_t=7, rotations=((1e-5, 3),), architecture="ftqc-cultivation"
        )
        budget = mitigation.total_budget(profile)
        n_syn = mitigation.synthesis_t_count(2e-9)
        expected = (7 + 3 * n_syn) * 2e-9 + 3 * 2e-9
        assert budget.p_total == pytest.approx(expected, rel=1e-12)

    def test_unknown_architecture_rejected(self):
        with pytest.raises(ValueError):
            mitigation.CircuitProfile(n_t=0, architecture="v4")

    def test_gamma_product_vs_exponential_gap(self):
        profile = mitigation.CircuitProfile(
            n_t=1000, rotations=((1e-3, 500), (1e-4, 2000)), architecture="v3",
            p_m=1e-5,
        )
        budget = mitigation.total_budget(profile, alpha_model=0.5)
        sum_p_sq = sum(c * r * r for r, c in budget.per_gate_rates)
        gap = abs(math.log(budget.gamma_total_sq) - 4.0 * budget.p_total)
        assert gap <= 8.0 * sum_p_sq

    def test_trotter_horizon(self):
        # lambda = 100, alpha_max = 0.1, p_ph = 1e-3 -> T <~ 100
        assert mitigation.feasible_evolution_time(100.0, 0.1, 1e-3) == pytest.approx(100.0)


class TestFeasibleBoundary:
    def test_intercepts_at_zero_t_count(self):
        grid = [0.0]
        assert mitigation.feasible_boundary("v1", 1e-5, grid)[0][1] == pytest.approx(
            3750.0, rel=1e-6
        )
        assert mitigation.feasible_boundary("v2", 1e-5, grid)[0][1] == pytest.approx(
            6.25e7, rel=1e-6
        )
        n_syn = mitigation.synthesis_t_count(2e-9)
        assert n_syn == 87
        expected = 1.0 / ((n_syn + 1) * 2e-9)
        got = mitigation.feasible_boundary("ftqc-cultivation", 1e-5, grid)[0][1]
        assert got == pytest.approx(expected, rel=1e-6)
        assert got == pytest.approx(5.7e6, rel=0.02)

    def test_v3_constant_alpha_intercept(self):
        got = mitigation.feasible_boundary("v3", 1e-5, [0.0], alpha_model=0.1)[0][1]
        assert got == pytest.approx(1e9, rel=1e-6)

    def test_t_axis_intercepts(self):
        # N_R hits zero once N_T alone saturates the budget
        for arch, n_t_star in (("ftqc-cultivation", 5e8), ("v3", 5e8)):
            curve = mitigation.feasible_boundary(
                arch, 1e-5, [n_t_star, 2 * n_t_star], alpha_model=0.1
            )
            assert curve[0][1] == pytest.approx(0.0, abs=1e-3)
            assert curve[1][1] == 0.0

    @pytest.mark.parametrize("arch", mitigation.ARCHITECTURES)
    def test_monotone_non_increasing(self, arch):
        grid = [10.0 ** e for e in range(0, 10)]
        curve = mitigation.feasible_boundary(arch, 1e-5, grid, alpha_model=0.1)
        values = [n_r for _, n_r in curve]
        assert all(b <= a for a, b in zip(values, values[1:]))

    def test_boundary_points_satisfy_budget(self):
        for arch in mitigation.ARCHITECTURES:
            for n_t, n_r in mitigation.feasible_boundary(
                arch, 1e-5, [0.0, 1e6], alpha_model=0.1
            ):
                if n_r == 0.0:
                    continue
                a_t = mitigation.t_cost_rate(arch)
                a_r = mitigation.rotation_cost_rate(arch, 1e-5, alpha_model=0.1)
                assert a_t * n_t + a_r * n_r == pytest.approx(1.0, abs=1e-12)

    def test_architecture_dominance_ordering(self):
        grid = [0.0]
        order = {
            arch: mitigation.feasible_boundary(arch, 1e-5, grid, alpha_model=0.1)[0][1]
            for arch in mitigation.ARCHITECTURES
        }
        assert order["v3"] > order["v2"] > order["ftqc-cultivation"] > order["v1"]
