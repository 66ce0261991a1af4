import math

import numpy as np
import pytest

from starsmm import pcec, smm, tmr


def _config(theta_l, k=5, p_ph=1e-3, c1=1.0, **kwargs):
    params = tmr.TmrParams(k=k, p_ph=p_ph, pass_coeffs=(c1,))
    kwargs.setdefault("threshold_ratio", 8.0)
    return smm.SmmConfig(theta_l=theta_l, tmr_params=params, **kwargs)


class TestNRus:
    def test_equal_angles_pure_digital(self):
        assert smm.n_rus(1e-3, 1e-3) == 0

    def test_power_of_two_ratio(self):
        assert smm.n_rus(1e-3, 128e-3) == 7

    def test_generic_ratio(self):
        assert smm.n_rus(1e-5, 0.05) == 13

    def test_rejects_inverted_inputs(self):
        with pytest.raises(ValueError):
            smm.n_rus(0.02, 0.01)


class TestSwitchProbability:
    def test_values(self):
        assert smm.switch_probability(1e-3, 1e-3) == 1.0
        assert smm.switch_probability(1e-3, 0.128) == 0.0078125
        assert smm.switch_probability(1e-5, 0.05) == pytest.approx(2.0 ** -13)

    def test_bracketing_bounds(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            theta_l = 10.0 ** rng.uniform(-7, -2)
            ratio = 10.0 ** rng.uniform(0, 3)
            theta_th = min(theta_l * ratio, smm.MAX_THRESHOLD)
            p = smm.switch_probability(theta_l, theta_th)
            assert theta_l / (2 * theta_th) < p <= theta_l / theta_th * (1 + 1e-12)


class TestSynthesisBudget:
    def test_magic_floor(self):
        assert smm.synthesis_budget(0.0, 0, 2e-9) == (2e-9, 87)

    def test_analog_dominated(self):
        p_analog = 1e-6 / (0.1 * 2 ** 7)
        delta, n_syn = smm.synthesis_budget(p_analog, 7, 2e-9)
        assert delta == pytest.approx(1e-6)
        assert n_syn == 60

    def test_monotone_in_p_analog(self):
        deltas = [smm.synthesis_budget(p, 5, 2e-9)[0] for p in (0.0, 1e-9, 1e-7, 1e-5)]
        assert deltas == sorted(deltas)

    def test_degenerate_raises(self):
        with pytest.raises(ValueError):
            smm.synthesis_budget(0.0, 3, 0.0)


class TestEffectiveErrorRate:
    def test_noiseless_gate(self):
        rep = smm.effective_error_rate(_config(1e-4, p_ph=0.0, p_m=0.0))
        assert rep.p_l == 0.0
        assert rep.alpha_rus == 0.0

    def test_zero_angle_identity_report(self):
        rep = smm.effective_error_rate(_config(0.0, theta_th=0.01, threshold_ratio=None))
        assert rep.p_l == 0.0 and rep.expected_clocks == 0.0

    def test_alpha_identity(self):
        cfg = _config(2e-4, k=7)
        rep = smm.effective_error_rate(cfg)
        assert rep.alpha_rus == rep.p_l / (2e-4 * 1e-3)

    def test_mirror_symmetry(self):
        up = smm.effective_error_rate(_config(1e-4, theta_th=0.01, threshold_ratio=None))
        down = smm.effective_error_rate(_config(-1e-4, theta_th=0.01, threshold_ratio=None))
        assert up.p_l == down.p_l
        assert up.expected_clocks == down.expected_clocks

    def test_trial_table_matches_residuals(self):
        cfg = _config(1e-3, k=5, threshold_ratio=16.0)
        rep = smm.effective_error_rate(cfg)
        assert rep.n_rus == 4 and len(rep.trials) == 4
        for row in rep.trials:
            model = tmr.output_model_for_logical(cfg.tmr_params, row.theta_rus)
            assert row.residual == pytest.approx(pcec.residual_rate(model), rel=1e-13)
        expected_analog = sum(2.0 ** -r.index * r.residual for r in rep.trials)
        assert rep.p_analog == pytest.approx(expected_analog, rel=1e-13)

    def test_leading_order_mode(self):
        cfg_full = _config(1e-3, k=7, threshold_ratio=16.0)
        cfg_lead = _config(1e-3, k=7, threshold_ratio=16.0, include_higher_orders=False)
        full = smm.effective_error_rate(cfg_full)
        lead = smm.effective_error_rate(cfg_lead)
        assert lead.p_analog <= full.p_analog

    def test_out_of_regime_flag(self):
        assert smm.effective_error_rate(_config(1e-8, k=3)).out_of_regime
        assert not smm.effective_error_rate(_config(1e-3, k=3)).out_of_regime

    def test_finite_p_m_upturn_non_monotone(self):
        # fixed ratio, p_m = 2e-9: the digital-stage cost dominates at small
        # angles, so alpha turns back up somewhere in [1e-8, 1e-3]
        alphas = []
        for theta_l in np.geomspace(1e-8, 1e-3, 26):
            cfg = _config(theta_l, k=7, c1=0.04, threshold_ratio=128.0, p_m=2e-9)
            alphas.append(smm.effective_error_rate(cfg).alpha_rus)
        i_min = int(np.argmin(alphas))
        assert 0 < i_min < len(alphas) - 1
        assert alphas[0] > alphas[i_min] < alphas[-1]

    def test_delta_override(self):
        cfg = _config(1e-4, k=5, delta_override=1e-8)
        rep = smm.effective_error_rate(cfg)
        assert rep.delta == 1e-8
        assert rep.n_syn == math.ceil(3 * math.log2(1e8))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            _config(0.02, threshold_ratio=None, theta_th=0.01)  # theta_l > theta_th
        with pytest.raises(ValueError):
            _config(1e-4, threshold_ratio=None, theta_th=0.5)  # above pi/8
        with pytest.raises(ValueError):
            _config(1e-4, threshold_ratio=8.0, theta_th=0.01)  # both set
        with pytest.raises(ValueError):
            _config(1e-4, p_m=0.1)


class TestExpectedClocks:
    def test_pure_digital_is_t_digital_only(self):
        cfg = _config(0.01, threshold_ratio=1.0, timing_mode="latency")
        rep = smm.effective_error_rate(cfg)
        assert rep.n_rus == 0
        per_t = 10.0 / 2 + 1.0
        assert rep.expected_clocks == pytest.approx(rep.n_syn * per_t)

    def test_pipelined_anchor_band(self):
        # ratio-64 gate lands within a clock of 3 across small target angles
        c1 = smm.calibrate_c1()
        for theta_l in (1e-3, 1e-4, 1e-5, 1e-6):
            cfg = _config(theta_l, k=7, c1=c1, threshold_ratio=64.0)
            assert 2.5 <= smm.expected_clocks(cfg) <= 3.5

    def test_synthesis_comparator_cost(self):
        p_l, clocks = smm.synthesis_only_gate(delta=2e-9)
        assert clocks == 87 * (10.0 / 2 + 1.0) == 522.0
        assert p_l == pytest.approx(2e-9 + 2e-9 * 87)

    def test_monotone_in_t_m(self):
        prev = 0.0
        for t_m in (1.0, 5.0, 10.0, 20.0):
            cfg = _config(1e-4, k=5, t_m=t_m, timing_mode="latency")
            clocks = smm.expected_clocks(cfg)
            assert clocks >= prev
            prev = clocks

    def test_per_trajectory_clocks_increase_with_trial_count(self):
        cfg = _config(1e-4, k=5, threshold_ratio=32.0, timing_mode="latency")
        rep = smm.effective_error_rate(cfg)
        cumulative = np.cumsum([row.clocks for row in rep.trials])
        assert all(b > a for a, b in zip(cumulative, cumulative[1:]))


class TestEnumerationOracle:
    @pytest.mark.parametrize("k", [3, 5, 7])
    @pytest.mark.parametrize("ratio", [2.0, 16.0])
    def test_matches_analytic_within_cross_terms(self, k, ratio):
        cfg = _config(0.005, k=k, threshold_ratio=ratio)
        rep = smm.effective_error_rate(cfg)
        exact = smm.enumerate_error_rate(cfg)
        q_max = max(
            tmr.output_model_for_logical(cfg.tmr_params, row.theta_rus).error_weight()
            for row in rep.trials
        )
        assert abs(rep.p_l - exact) <= 10.0 * q_max ** 2


class TestMonteCarlo:
    def test_bit_reproducible(self):
        cfg = _config(0.01, k=5)
        a = smm.monte_carlo(cfg, 40_000, seed=123)
        b = smm.monte_carlo(cfg, 40_000, seed=123)
        assert a == b

    def test_seed_changes_stream(self):
        cfg = _config(0.01, k=5)
        a = smm.monte_carlo(cfg, 40_000, seed=123)
        b = smm.monte_carlo(cfg, 40_000, seed=124)
        assert a.p_l_hat != b.p_l_hat

    def test_switch_probability_within_4_sigma(self):
        cfg = _config(0.004, k=5, threshold_ratio=8.0)
        mc = smm.monte_carlo(cfg, 10 ** 6, seed=2024)
        assert abs(mc.p_switch_hat - 0.125) <= 4 * mc.p_switch_se

    def test_p_l_and_clocks_within_4_sigma(self):
        cfg = _config(0.02, k=5, threshold_ratio=8.0, timing_mode="latency")
        rep = smm.effective_error_rate(cfg)
        mc = smm.monte_carlo(cfg, 10 ** 6, seed=7)
        assert abs(mc.p_l_hat - rep.p_l) <= 4 * mc.p_l_se
        assert abs(mc.clocks_hat - rep.expected_clocks) <= 4 * mc.clocks_se

    def test_zero_angle(self):
        mc = smm.monte_carlo(
            _config(0.0, theta_th=0.01, threshold_ratio=None), 100, seed=1
        )
        assert mc.p_l_hat == 0.0 and mc.p_switch_hat == 1.0


class TestV2Calibration:
    def test_calibrated_factor_hits_target(self):
        c1 = smm.calibrate_c1()
        vals = [
            smm.v2_rus_factor(1e-5 * 2 ** (j / 16.0), 7, 1e-3, c1) for j in range(16)
        ]
        assert sum(vals) / len(vals) == pytest.approx(1.6, abs=1e-6)

    def test_calibrated_band_is_narrow(self):
        c1 = smm.calibrate_c1()
        vals = [
            smm.v2_rus_factor(10 ** (-6 + 2 * j / 24), 7, 1e-3, c1) for j in range(25)
        ]
        assert 1.4 < min(vals) and max(vals) < 1.9

    def test_injection_only_limit(self):
        # switching at the target angle makes every trial an injection:
        # P_L = sum_i 2^-i (2/15) p_ph = 2 (2/15) p_ph, the v1 gate rate
        alpha = smm.v2_rus_factor(0.3, 7, 1e-3, 1.0, theta_switch=0.3)
        assert alpha == pytest.approx((4.0 / 15.0) / 0.3, rel=1e-12)

    def test_crossover_monotone_in_c1(self):
        angles = [smm.v2_crossover_angle(7, 1e-3, c) for c in (0.01, 0.1, 1.0)]
        assert angles[0] > angles[1] > angles[2]
