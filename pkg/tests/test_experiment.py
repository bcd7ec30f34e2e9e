"""Tests for the Monte-Carlo sweep harness."""

import numpy as np
import pytest

from lsmi.core import optimal_weights, rayleigh_quotient
from lsmi.experiment import (
    ExperimentConfig,
    GridSpec,
    grid_oracle,
    resolve_scenario,
    result_to_csv,
    run_experiment,
    run_trial,
)
from lsmi.scenario import (
    InterferenceComponent,
    ScenarioConfig,
    steering_vector,
    true_covariance,
)

COMPONENTS = (
    InterferenceComponent(0.0, 500.0, 1.0),
    InterferenceComponent(1000.0, 500.0, 1.0),
)


def template(**overrides):
    kwargs = dict(
        prf=20_000.0, n=8, components=COMPONENTS, noise_power=1.0,
        signal_doppler=4000.0, signal_power=10.0,
        contaminated=False, training_signal_power=10.0,
    )
    kwargs.update(overrides)
    return ScenarioConfig(**kwargs)


def small_config(**overrides):
    kwargs = dict(
        scenario=template(), n_values=(8,), input_sinr_db=(0.0,),
        trials=3, seed=11, methods=("optimal", "fixed", "adaptive"),
    )
    kwargs.update(overrides)
    return ExperimentConfig(**kwargs)


class TestResolveScenario:
    def test_interference_power_from_target(self):
        cfg = resolve_scenario(template(), 16, -20.0)
        assert cfg.n == 16
        # signal power 10, target -20 dB -> total interference 1000
        assert cfg.interference_power == pytest.approx(1000.0)

    def test_equal_split_preserved(self):
        cfg = resolve_scenario(template(), 8, 0.0)
        p = [c.power for c in cfg.components]
        assert p[0] == pytest.approx(p[1])


class TestRunTrial:
    def test_optimal_ignores_training_draw(self):
        cfg = resolve_scenario(template(), 8, 0.0)
        r_true = true_covariance(cfg)
        s = steering_vector(cfg.signal_doppler, cfg.prf, 8)
        expected = rayleigh_quotient(optimal_weights(r_true, s), s, r_true, cfg.signal_power)
        for trial in (0, 1, 2):
            out = run_trial(cfg, 8, 8, ("optimal",), seed=5, trial_index=trial)
            assert out["optimal"].output_sinr == pytest.approx(expected, rel=1e-12)

    def test_matched_filter_limit_noise_only(self):
        # no interference: every method converges to sigma_s^2 N / sigma_n^2
        cfg = template(components=(), n=8)
        limit = cfg.signal_power * 8 / cfg.noise_power
        out = run_trial(cfg, 8, 1000, ("optimal", "fixed", "adaptive"), seed=1, trial_index=0)
        assert out["optimal"].output_sinr == pytest.approx(limit, rel=1e-12)
        assert out["fixed"].output_sinr == pytest.approx(limit, rel=0.05)
        assert out["adaptive"].output_sinr == pytest.approx(limit, rel=0.05)

    def test_oracle_dominates_fixed_and_adaptive(self):
        cfg = resolve_scenario(template(contaminated=True), 8, 0.0)
        for trial in range(5):
            out = run_trial(cfg, 8, 8, ("fixed", "adaptive", "grid_oracle"),
                            seed=3, trial_index=trial)
            assert out["grid_oracle"].output_sinr >= out["fixed"].output_sinr
            assert out["grid_oracle"].output_sinr >= out["adaptive"].output_sinr

    def test_deterministic(self):
        cfg = resolve_scenario(template(), 8, 0.0)
        a = run_trial(cfg, 8, 8, ("fixed", "adaptive"), seed=9, trial_index=4)
        b = run_trial(cfg, 8, 8, ("fixed", "adaptive"), seed=9, trial_index=4)
        assert a == b

    def test_extra_trials_leave_earlier_draws_alone(self):
        # per-trial substreams: outcomes depend only on (seed, trial index)
        cfg = resolve_scenario(template(), 8, 0.0)
        first = [run_trial(cfg, 8, 8, ("fixed",), seed=2, trial_index=t)["fixed"]
                 for t in range(4)]
        again = [run_trial(cfg, 8, 8, ("fixed",), seed=2, trial_index=t)["fixed"]
                 for t in range(8)][:4]
        assert first == again


class TestGridOracle:
    def test_identity_tie_breaks_small(self):
        r = np.eye(4, dtype=complex)
        s = steering_vector(0.0, 1.0, 4)
        alpha, sinr = grid_oracle(r, s, r, 1.0, [0.5, 1.0, 2.0])
        assert alpha == 0.5
        assert sinr == pytest.approx(4.0)

    def test_single_point_grid(self):
        r = np.eye(4, dtype=complex)
        s = steering_vector(0.0, 1.0, 4)
        alpha, _ = grid_oracle(r, s, r, 1.0, [3.0])
        assert alpha == 3.0

    def test_grid_refinement_stability(self):
        cfg = resolve_scenario(template(contaminated=True), 8, 0.0)
        out_coarse = run_trial(cfg, 8, 8, ("grid_oracle",), seed=1, trial_index=0,
                               grid=GridSpec(points=61))
        out_fine = run_trial(cfg, 8, 8, ("grid_oracle",), seed=1, trial_index=0,
                             grid=GridSpec(points=610))
        coarse = 10 * np.log10(out_coarse["grid_oracle"].output_sinr)
        fine = 10 * np.log10(out_fine["grid_oracle"].output_sinr)
        assert abs(fine - coarse) < 0.05


class TestRunExperiment:
    def test_row_cardinality(self):
        cfg = small_config(n_values=(8, 16), trials=2)
        result = run_experiment(cfg)
        assert len(result.rows) == 6
        assert result.ok

    def test_rows_sorted(self):
        cfg = small_config(n_values=(16, 8), input_sinr_db=(0.0, -20.0), trials=2)
        result = run_experiment(cfg)
        keys = [(r.n, r.input_sinr_db, r.method) for r in result.rows]
        assert keys == sorted(keys)

    def test_optimal_zero_variance(self):
        result = run_experiment(small_config(trials=5))
        opt = [r for r in result.rows if r.method == "optimal"][0]
        assert opt.std_output_sinr_db == 0.0

    def test_per_trial_ceiling(self):
        cfg = resolve_scenario(template(), 8, 0.0)
        for trial in range(5):
            out = run_trial(cfg, 8, 8, ("optimal", "fixed", "adaptive", "grid_oracle"),
                            seed=8, trial_index=trial)
            top = out["optimal"].output_sinr
            for name, o in out.items():
                assert o.output_sinr <= top * (1 + 1e-10), name

    def test_csv_determinism(self):
        cfg = small_config(trials=4)
        a = result_to_csv(run_experiment(cfg))
        b = result_to_csv(run_experiment(cfg))
        assert a == b

    def test_csv_layout(self):
        result = run_experiment(small_config(trials=2))
        text = result_to_csv(result)
        lines = text.splitlines()
        assert lines[0] == "# seed=11"
        assert lines[1].startswith("n,m,input_sinr_db,method,mean_output_sinr_db")
        assert len(lines) == 2 + len(result.rows)
        assert "\r" not in text

    def test_m_ratio(self):
        cfg = small_config(m_ratio=2.0, trials=2)
        result = run_experiment(cfg)
        assert all(r.m == 16 for r in result.rows)

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError):
            small_config(trials=0)
        with pytest.raises(ValueError):
            small_config(methods=("optimal", "bogus"))
        with pytest.raises(ValueError):
            small_config(n_values=())
