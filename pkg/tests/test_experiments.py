import numpy as np
import pytest

from majdyn import (
    ExperimentConfig,
    census_signatures,
    gen_random_regular,
    has_positive_core,
    md0_core_probe,
    md0_type_census,
    random_spin_state,
    run_core_after_md,
    run_experiment,
    run_md0_core_vs_k,
    run_oscillation_histogram,
    run_swap_experiments,
    summarize,
    trial_seed,
    wilson_interval,
)
from majdyn.experiments import (
    CSV_COLUMNS,
    census_to_csv,
    records_to_csv,
    resolve_checkpoints,
    run_trial,
)


def small_config(**overrides):
    base = dict(kind="oscillation-regular", d_values=[3], n_values=[50],
                trials=10, master_seed=7)
    base.update(overrides)
    return ExperimentConfig(**base)


class TestTrialSeeds:
    def test_pure_function_of_coordinates(self):
        a = trial_seed(7, "oscillation-regular", 3, 50, 0)
        b = trial_seed(7, "oscillation-regular", 3, 50, 0)
        assert a == b

    def test_distinct_across_coordinates(self):
        seeds = {
            trial_seed(7, "oscillation-regular", 3, 50, 0),
            trial_seed(7, "oscillation-regular", 3, 50, 1),
            trial_seed(7, "oscillation-regular", 5, 50, 0),
            trial_seed(7, "oscillation-regular", 3, 60, 0),
            trial_seed(7, "oscillation-er", 3, 50, 0),
            trial_seed(8, "oscillation-regular", 3, 50, 0),
        }
        assert len(seeds) == 6

    def test_64_bit_range(self):
        s = trial_seed(2**63, "core-after-md", 4, 100, 3)
        assert 0 <= s < 2**64


class TestConfigValidation:
    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="kind"):
            small_config(kind="bogus").validate()

    def test_odd_nd_rejected_for_regular(self):
        with pytest.raises(ValueError, match="even"):
            small_config(d_values=[3], n_values=[51]).validate()

    def test_fractional_d_rejected_for_regular(self):
        with pytest.raises(ValueError, match="integer"):
            small_config(d_values=[3.5]).validate()

    def test_fractional_d_allowed_for_er(self):
        small_config(kind="oscillation-er", d_values=[3.5]).validate()

    def test_checkpoints_required_for_swap_sweep(self):
        with pytest.raises(ValueError, match="checkpoints"):
            small_config(kind="swap-core-vs-steps", d_values=[4]).validate()

    def test_k_values_required_for_md0(self):
        with pytest.raises(ValueError, match="k_values"):
            small_config(kind="md0-core-vs-k", d_values=[4]).validate()

    def test_trials_positive(self):
        with pytest.raises(ValueError, match="trials"):
            small_config(trials=0).validate()


class TestResolveCheckpoints:
    def test_integers_are_absolute(self):
        assert resolve_checkpoints([10, 200], 1000) == [10, 200]

    def test_fractions_scale_with_n(self):
        assert resolve_checkpoints([0.15, 0.45], 10_000) == [1500, 4500]

    def test_mixed_must_ascend(self):
        with pytest.raises(ValueError, match="ascending"):
            resolve_checkpoints([0.45, 100], 1000)

    def test_rejects_out_of_range_fraction(self):
        with pytest.raises(ValueError):
            resolve_checkpoints([1.5], 100)


class TestDeterminism:
    def test_rerun_is_byte_identical(self):
        cfg = small_config()
        a = records_to_csv(run_experiment(cfg, workers=1))
        b = records_to_csv(run_experiment(cfg, workers=1))
        assert a == b

    def test_worker_count_does_not_change_output(self):
        cfg = small_config(trials=8)
        a = records_to_csv(run_experiment(cfg, workers=1))
        b = records_to_csv(run_experiment(cfg, workers=2))
        assert a == b

    def test_record_recomputable_from_trial_seed(self):
        cfg = small_config(trials=3)
        records = run_experiment(cfg)
        r = records[-1]
        redo = run_trial(r.kind, r.d, r.n, r.trial_index, r.trial_seed)[0]
        assert redo == r


class TestKinds:
    def test_oscillation_regular_fields(self):
        records = run_oscillation_histogram(small_config())
        assert len(records) == 10
        for r in records:
            assert r.period in (1, 2)
            assert r.T_converge >= 0
            assert 0.0 <= r.oscillating_fraction <= 1.0
            assert r.has_positive_core is None

    def test_oscillation_er_runs(self):
        cfg = small_config(kind="oscillation-er", d_values=[2.5], trials=5)
        records = run_oscillation_histogram(cfg)
        assert len(records) == 5

    def test_wrapper_rejects_wrong_kind(self):
        with pytest.raises(ValueError, match="expected kind"):
            run_core_after_md(small_config())

    def test_core_after_md_fields(self):
        cfg = small_config(kind="core-after-md", d_values=[4], trials=6)
        records = run_core_after_md(cfg)
        assert all(r.has_positive_core in (True, False) for r in records)

    def test_swap_internal_cut_fields(self):
        cfg = small_config(kind="swap-internal-cut", d_values=[4], trials=6)
        records = run_swap_experiments(cfg)
        m = 50 * 4 // 2
        for r in records:
            assert r.reached_internal_cut in (True, False)
            assert 0 <= r.swap_steps <= m

    def test_swap_checkpoint_records(self):
        cfg = small_config(kind="swap-core-vs-steps", d_values=[4], trials=4,
                           checkpoints=[0, 5, 0.5])
        records = run_swap_experiments(cfg)
        assert len(records) == 12
        per_trial = [r.k for r in records[:3]]
        assert per_trial == [0, 5, 25]
        for r in records:
            assert r.swap_steps <= r.k
            assert r.has_positive_core in (True, False)

    def test_md0_checkpoints_match_direct_probe(self):
        cfg = small_config(kind="md0-core-vs-k", d_values=[4], trials=5,
                           k_values=[0, 2, 5])
        records = run_md0_core_vs_k(cfg)
        assert len(records) == 15
        by_trial = {}
        for r in records:
            by_trial.setdefault(r.trial_index, []).append(r)
        from majdyn.experiments import _mix, _SUB_GRAPH, _SUB_INIT

        for i, recs in by_trial.items():
            tseed = recs[0].trial_seed
            g = gen_random_regular(50, 4, _mix(tseed, _SUB_GRAPH))
            x0 = random_spin_state(50, np.random.default_rng(_mix(tseed, _SUB_INIT)))
            for r in recs:
                assert r.has_positive_core == md0_core_probe(g, x0, r.k)

    def test_non_convergence_is_flagged_not_raised(self):
        cfg = small_config(trials=5, max_steps=1)
        records = run_experiment(cfg)
        flagged = [r for r in records if not r.converged]
        assert flagged, "with a 1-step cap some trial must fail to converge"
        for r in flagged:
            assert r.period is None and r.T_converge is None


class TestCensus:
    def test_unanimous_positive_mass(self):
        g = gen_random_regular(30, 3, seed=1)
        counts = md0_type_census(g, np.ones(30, dtype=np.int8), k=4)
        sigs = census_signatures(4)
        assert counts.sum() == 30
        assert counts[sigs.index("+++++")] == 30

    def test_counts_sum_to_n_and_no_neutral_start(self):
        g = gen_random_regular(40, 5, seed=2)
        x0 = random_spin_state(40, np.random.default_rng(3))
        counts = md0_type_census(g, x0, k=4)
        sigs = census_signatures(4)
        assert counts.sum() == 40
        for sig, c in zip(sigs, counts):
            if sig[0] == "0":
                assert c == 0

    def test_signature_order_and_size(self):
        sigs = census_signatures(4)
        assert len(sigs) == 243
        assert sigs[0] == "-----"
        assert sigs[-1] == "+++++"
        assert all(len(s) == 5 for s in sigs)

    def test_census_csv(self):
        cfg = small_config(kind="md0-type-census", d_values=[4], trials=3)
        records = run_experiment(cfg)
        text = census_to_csv(records)
        lines = text.strip().split("\n")
        assert lines[0] == "signature,count"
        assert len(lines) == 244
        total = sum(int(line.split(",")[1]) for line in lines[1:])
        assert total == 3 * 50


class TestCsvFormat:
    def test_header_and_shape(self):
        records = run_experiment(small_config(trials=2))
        lines = records_to_csv(records).strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 3
        assert all(line.count(",") == len(CSV_COLUMNS) - 1 for line in lines)

    def test_booleans_and_empties(self):
        cfg = small_config(kind="core-after-md", d_values=[4], trials=1)
        line = records_to_csv(run_experiment(cfg)).strip().split("\n")[1]
        fields = dict(zip(CSV_COLUMNS, line.split(",")))
        assert fields["has_positive_core"] in ("0", "1")
        assert fields["reached_internal_cut"] == ""
        assert fields["swap_steps"] == ""
        assert fields["k"] == ""

    def test_fraction_precision(self):
        records = run_experiment(small_config(trials=1))
        line = records_to_csv(records).strip().split("\n")[1]
        frac = dict(zip(CSV_COLUMNS, line.split(",")))["oscillating_fraction"]
        assert len(frac.split(".")[1]) == 8

    def test_er_degree_formatting(self):
        cfg = small_config(kind="oscillation-er", d_values=[2.5], trials=1)
        line = records_to_csv(run_experiment(cfg)).strip().split("\n")[1]
        assert line.split(",")[1] == "2.5"


class TestWilson:
    def test_known_values(self):
        # cross-checked against statsmodels proportion_confint(method="wilson")
        lo, hi = wilson_interval(50, 100)
        assert lo == pytest.approx(0.40383, abs=1e-4)
        assert hi == pytest.approx(0.59617, abs=1e-4)
        lo, hi = wilson_interval(0, 100)
        assert lo == 0.0
        assert hi == pytest.approx(0.03697, abs=1e-4)

    def test_bounds_inside_unit_interval(self):
        for k, n in ((0, 5), (5, 5), (3, 7)):
            lo, hi = wilson_interval(k, n)
            assert 0.0 <= lo <= hi <= 1.0


class TestSummarize:
    def test_probability_groups_get_wilson(self):
        cfg = small_config(kind="core-after-md", d_values=[4], trials=5)
        lines = summarize(run_experiment(cfg))
        assert len(lines) == 1
        assert "wilson95=" in lines[0]
        assert "core-after-md d=4 n=50" in lines[0]

    def test_fraction_groups_get_mean(self):
        lines = summarize(run_experiment(small_config(trials=5)))
        assert "mean_osc_fraction=" in lines[0]
