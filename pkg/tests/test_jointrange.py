"""Random pair generation, binary scans, soundness sweeps, tightness search."""

import io
import math

import numpy as np
import pytest

from divbound import (
    BUILTIN_NAMES,
    DomainError,
    builtin,
    random_pair,
    scan_binary,
    scan_to_csv,
    tightness_gap,
    verify_bound,
)

# 0.5*log(4/3) and phi_KL(0.25), both at 50 digits
KL_EXAMPLE = 0.14384103622589045
PHI_KL_QUARTER = 0.0631678848039265
SLACK_EXAMPLE = 0.08067315142196396


class TestRandomPair:
    def test_deterministic_per_seed(self):
        a = random_pair(4, 123)
        b = random_pair(4, 123)
        assert a == b
        assert np.array_equal(a[0].weights, b[0].weights)

    def test_different_seeds_differ(self):
        assert random_pair(2, 5) != random_pair(2, 6)

    def test_valid_probability_measures(self):
        mu, nu = random_pair(3, 99)
        assert abs(mu.total() - 1.0) <= 1e-9
        assert abs(nu.total() - 1.0) <= 1e-9

    def test_nu_floor(self):
        for seed in range(20):
            _, nu = random_pair(5, seed)
            assert np.all(nu.weights >= 1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            random_pair(1, 0)
        with pytest.raises(DomainError):
            random_pair(3, -1)


class TestScanBinary:
    def test_tv_generator_has_zero_slack(self):
        for r in scan_binary(builtin("TV"), 25):
            assert abs(r.slack) <= 1e-12

    def test_diagonal_is_exactly_zero(self):
        for r in scan_binary(builtin("KL"), 9):
            if r.p == r.q:
                assert r.tv == 0.0
                assert r.divergence == 0.0
                assert r.slack == 0.0

    def test_known_record(self):
        # resolution 3 puts the grid at {0.25, 0.5, 0.75}
        records = {(r.p, r.q): r for r in scan_binary(builtin("KL"), 3)}
        r = records[(0.5, 0.25)]
        assert r.tv == 0.5
        assert r.divergence == pytest.approx(KL_EXAMPLE, abs=1e-12)
        assert r.lower_bound == pytest.approx(PHI_KL_QUARTER, abs=1e-12)
        assert r.slack == pytest.approx(SLACK_EXAMPLE, abs=1e-12)

    def test_slack_never_negative(self):
        for name in BUILTIN_NAMES:
            for r in scan_binary(builtin(name), 15):
                assert r.slack >= -1e-9

    def test_record_count_and_domain(self):
        assert len(scan_binary(builtin("PE"), 7)) == 49
        with pytest.raises(DomainError):
            scan_binary(builtin("PE"), 1)

    def test_csv_output(self):
        buf = io.StringIO()
        scan_to_csv(scan_binary(builtin("KL"), 3), buf)
        lines = buf.getvalue().strip().splitlines()
        assert lines[0] == "p,q,tv,divergence,lower_bound,slack"
        assert len(lines) == 10
        cells = lines[1].split(",")
        assert len(cells) == 6
        float(cells[2])  # parses


class TestVerifyBound:
    def test_sweep_passes_for_all_builtins(self):
        for name in BUILTIN_NAMES:
            report = verify_bound(builtin(name), 400, 8, 11)
            assert report.max_violation <= 1e-9
            assert report.passed
            assert report.trials == 400

    def test_single_trial_plumbing(self):
        report = verify_bound(builtin("PE"), 1, 2, 3)
        assert report.trials == 1
        assert report.generator_name == "PE"
        assert len(report.worst_pair[0]) == 2

    def test_deterministic(self):
        a = verify_bound(builtin("KL"), 50, 5, 21)
        b = verify_bound(builtin("KL"), 50, 5, 21)
        assert a == b

    def test_json_serialization(self):
        report = verify_bound(builtin("HE"), 5, 3, 1)
        data = report.to_json_dict()
        assert data["generator"] == "HE"
        assert data["trials"] == 5
        assert data["passed"] is True
        assert set(data["worst_pair"]) == {"mu", "nu"}

    def test_domain(self):
        with pytest.raises(DomainError):
            verify_bound(builtin("KL"), 0, 4, 1)
        with pytest.raises(DomainError):
            verify_bound(builtin("KL"), 10, 1, 1)


class TestTightnessGap:
    def test_zero_budget_with_separating_generator(self):
        certified, achieved, gap = tightness_gap(builtin("KL"), 0.0, 101)
        assert certified <= 1e-10
        assert achieved == 0.0
        assert gap >= -1e-9

    def test_tv_generator_is_tight_on_grid_budgets(self):
        resolution = 100
        for k in (10, 30, 77):
            d = 2.0 * k / (resolution + 1.0) + 1e-9
            certified, achieved, gap = tightness_gap(builtin("TV"), d, resolution)
            assert gap <= 1e-6
            assert gap >= -1e-9
            assert achieved == pytest.approx(d, abs=1e-8)

    def test_gap_nonnegative_for_all_builtins(self):
        for name in BUILTIN_NAMES:
            for d in np.linspace(0.0, 5.0, 6):
                _, _, gap = tightness_gap(builtin(name), d, 101)
                assert gap >= -1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            tightness_gap(builtin("KL"), -0.5, 100)
        with pytest.raises(DomainError):
            tightness_gap(builtin("KL"), math.inf, 100)
