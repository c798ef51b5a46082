from dataclasses import replace

import numpy as np
import pytest

from blindpair import ColourBlindTestClient, EstimationClient, PillowClient, SimulationClient
from blindpair.domain.entities import PillowConfig


class TestEstimationClient:
    def test_default_grid_is_pooled_values(self, pairs_csv):
        client = EstimationClient()
        estimate = client.estimate_from_path(str(pairs_csv))
        sample = client.read_sample(str(pairs_csv))
        np.testing.assert_array_equal(estimate.grid.points, np.unique(sample.pooled_values()))

    def test_grid_file(self, pairs_csv, tmp_path):
        grid_path = tmp_path / "grid.csv"
        grid_path.write_text("x\n0.75\n0.25\n0.5\n")
        estimate = EstimationClient().estimate_from_path(str(pairs_csv), grid_path=str(grid_path))
        np.testing.assert_array_equal(estimate.grid.points, [0.25, 0.5, 0.75])

    def test_isotonic(self, pairs_csv):
        estimate = EstimationClient().estimate_from_path(str(pairs_csv), isotonic=True)
        assert np.all(np.diff(estimate.g1) >= 0)
        assert np.all(np.diff(estimate.g2) >= 0)


class TestPillowClient:
    def test_reference_row_for_known_m(self, tmp_path):
        table = PillowClient(cache_dir=tmp_path, threads=1).quantile_table(
            PillowConfig(m=200, reps=20, seed=1)
        )
        assert table.reference == {0.1: 0.8592, 0.05: 0.9367, 0.01: 1.0489}
        assert "reference" in table.to_text()

    def test_no_reference_for_other_m(self, tmp_path, small_pillow_config):
        table = PillowClient(cache_dir=tmp_path, threads=1).quantile_table(
            small_pillow_config, alphas=[0.2]
        )
        assert table.reference is None
        assert list(table.rows) == [0.2]

    def test_cache_written(self, tmp_path, small_pillow_config):
        client = PillowClient(cache_dir=tmp_path, threads=1)
        client.quantile_table(small_pillow_config)
        assert (tmp_path / f"{small_pillow_config.cache_key()}.npz").exists()
        assert client.pillow_usecase.execute(small_pillow_config).cache_hit


class TestColourBlindTestClient:
    def test_report(self, pairs_csv, tmp_path, small_pillow_config):
        report = ColourBlindTestClient(cache_dir=tmp_path, threads=1).test_from_path(
            str(pairs_csv), small_pillow_config, alpha=0.05
        )
        assert report.n == 50
        assert 0.0 < report.p_value <= 1.0
        assert report.reject == (report.statistic > report.quantiles[0.05])


class TestSimulationClient:
    def test_estimation_study(self, tmp_path, uniform_square_spec):
        result = SimulationClient(cache_dir=tmp_path, threads=2).estimation_study(uniform_square_spec)
        assert result.sup_error_g1.shape == (uniform_square_spec.reps,)

    def test_size_power_study(self, tmp_path, uniform_square_spec, small_pillow_config):
        spec = replace(uniform_square_spec, n=30)
        result = SimulationClient(cache_dir=tmp_path, threads=1).size_power_study(
            spec, 0.1, small_pillow_config
        )
        assert 0.0 <= result.rejection_rate <= 1.0

    def test_shrinking(self, tmp_path, uniform_square_spec):
        result = SimulationClient(cache_dir=tmp_path, threads=1).shrinking_separation_study(
            uniform_square_spec, c=1.0, delta=0.2, ladder=(40,)
        )
        assert len(result.rows) == 1

    def test_clt_check(self, tmp_path, uniform_square_spec):
        result = SimulationClient(cache_dir=tmp_path, threads=1).clt_check(uniform_square_spec, 0.5)
        assert result.reps == uniform_square_spec.reps
        assert result.asymptotic_var_lower == pytest.approx(0.9375)
