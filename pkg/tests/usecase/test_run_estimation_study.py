from dataclasses import replace

import numpy as np
import pytest

from blindpair.domain.entities import EvalGrid, GeneratorSpec, StudySpec
from blindpair.domain.services import derive_rng, estimate_marginals, ingest_pairs, sample_ordered_pairs
from blindpair.usecase import RunEstimationStudyUseCase, run_estimation_study


class TestRunEstimationStudy:
    def test_shapes(self, uniform_square_spec):
        result = run_estimation_study(uniform_square_spec)
        reps, size = uniform_square_spec.reps, len(uniform_square_spec.grid)
        assert result.sup_error_g1.shape == (reps,)
        assert result.mean_g1.shape == (size,)
        assert result.curves.g1.shape == (reps, size)
        assert np.all((result.truncation_freq >= 0) & (result.truncation_freq <= 1))

    def test_replicate_matches_direct_computation(self, uniform_square_spec):
        spec = uniform_square_spec
        result = run_estimation_study(spec)
        x, y = sample_ordered_pairs(spec.gen1, spec.gen2, spec.n, derive_rng(spec.seed, 2))
        expected = estimate_marginals(ingest_pairs(np.column_stack([x, y]).tolist()), spec.grid)
        np.testing.assert_array_equal(result.curves.g1[2], expected.g1)
        np.testing.assert_array_equal(result.curves.truncated[2], expected.truncated)

        mask = spec.s_mask()
        points = spec.grid.points[mask]
        assert result.sup_error_g1[2] == pytest.approx(np.abs(expected.g1[mask] - points**2).max())
        assert result.sup_error_g2[2] == pytest.approx(np.abs(expected.g2[mask] - points).max())

    def test_oracle_curves(self, uniform_square_spec):
        result = run_estimation_study(uniform_square_spec)
        points = uniform_square_spec.grid.points
        np.testing.assert_allclose(result.g1_true, points**2)
        np.testing.assert_allclose(result.g2_true, points)
        curves = result.curves
        # 順序が見えれば F_min = F1n + F2n - (両方 <= x), F_max = (両方 <= x)
        assert np.all(curves.f_min_n >= np.maximum(curves.f1n, curves.f2n) - 1e-15)
        assert np.all(curves.f_max_n <= np.minimum(curves.f1n, curves.f2n) + 1e-15)
        np.testing.assert_allclose(curves.f_min_n + curves.f_max_n, curves.f1n + curves.f2n)

    def test_reproducible(self, uniform_square_spec):
        a = run_estimation_study(uniform_square_spec, threads=1)
        b = run_estimation_study(uniform_square_spec, threads=4)
        assert a.to_json() == b.to_json()
        np.testing.assert_array_equal(a.curves.g2, b.curves.g2)

    def test_smoke_single_pair(self):
        spec = StudySpec(
            gen1=GeneratorSpec.beta(4, 4),
            gen2=GeneratorSpec.power(3),
            n=1,
            reps=1,
            seed=0,
            grid=EvalGrid(points=np.linspace(0, 1, 5)),
        )
        result = run_estimation_study(spec)
        assert 0.0 <= result.sup_error_g1[0] <= 1.0
        assert 0.0 <= result.sup_error_g2[0] <= 1.0

    def test_without_curves(self, uniform_square_spec):
        result = run_estimation_study(replace(uniform_square_spec, keep_curves=False))
        assert result.curves is None

    def test_explicit_mask(self, uniform_square_spec):
        mask = np.zeros(len(uniform_square_spec.grid), dtype=bool)
        result = RunEstimationStudyUseCase().execute(uniform_square_spec, s_mask=mask)
        np.testing.assert_array_equal(result.sup_error_g1, 0.0)

    def test_mask_length(self, uniform_square_spec):
        with pytest.raises(ValueError):
            RunEstimationStudyUseCase().execute(uniform_square_spec, s_mask=np.ones(3, dtype=bool))

    def test_error_decreases_with_n(self, uniform_square_spec):
        small = run_estimation_study(replace(uniform_square_spec, n=100, reps=30))
        large = run_estimation_study(replace(uniform_square_spec, n=4000, reps=30))
        assert large.median_sup_error()[0] < small.median_sup_error()[0]
