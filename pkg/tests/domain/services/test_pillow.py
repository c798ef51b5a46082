import numpy as np
import pytest

from blindpair.domain.entities import PillowConfig, PillowSample
from blindpair.domain.errors import EmptySample
from blindpair.domain.services import derive_rng, generate, pillow_field, pillow_sup_once, quantiles
from blindpair.domain.services.pillow import quantile_index, symmetrize


class ZeroStream:
    def standard_normal(self, size):
        return np.zeros(size)


def _synthetic(values):
    values = np.sort(np.asarray(values, dtype=float))
    return PillowSample(sup_values=values, config=PillowConfig(m=2, reps=len(values), seed=0))


class TestPillowField:
    @pytest.mark.parametrize("m", [2, 7, 50])
    def test_last_row_and_column_vanish(self, m):
        zeta = pillow_field(m, np.random.default_rng(m))
        assert np.abs(zeta[-1, :]).max() <= 1e-14
        assert np.abs(zeta[:, -1]).max() <= 1e-14

    def test_matches_direct_sums(self):
        m = 5
        xi = np.random.default_rng(4).standard_normal((m, m)) / m
        zeta = pillow_field(m, np.random.default_rng(4))
        eta = np.array(
            [[xi[: k + 1, : l + 1].sum() for l in range(m)] for k in range(m)]
        )
        frac = np.arange(1, m + 1) / m
        expected = (
            eta
            - frac[None, :] * eta[:, [-1]]
            - frac[:, None] * eta[[-1], :]
            + np.outer(frac, frac) * eta[-1, -1]
        )
        np.testing.assert_allclose(zeta, expected, atol=1e-14)

    def test_rejects_small_lattice(self):
        with pytest.raises(ValueError):
            pillow_field(1, np.random.default_rng(0))

    def test_mean_and_covariance(self):
        m, reps = 20, 5000
        fields = np.stack([pillow_field(m, derive_rng(17, r)) for r in range(reps)])

        for k, l in [(10, 10), (5, 15), (15, 5), (1, 1)]:
            values = fields[:, k - 1, l - 1]
            assert abs(values.mean()) <= 4 * values.std() / np.sqrt(reps)

        a = fields[:, 9, 9]
        b = fields[:, 4, 14]
        products = a * b
        expected = (min(10, 5) / m - 50 / m**2) * (min(10, 15) / m - 150 / m**2)
        assert abs(products.mean() - expected) <= 4 * products.std() / np.sqrt(reps)


class TestPillowSupOnce:
    def test_degenerate_stream(self):
        assert pillow_sup_once(10, ZeroStream()) == 0.0

    def test_symmetrized_diagonal(self):
        zeta = pillow_field(6, np.random.default_rng(8))
        np.testing.assert_array_equal(np.diag(symmetrize(zeta)), np.diag(zeta))

    def test_matches_loop_over_upper_triangle(self):
        m = 9
        zeta = pillow_field(m, np.random.default_rng(21))
        expected = max(
            abs(zeta[k, l] + zeta[l, k] - zeta[k, k]) for k in range(m) for l in range(k, m)
        )
        assert pillow_sup_once(m, np.random.default_rng(21)) == pytest.approx(expected, abs=1e-15)
        assert expected >= 0.0


class TestGenerate:
    def test_deterministic(self, small_pillow_config):
        assert generate(small_pillow_config) == generate(small_pillow_config)

    def test_independent_of_threads(self):
        config = PillowConfig(m=6, reps=300, seed=12)
        np.testing.assert_array_equal(
            generate(config, threads=1).sup_values, generate(config, threads=4).sup_values
        )

    def test_sorted_and_nonnegative(self, small_pillow_config):
        sample = generate(small_pillow_config)
        assert len(sample.sup_values) == small_pillow_config.reps
        assert np.all(np.diff(sample.sup_values) >= 0)
        assert np.all(sample.sup_values >= 0)

    def test_seed_changes_sample(self):
        a = generate(PillowConfig(m=5, reps=20, seed=0))
        b = generate(PillowConfig(m=5, reps=20, seed=1))
        assert a != b


class TestQuantiles:
    def test_index_arithmetic(self):
        assert quantile_index(0.05, 100) == 95
        assert quantile_index(0.01, 1000) == 990
        assert quantile_index(0.1, 1000) == 900
        assert quantile_index(0.5, 7) == 4

    def test_synthetic_order_statistic(self):
        table = quantiles(_synthetic(np.arange(1, 101)), [0.05])
        assert table.rows[0.05] == 95.0

    def test_median_of_symmetric_sample(self):
        table = quantiles(_synthetic([0, 1, 2, 3, 4]), [0.5])
        assert table.rows[0.5] == 2.0

    def test_thousand_replicates(self):
        values = np.arange(1, 1001) / 1000
        table = quantiles(_synthetic(values), [0.1, 0.05, 0.01])
        assert table.rows[0.01] == values[989]
        assert table.rows[0.05] == values[949]
        assert table.rows[0.1] == values[899]

    def test_nonincreasing_in_alpha(self, small_pillow_config):
        table = quantiles(generate(small_pillow_config), [0.5, 0.2, 0.1, 0.05, 0.01])
        ordered = [table.rows[a] for a in sorted(table.rows)]
        assert all(a >= b for a, b in zip(ordered, ordered[1:]))

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.1])
    def test_alpha_range(self, alpha):
        with pytest.raises(ValueError):
            quantiles(_synthetic([1.0, 2.0]), [alpha])

    def test_empty_sample(self):
        empty = PillowSample.__new__(PillowSample)
        object.__setattr__(empty, "sup_values", np.array([]))
        object.__setattr__(empty, "config", PillowConfig(m=2, reps=1, seed=0))
        with pytest.raises(EmptySample):
            quantiles(empty, [0.05])
